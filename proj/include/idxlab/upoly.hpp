#ifndef IDXLAB_UPOLY_HPP
#define IDXLAB_UPOLY_HPP

// Dense univariate polynomials over a finite field, with full factorization:
// squarefree split (characteristic-p aware), distinct-degree split by
// Frobenius powers, and seeded Cantor–Zassenhaus equal-degree splitting.
// Factor lists are sorted canonically so the output does not depend on the
// random splitting path.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fields.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace idxlab {

// uniform integer in [0, n) by rejection, portable across platforms
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do { v = rng(); } while (v >= limit);
    return v % n;
}

class UPoly {
public:
    explicit UPoly(const Field* f) : f_(f) {}
    UPoly(const Field* f, std::vector<Fq> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static UPoly x(const Field* f) { return UPoly(f, {f->zero(), f->one()}); }
    static UPoly constant(const Field* f, const Fq& c) { return UPoly(f, {c}); }

    const Field* field() const { return f_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Fq& operator[](std::size_t i) const { return c_[i]; }
    Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }
    const Fq& lead() const {
        if (c_.empty()) fail(errc::zero_polynomial, "leading coefficient of zero");
        return c_.back();
    }

    UPoly operator+(const UPoly& o) const {
        std::vector<Fq> r(std::max(c_.size(), o.c_.size()), f_->zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return UPoly(f_, std::move(r));
    }

    UPoly operator-(const UPoly& o) const {
        std::vector<Fq> r(std::max(c_.size(), o.c_.size()), f_->zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return UPoly(f_, std::move(r));
    }

    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly(f_);
        std::vector<Fq> r(c_.size() + o.c_.size() - 1, f_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return UPoly(f_, std::move(r));
    }

    UPoly operator*(const Fq& s) const {
        std::vector<Fq> r = c_;
        for (auto& x : r) x *= s;
        return UPoly(f_, std::move(r));
    }

    std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
        if (d.is_zero()) fail(errc::zero_division, "univariate division by zero");
        UPoly r = *this;
        if (r.deg() < d.deg()) return {UPoly(f_), r};
        std::vector<Fq> q(static_cast<std::size_t>(r.deg() - d.deg()) + 1, f_->zero());
        Fq inv = d.lead().inv();
        while (r.deg() >= d.deg()) {
            std::size_t shift = static_cast<std::size_t>(r.deg() - d.deg());
            Fq c = r.lead() * inv;
            q[shift] = c;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[shift + i] -= c * d.c_[i];
            r.trim();
        }
        return {UPoly(f_, std::move(q)), r};
    }

    UPoly operator%(const UPoly& d) const { return divrem(d).second; }
    UPoly operator/(const UPoly& d) const { return divrem(d).first; }

    bool operator==(const UPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * lead().inv();
    }

    Fq eval(const Fq& x) const {
        Fq acc = f_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly(f_);
        std::vector<Fq> r(c_.size() - 1, f_->zero());
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mul_int(c_[i], static_cast<long long>(i));
        return UPoly(f_, std::move(r));
    }

    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    UPoly pow_mod(const BigInt& e, const UPoly& mod) const {
        UPoly base = *this % mod;
        UPoly r = constant(f_, f_->one());
        for (std::size_t bit = boost::multiprecision::msb(e) + 1; bit-- > 0;) {
            r = (r * r) % mod;
            if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) r = (r * base) % mod;
        }
        return r;
    }

    // the g with g^p == *this; requires every exponent divisible by p
    UPoly pth_root() const {
        std::uint32_t p = f_->characteristic();
        std::uint32_t k = f_->degree();
        std::vector<Fq> r;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i % p == 0) {
                Fq c = c_[i];
                for (std::uint32_t j = 0; j + 1 < k; ++j) c = c.frobenius();
                r.push_back(c);
            } else if (!c_[i].is_zero()) {
                fail(errc::invariant_violation, "not a p-th power");
            }
        }
        return UPoly(f_, std::move(r));
    }

    bool is_pth_power() const {
        std::uint32_t p = f_->characteristic();
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (i % p != 0 && !c_[i].is_zero()) return false;
        return true;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += "+";
            std::string cs = c_[i].str();
            if (i == 0) {
                if (cs.find_first_of("+-") != std::string::npos) cs = "(" + cs + ")";
                s += cs;
                continue;
            }
            if (cs != "1") {
                if (cs.find_first_of("+-") != std::string::npos) cs = "(" + cs + ")";
                s += cs + "*";
            }
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s;
    }

    // deterministic order on monic polynomials: degree, then coefficient indices
    static bool canonical_less(const UPoly& a, const UPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            std::uint32_t ia = a.c_[i].index(), ib = b.c_[i].index();
            if (ia != ib) return ia < ib;
        }
        return false;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const Field* f_;
    std::vector<Fq> c_;
};

// view of a multivariate polynomial as univariate in variable `var`;
// every other variable must be absent
inline UPoly to_upoly(const Poly<Fq>& p, std::size_t var, const Field* f) {
    std::vector<Fq> c;
    for (const auto& [e, coef] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) fail(errc::invariant_violation, "polynomial is not univariate");
        std::size_t d = e[var];
        if (c.size() <= d) c.resize(d + 1, f->zero());
        c[d] = coef;
    }
    return UPoly(f, std::move(c));
}

struct UFactor {
    UPoly poly;
    int multiplicity;
};

namespace detail {

inline void squarefree_split(const UPoly& f, int outer, std::vector<UFactor>& out) {
    const Field* F = f.field();
    UPoly fp = f.derivative();
    UPoly c = UPoly::gcd(f, fp);
    UPoly w = (f / c).monic();
    int i = 1;
    while (!w.is_constant()) {
        UPoly y = UPoly::gcd(w, c);
        UPoly z = (w / y).monic();
        if (!z.is_constant()) out.push_back({z, outer * i});
        w = y;
        c = (c / y).monic();
        ++i;
    }
    if (!c.is_constant())
        squarefree_split(c.pth_root().monic(), outer * static_cast<int>(F->characteristic()), out);
}

inline void equal_degree_split(const UPoly& u, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
    const Field* F = u.field();
    if (u.deg() == d) {
        out.push_back(u.monic());
        return;
    }
    std::uint32_t q = F->size();
    for (;;) {
        std::vector<Fq> rc;
        for (int i = 0; i < u.deg(); ++i) rc.push_back(F->element(uniform_index(rng, q)));
        UPoly r(F, std::move(rc));
        if (r.is_constant()) continue;
        UPoly t(F);
        if (q % 2 == 1) {
            BigInt e = (boost::multiprecision::pow(BigInt(q), d) - 1) / 2;
            UPoly s = r.pow_mod(e, u);
            t = UPoly::gcd(s - UPoly::constant(F, F->one()), u);
        } else {
            // trace map over F_2 splits in characteristic 2
            unsigned bits = 0;
            for (std::uint32_t v = q; v > 1; v >>= 1) ++bits;
            UPoly s = r % u;
            UPoly acc = s;
            for (unsigned i = 1; i < bits * static_cast<unsigned>(d); ++i) {
                s = (s * s) % u;
                acc = acc + s;
            }
            t = UPoly::gcd(acc, u);
        }
        if (t.deg() > 0 && t.deg() < u.deg()) {
            equal_degree_split(t, d, rng, out);
            equal_degree_split((u / t).monic(), d, rng, out);
            return;
        }
    }
}

} // namespace detail

// full factorization over F_q: unit * product of monic irreducibles
inline std::vector<UFactor> univar_factor(const UPoly& f, std::uint64_t seed = 0x1d71ab) {
    if (f.is_zero()) fail(errc::zero_polynomial, "factoring the zero polynomial");
    std::vector<UFactor> sqf;
    if (f.deg() > 0) detail::squarefree_split(f.monic(), 1, sqf);
    std::mt19937_64 rng(seed);
    std::vector<UFactor> out;
    for (const auto& [g, mult] : sqf) {
        // distinct-degree split
        const Field* F = g.field();
        UPoly rest = g;
        UPoly h = UPoly::x(F) % rest;
        int d = 0;
        while (rest.deg() > 0) {
            ++d;
            if (2 * d > rest.deg()) {
                std::vector<UPoly> irr;
                detail::equal_degree_split(rest, rest.deg(), rng, irr);
                for (auto& u : irr) out.push_back({u, mult});
                break;
            }
            h = h.pow_mod(BigInt(F->size()), rest);
            UPoly u = UPoly::gcd(h - UPoly::x(F), rest);
            if (u.deg() > 0) {
                std::vector<UPoly> irr;
                detail::equal_degree_split(u, d, rng, irr);
                for (auto& w : irr) out.push_back({w, mult});
                rest = (rest / u).monic();
                h = h % rest;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const UFactor& a, const UFactor& b) {
        if (a.poly.deg() != b.poly.deg() || !(a.poly == b.poly))
            return UPoly::canonical_less(a.poly, b.poly);
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

// roots in the coefficient field, with multiplicities, sorted by element index
inline std::vector<std::pair<Fq, int>> upoly_roots(const UPoly& f, std::uint64_t seed = 0x1d71ab) {
    std::vector<std::pair<Fq, int>> r;
    for (const auto& [g, mult] : univar_factor(f, seed))
        if (g.deg() == 1) r.emplace_back(-g[0], mult);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first.index() < b.first.index(); });
    return r;
}

inline bool upoly_irreducible(const UPoly& f, std::uint64_t seed = 0x1d71ab) {
    if (f.deg() < 1) return false;
    auto fs = univar_factor(f, seed);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

} // namespace idxlab

#endif
