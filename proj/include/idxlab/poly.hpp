#ifndef IDXLAB_POLY_HPP
#define IDXLAB_POLY_HPP

// Sparse multivariate polynomials with exact coefficients over a named,
// ordered variable list.  Terms are kept in graded reverse lexicographic
// order (largest first), which fixes serialization and leading terms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace idxlab {

using Expo = std::vector<std::uint16_t>;

inline unsigned expo_degree(const Expo& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

// strict "greater-than" in grevlex: higher total degree wins, ties are broken
// by the last differing exponent being smaller
struct GrevlexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        unsigned da = expo_degree(a), db = expo_degree(b);
        if (da != db) return da > db;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

template <class C>
class Poly {
public:
    using Terms = std::map<Expo, C, GrevlexGreater>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly monomial(std::vector<std::string> vars, Expo e, C c) {
        Poly r(std::move(vars));
        if (e.size() != r.vars_.size()) fail(errc::invariant_violation, "exponent arity mismatch");
        if (!c.is_zero()) r.t_.emplace(std::move(e), std::move(c));
        return r;
    }

    static Poly constant(std::vector<std::string> vars, C c) {
        Expo e(vars.size(), 0);
        return monomial(std::move(vars), std::move(e), std::move(c));
    }

    static Poly variable(std::vector<std::string> vars, std::size_t i, C one) {
        Expo e(vars.size(), 0);
        e.at(i) = 1;
        return monomial(std::move(vars), std::move(e), std::move(one));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(expo_degree(e)));
        return d;
    }

    // smallest total degree among terms; -1 for the zero polynomial
    int order() const {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int de = static_cast<int>(expo_degree(e));
            if (d < 0 || de < d) d = de;
        }
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int de = static_cast<int>(expo_degree(e));
            if (d >= 0 && de != d) return false;
            d = de;
        }
        return true;
    }

    bool constant_term_is_zero() const {
        Expo z(vars_.size(), 0);
        return t_.find(z) == t_.end();
    }

    Poly operator+(const Poly& o) const {
        check_ring(o);
        Poly r = *this;
        for (const auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }

    Poly operator-(const Poly& o) const {
        check_ring(o);
        Poly r = *this;
        for (const auto& [e, c] : o.t_) r.add_term(e, -c);
        return r;
    }

    Poly operator-() const {
        Poly r(vars_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_ring(o);
        Poly r(vars_);
        for (const auto& [ea, ca] : t_)
            for (const auto& [eb, cb] : o.t_) {
                Expo e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    Poly operator*(const C& c) const {
        Poly r(vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, ce] : t_) r.add_term(e, ce * c);
        return r;
    }

    Poly pow(unsigned n) const {
        if (n == 0) {
            if (t_.empty()) fail(errc::invariant_violation, "0^0 of the zero polynomial");
            return constant(vars_, one_like(t_.begin()->second));
        }
        Poly r = *this;
        for (unsigned i = 1; i < n; ++i) r = r * *this;
        return r;
    }

    C eval(const std::vector<C>& point) const {
        if (point.size() != vars_.size()) fail(errc::invariant_violation, "point arity mismatch");
        std::optional<C> acc;
        for (const auto& [e, c] : t_) {
            C term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned j = 0; j < e[i]; ++j) term = term * point[i];
            acc = acc ? *acc + term : term;
        }
        if (acc) return *acc;
        if (!point.empty()) return zero_like(point[0]);
        if (!t_.empty()) return zero_like(t_.begin()->second);
        fail(errc::invariant_violation, "cannot type the value of an empty evaluation");
    }

    // substitute variable i by an arbitrary polynomial in the same ring (Horner)
    Poly subst_var(std::size_t i, const Poly& repl) const {
        check_ring(repl);
        std::map<unsigned, Poly> slices; // exponent of x_i -> remaining polynomial
        unsigned top = 0;
        for (const auto& [e, c] : t_) {
            Expo r = e;
            unsigned d = r.at(i);
            r[i] = 0;
            top = std::max(top, d);
            auto [it, fresh] = slices.try_emplace(d, vars_);
            it->second.add_term(std::move(r), c);
        }
        Poly acc(vars_);
        for (unsigned d = top + 1; d-- > 0;) {
            acc = acc * repl;
            auto it = slices.find(d);
            if (it != slices.end()) acc = acc + it->second;
        }
        return acc;
    }

    // substitute variable i by a constant
    Poly subst_const(std::size_t i, const C& value) const {
        Poly r(vars_);
        for (const auto& [e, c] : t_) {
            C cc = c;
            for (unsigned j = 0; j < e.at(i); ++j) cc = cc * value;
            Expo er = e;
            er[i] = 0;
            r.add_term(std::move(er), std::move(cc));
        }
        return r;
    }

    // x_j -> x_j + a_j for every j
    Poly translate(const std::vector<C>& shift) const {
        if (shift.size() != vars_.size()) fail(errc::invariant_violation, "shift arity mismatch");
        Poly r = *this;
        for (std::size_t i = 0; i < shift.size(); ++i) {
            if (shift[i].is_zero()) continue;
            Poly lin = variable(vars_, i, one_like(shift[i])) + constant(vars_, shift[i]);
            r = r.subst_var(i, lin);
        }
        return r;
    }

    Poly derivative(std::size_t i) const {
        Poly r(vars_);
        for (const auto& [e, c] : t_) {
            if (e.at(i) == 0) continue;
            Expo er = e;
            er[i] = static_cast<std::uint16_t>(er[i] - 1);
            r.add_term(std::move(er), mul_int(c, e[i]));
        }
        return r;
    }

    Poly lowest_form() const {
        int d = order();
        Poly r(vars_);
        for (const auto& [e, c] : t_)
            if (static_cast<int>(expo_degree(e)) == d) r.t_.emplace(e, c);
        return r;
    }

    // terms of total degree < n
    Poly truncate_below(int n) const {
        Poly r(vars_);
        for (const auto& [e, c] : t_)
            if (static_cast<int>(expo_degree(e)) < n) r.t_.emplace(e, c);
        return r;
    }

    std::pair<Expo, C> leading_term() const {
        if (t_.empty()) fail(errc::zero_polynomial, "leading term of zero");
        return *t_.begin();
    }

    // division by a single divisor; the remainder has no term divisible by LT(g)
    std::pair<Poly, Poly> divrem(const Poly& g) const {
        check_ring(g);
        if (g.is_zero()) fail(errc::zero_division, "polynomial division by zero");
        auto [lg, cg] = g.leading_term();
        C cg_inv = one_like(cg) / cg;
        Poly q(vars_), r(vars_), cur = *this;
        while (!cur.t_.empty()) {
            auto [e, c] = *cur.t_.begin();
            bool div = true;
            Expo de(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < lg[i]) { div = false; break; }
                de[i] = static_cast<std::uint16_t>(e[i] - lg[i]);
            }
            if (!div) {
                r.add_term(e, c);
                cur.t_.erase(cur.t_.begin());
                continue;
            }
            C qc = c * cg_inv;
            q.add_term(de, qc);
            cur = cur - monomial(vars_, std::move(de), std::move(qc)) * g;
        }
        return {q, r};
    }

    bool divisible_by(const Poly& g) const { return divrem(g).second.is_zero(); }

    // exact division; raises if the division leaves a remainder
    Poly exact_div(const Poly& g) const {
        auto [q, r] = divrem(g);
        if (!r.is_zero()) fail(errc::invariant_violation, "division was not exact");
        return q;
    }

    // the constant c with *this == c * g, if one exists
    std::optional<C> scalar_ratio(const Poly& g) const {
        check_ring(g);
        if (t_.size() != g.t_.size()) return std::nullopt;
        std::optional<C> ratio;
        auto it = t_.begin();
        auto jt = g.t_.begin();
        for (; it != t_.end(); ++it, ++jt) {
            if (it->first != jt->first) return std::nullopt;
            C c = it->second / jt->second;
            if (ratio && !(*ratio == c)) return std::nullopt;
            ratio = c;
        }
        return ratio;
    }

    Poly swap_vars(std::size_t i, std::size_t j) const {
        Poly r(vars_);
        for (const auto& [e, c] : t_) {
            Expo er = e;
            std::swap(er.at(i), er.at(j));
            r.t_.emplace(std::move(er), c);
        }
        return r;
    }

    // remove a variable that occurs in no term
    Poly drop_var(std::size_t i) const {
        std::vector<std::string> nv = vars_;
        nv.erase(nv.begin() + static_cast<long>(i));
        Poly r(nv);
        for (const auto& [e, c] : t_) {
            if (e.at(i) != 0) fail(errc::invariant_violation, "variable still occurs");
            Expo er = e;
            er.erase(er.begin() + static_cast<long>(i));
            r.t_.emplace(std::move(er), c);
        }
        return r;
    }

    // append a fresh variable at the end (exponent 0 everywhere)
    Poly extend_vars(const std::string& name) const {
        std::vector<std::string> nv = vars_;
        nv.push_back(name);
        Poly r(nv);
        for (const auto& [e, c] : t_) {
            Expo er = e;
            er.push_back(0);
            r.t_.emplace(std::move(er), c);
        }
        return r;
    }

    template <class F>
    auto map_coeffs(std::vector<std::string> vars, F&& f) const {
        using C2 = decltype(f(t_.begin()->second));
        Poly<C2> r(std::move(vars));
        for (const auto& [e, c] : t_) r.add_term(e, f(c));
        return r;
    }

    bool operator==(const Poly& o) const { return vars_ == o.vars_ && t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : t_) {
            std::string cs = c.str();
            bool negated = false;
            if (cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                cs.find('-', 1) == std::string::npos) {
                cs = cs.substr(1);
                negated = true;
            }
            if (s.empty()) {
                if (negated) s += "-";
            } else {
                s += negated ? "-" : "+";
            }
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                if (cs.find_first_of("+-") != std::string::npos) cs = "(" + cs + ")";
                s += cs;
            } else {
                if (cs != "1") {
                    if (cs.find_first_of("+-") != std::string::npos) cs = "(" + cs + ")";
                    s += cs + "*";
                }
                s += mono;
            }
        }
        return s;
    }

    void add_term(Expo e, C c) {
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

private:
    void check_ring(const Poly& o) const {
        if (vars_ != o.vars_) fail(errc::invariant_violation, "polynomials in different rings");
    }

    std::vector<std::string> vars_;
    Terms t_;
};

} // namespace idxlab

#endif
