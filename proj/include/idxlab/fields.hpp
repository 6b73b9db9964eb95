#ifndef IDXLAB_FIELDS_HPP
#define IDXLAB_FIELDS_HPP

// Finite fields F_q, q = p^k, with exact arithmetic on coordinate vectors over
// F_p.  Extensions use the first irreducible monic modulus in the canonical
// enumeration order (constant coefficient = least significant digit), so two
// calls with the same (p, k) always agree.  Field objects are interned and
// immutable; elements carry a pointer to their field and never outlive the
// registry.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "intutil.hpp"

namespace idxlab {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr unsigned kMaxExtensionDegree = 8;
inline constexpr std::uint64_t kMaxFieldSize = 1u << 16;

using Coords = std::array<std::uint16_t, kMaxExtensionDegree>;

class Fq;

class Field : public std::enable_shared_from_this<Field> {
public:
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t size() const { return q_; }
    bool is_prime_field() const { return k_ == 1; }

    // monic modulus coefficients c_0..c_k over F_p (k >= 2 only)
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    std::string name() const {
        return "F_" + std::to_string(q_);
    }

    inline Fq element(std::uint64_t index) const;
    inline Fq from_int(long long v) const;
    inline Fq zero() const;
    inline Fq one() const;
    inline Fq generator() const; // class of the modulus variable, k >= 2

    static FieldPtr intern(std::uint32_t p, std::uint32_t k);

private:
    friend class Fq;
    struct Key {};

public:
    Field(Key, std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
        q_ = 1;
        for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
        if (k_ >= 2) mod_ = find_modulus(p_, k_);
    }

private:
    // --- arithmetic on raw coordinate arrays -------------------------------

    std::uint32_t p_, k_, q_;
    std::vector<std::uint32_t> mod_;

    Coords add(const Coords& a, const Coords& b) const {
        Coords r{};
        for (std::uint32_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint16_t>((a[i] + b[i]) % p_);
        return r;
    }

    Coords sub(const Coords& a, const Coords& b) const {
        Coords r{};
        for (std::uint32_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint16_t>((a[i] + p_ - b[i]) % p_);
        return r;
    }

    Coords neg(const Coords& a) const {
        Coords r{};
        for (std::uint32_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint16_t>((p_ - a[i]) % p_);
        return r;
    }

    Coords mul(const Coords& a, const Coords& b) const {
        std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
        for (std::uint32_t i = 0; i < k_; ++i) {
            if (!a[i]) continue;
            for (std::uint32_t j = 0; j < k_; ++j)
                acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
        }
        // reduce by the monic modulus
        for (int d = 2 * static_cast<int>(k_) - 2; d >= static_cast<int>(k_); --d) {
            std::uint64_t c = acc[d] % p_;
            if (!c) continue;
            acc[d] = 0;
            for (std::uint32_t i = 0; i < k_; ++i)
                acc[d - k_ + i] += c * (p_ - mod_[i] % p_);
        }
        Coords r{};
        for (std::uint32_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint16_t>(acc[i] % p_);
        return r;
    }

    Coords pow(Coords a, std::uint64_t e) const {
        Coords r{};
        r[0] = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    bool is_zero(const Coords& a) const {
        for (std::uint32_t i = 0; i < k_; ++i)
            if (a[i]) return false;
        return true;
    }

    // --- canonical modulus search ------------------------------------------

    // dense univariate arithmetic over F_p, used only for the modulus search
    using PV = std::vector<std::uint32_t>;

    static PV pv_trim(PV a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        return a;
    }

    static PV pv_mod(PV a, const PV& b, std::uint32_t p) {
        // b monic
        a = pv_trim(std::move(a));
        while (a.size() >= b.size()) {
            std::uint32_t c = a.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + static_cast<std::uint64_t>(c) * (p - b[i] % p)) % p;
            a = pv_trim(std::move(a));
        }
        return a;
    }

    // irreducibility by exhaustive absence of monic factors of degree <= k/2
    static bool pv_irreducible(const PV& f, std::uint32_t p) {
        std::uint32_t k = static_cast<std::uint32_t>(f.size()) - 1;
        for (std::uint32_t d = 1; 2 * d <= k; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t m = 0; m < count; ++m) {
                PV g(d + 1, 0);
                std::uint64_t t = m;
                for (std::uint32_t i = 0; i < d; ++i) { g[i] = t % p; t /= p; }
                g[d] = 1;
                if (pv_mod(f, g, p).empty()) return false;
            }
        }
        return true;
    }

    static std::vector<std::uint32_t> find_modulus(std::uint32_t p, std::uint32_t k) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            PV f(k + 1, 0);
            std::uint64_t t = m;
            for (std::uint32_t i = 0; i < k; ++i) { f[i] = static_cast<std::uint32_t>(t % p); t /= p; }
            f[k] = 1;
            if (pv_irreducible(f, p)) return f;
        }
        fail(errc::invariant_violation, "no irreducible modulus found");
    }
};

class Fq {
public:
    Fq() : f_(nullptr), c_{} {}

    const Field& field() const {
        if (!f_) fail(errc::field_mismatch, "element has no field");
        return *f_;
    }
    const Field* field_ptr() const { return f_; }

    bool is_zero() const { return field().is_zero(c_); }

    Fq operator+(const Fq& o) const { return Fq(same(o), field().add(c_, o.c_)); }
    Fq operator-(const Fq& o) const { return Fq(same(o), field().sub(c_, o.c_)); }
    Fq operator-() const { return Fq(f_, field().neg(c_)); }
    Fq operator*(const Fq& o) const { return Fq(same(o), field().mul(c_, o.c_)); }

    Fq inv() const {
        if (is_zero()) fail(errc::zero_division, "inverse of zero in " + f_->name());
        return Fq(f_, f_->pow(c_, f_->size() - 2));
    }

    Fq operator/(const Fq& o) const { return *this * o.inv(); }

    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }

    bool operator==(const Fq& o) const { return same(o), c_ == o.c_; }
    bool operator!=(const Fq& o) const { return !(*this == o); }

    Fq pow(std::uint64_t e) const { return Fq(f_, field().pow(c_, e)); }

    // x -> x^p, the arithmetic Frobenius of the prime field
    Fq frobenius() const { return pow(field().characteristic()); }

    std::uint32_t index() const {
        std::uint32_t r = 0;
        for (int i = static_cast<int>(field().degree()) - 1; i >= 0; --i)
            r = r * f_->characteristic() + c_[static_cast<std::size_t>(i)];
        return r;
    }

    std::string str() const {
        const auto& F = field();
        if (F.is_prime_field()) return std::to_string(c_[0]);
        std::string s;
        for (int i = static_cast<int>(F.degree()) - 1; i >= 0; --i) {
            std::uint32_t c = c_[static_cast<std::size_t>(i)];
            if (!c) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(c);
            } else {
                if (c != 1) s += std::to_string(c) + "*";
                s += "g";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    friend class Field;
    friend class Embedding;

    Fq(const Field* f, Coords c) : f_(f), c_(c) {}

    const Field* same(const Fq& o) const {
        if (f_ != o.f_) fail(errc::field_mismatch, "elements of different fields");
        return f_;
    }

    const Field* f_;
    Coords c_;
};

inline Fq Field::element(std::uint64_t index) const {
    if (index >= q_) fail(errc::invariant_violation, "element index out of range");
    Coords c{};
    for (std::uint32_t i = 0; i < k_; ++i) { c[i] = static_cast<std::uint16_t>(index % p_); index /= p_; }
    return Fq(this, c);
}

inline Fq Field::from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    Coords c{};
    c[0] = static_cast<std::uint16_t>(m);
    return Fq(this, c);
}

inline Fq Field::zero() const { return Fq(this, Coords{}); }

inline Fq Field::one() const { return from_int(1); }

inline Fq Field::generator() const {
    if (k_ < 2) fail(errc::invariant_violation, "prime field has no extension generator");
    Coords c{};
    c[1] = 1;
    return Fq(this, c);
}

inline FieldPtr Field::intern(std::uint32_t p, std::uint32_t k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    auto f = std::make_shared<Field>(Key{}, p, k);
    registry[key] = f;
    return f;
}

inline FieldPtr make_prime_field(std::uint64_t p) {
    if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
    if (p > kMaxFieldSize) fail(errc::field_too_large, "prime exceeds the field size cap");
    return Field::intern(static_cast<std::uint32_t>(p), 1);
}

inline FieldPtr make_extension(const FieldPtr& base, unsigned k) {
    if (!base->is_prime_field()) fail(errc::invariant_violation, "extension base must be a prime field");
    if (k < 1 || k > kMaxExtensionDegree) fail(errc::degree_too_large, "extension degree out of range");
    if (checked_pow(base->characteristic(), k, kMaxFieldSize) > kMaxFieldSize)
        fail(errc::field_too_large, "field size cap exceeded");
    if (k == 1) return base;
    return Field::intern(base->characteristic(), k);
}

// Ring embedding F_{p^j} -> F_{p^k} for j | k, determined by sending the
// source generator to the first root of the source modulus in the target
// (enumeration order), so repeated calls agree.
class Embedding {
public:
    Embedding(const FieldPtr& src, const FieldPtr& dst) : src_(src.get()), dst_(dst.get()) {
        if (src_->characteristic() != dst_->characteristic())
            fail(errc::no_embedding, "different characteristics");
        if (dst_->degree() % src_->degree() != 0)
            fail(errc::no_embedding, src_->name() + " does not embed in " + dst_->name());
        if (src_->is_prime_field()) return;
        Fq beta = dst_->zero();
        bool found = false;
        for (std::uint32_t i = 0; i < dst_->size(); ++i) {
            Fq x = dst_->element(i);
            Fq acc = dst_->zero();
            const auto& mod = src_->modulus();
            for (int d = static_cast<int>(mod.size()) - 1; d >= 0; --d)
                acc = acc * x + dst_->from_int(mod[static_cast<std::size_t>(d)]);
            if (acc.is_zero()) { beta = x; found = true; break; }
        }
        if (!found) fail(errc::no_embedding, "modulus has no root in target");
        Fq bp = dst_->one();
        for (std::uint32_t i = 0; i < src_->degree(); ++i) { beta_pow_.push_back(bp); bp = bp * beta; }
    }

    Fq operator()(const Fq& e) const {
        if (e.field_ptr() != src_) fail(errc::field_mismatch, "element not in embedding source");
        if (src_->is_prime_field()) return dst_->from_int(e.index());
        Fq acc = dst_->zero();
        for (std::uint32_t i = 0; i < src_->degree(); ++i)
            acc += dst_->from_int(e.c_[i]) * beta_pow_[i];
        return acc;
    }

    const Field* src() const { return src_; }
    const Field* dst() const { return dst_; }

private:
    const Field* src_;
    const Field* dst_;
    std::vector<Fq> beta_pow_;
};

inline Fq zero_like(const Fq& x) { return x.field().zero(); }
inline Fq one_like(const Fq& x) { return x.field().one(); }
inline Fq mul_int(const Fq& x, long long n) { return x * x.field().from_int(n); }

inline Fq embed_element(const Fq& e, const FieldPtr& target) {
    if (e.field_ptr() == target.get()) return e;
    Embedding emb(e.field().is_prime_field() ? Field::intern(e.field().characteristic(), 1)
                                             : Field::intern(e.field().characteristic(), e.field().degree()),
                  target);
    return emb(e);
}

} // namespace idxlab

#endif
