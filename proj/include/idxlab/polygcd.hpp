#ifndef IDXLAB_POLYGCD_HPP
#define IDXLAB_POLYGCD_HPP

// Multivariate gcd by primitive pseudo-remainder sequences, and the reduced
// (radical) part of a polynomial over a perfect field: repeated factors and
// p-th power structure are stripped, which is what quadratic-transform
// resolution and component coprimality checks need.

#include <map>

#include "fields.hpp"
#include "poly.hpp"

namespace idxlab {

using PolyFq = Poly<Fq>;

inline int degree_in(const PolyFq& f, std::size_t i) {
    int d = -1;
    for (const auto& [e, c] : f.terms()) d = std::max(d, static_cast<int>(e[i]));
    return d;
}

// divide by the leading grevlex coefficient
inline PolyFq poly_normalize(const PolyFq& f) {
    if (f.is_zero()) return f;
    auto [e, c] = f.leading_term();
    return f * c.inv();
}

namespace detail {

// coefficient polynomials of f seen as univariate in x_i (exponent of x_i zeroed)
inline std::map<unsigned, PolyFq> slices_in(const PolyFq& f, std::size_t i) {
    std::map<unsigned, PolyFq> s;
    for (const auto& [e, c] : f.terms()) {
        Expo r = e;
        unsigned d = r[i];
        r[i] = 0;
        auto [it, fresh] = s.try_emplace(d, f.vars());
        it->second.add_term(std::move(r), c);
    }
    return s;
}

inline PolyFq lead_in(const PolyFq& f, std::size_t i) {
    auto s = slices_in(f, i);
    return s.rbegin()->second;
}

} // namespace detail

inline PolyFq poly_gcd(PolyFq a, PolyFq b);

namespace detail {

inline PolyFq content_in(const PolyFq& f, std::size_t i) {
    PolyFq c(f.vars());
    for (const auto& [d, s] : slices_in(f, i)) c = poly_gcd(c, s);
    return c;
}

} // namespace detail

inline PolyFq poly_gcd(PolyFq a, PolyFq b) {
    if (a.is_zero()) return poly_normalize(b);
    if (b.is_zero()) return poly_normalize(a);
    std::size_t nvars = a.vars().size();
    int main = -1;
    for (std::size_t i = nvars; i-- > 0;)
        if (degree_in(a, i) > 0 || degree_in(b, i) > 0) { main = static_cast<int>(i); break; }
    if (main < 0) {
        auto one = one_like(a.leading_term().second);
        return PolyFq::constant(a.vars(), one);
    }
    std::size_t v = static_cast<std::size_t>(main);
    PolyFq ca = detail::content_in(a, v);
    PolyFq cb = detail::content_in(b, v);
    PolyFq cont = poly_gcd(ca, cb);
    PolyFq A = a.exact_div(ca);
    PolyFq B = b.exact_div(cb);
    if (degree_in(A, v) < degree_in(B, v)) std::swap(A, B);
    while (!B.is_zero()) {
        // pseudo-remainder of A by B in x_v
        PolyFq R = A;
        PolyFq lb = detail::lead_in(B, v);
        while (!R.is_zero() && degree_in(R, v) >= degree_in(B, v)) {
            int shift = degree_in(R, v) - degree_in(B, v);
            PolyFq lr = detail::lead_in(R, v);
            Expo xs(nvars, 0);
            xs[v] = static_cast<std::uint16_t>(shift);
            PolyFq xpow = PolyFq::monomial(a.vars(), xs, one_like(lr.leading_term().second));
            R = R * lb - B * (lr * xpow);
        }
        A = B;
        B = R.is_zero() ? R : R.exact_div(detail::content_in(R, v));
    }
    return poly_normalize(cont * A.exact_div(detail::content_in(A, v)));
}

// the p-th root of a polynomial all of whose exponents are divisible by p
inline PolyFq poly_pth_root(const PolyFq& f, const Field* F) {
    std::uint32_t p = F->characteristic();
    PolyFq r(f.vars());
    for (const auto& [e, c] : f.terms()) {
        Expo er = e;
        for (auto& x : er) {
            if (x % p != 0) fail(errc::invariant_violation, "not a p-th power");
            x = static_cast<std::uint16_t>(x / p);
        }
        Fq cc = c;
        for (std::uint32_t j = 0; j + 1 < F->degree(); ++j) cc = cc.frobenius();
        r.add_term(std::move(er), cc);
    }
    return r;
}

inline bool poly_is_pth_power(const PolyFq& f, const Field* F) {
    std::uint32_t p = F->characteristic();
    for (const auto& [e, c] : f.terms())
        for (auto x : e)
            if (x % p != 0) return false;
    return true;
}

// product of the distinct irreducible factors, each once
inline PolyFq poly_radical(PolyFq f, const Field* F) {
    if (f.is_zero()) fail(errc::zero_polynomial, "radical of zero");
    f = poly_normalize(f);
    if (f.total_degree() == 0) return f;
    bool any_partial = false;
    PolyFq c = f;
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
        PolyFq d = f.derivative(i);
        if (!d.is_zero()) { any_partial = true; c = poly_gcd(c, d); }
    }
    if (!any_partial) return poly_radical(poly_pth_root(f, F), F);
    PolyFq w = poly_normalize(f.exact_div(c));
    PolyFq r = f;
    for (;;) {
        PolyFq g = poly_gcd(r, w);
        if (g.total_degree() <= 0) break;
        r = r.exact_div(g);
    }
    if (r.total_degree() <= 0) return w;
    return poly_normalize(w * poly_radical(poly_pth_root(r, F), F));
}

} // namespace idxlab

#endif
