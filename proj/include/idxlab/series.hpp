#ifndef IDXLAB_SERIES_HPP
#define IDXLAB_SERIES_HPP

// Truncated power series in one parameter over a finite field, reusing the
// dense univariate representation, plus the Newton iteration that lifts a
// simple root of a bivariate polynomial to a series solution.

#include <optional>
#include <string>

#include "poly.hpp"
#include "upoly.hpp"

namespace idxlab {

inline UPoly series_trunc(const UPoly& a, int n) {
    std::vector<Fq> c;
    for (int i = 0; i < n && i <= a.deg(); ++i) c.push_back(a.coeff(static_cast<std::size_t>(i)));
    return UPoly(a.field(), std::move(c));
}

inline UPoly series_mul(const UPoly& a, const UPoly& b, int n) { return series_trunc(a * b, n); }

// inverse of a unit series mod t^n
inline UPoly series_inv(const UPoly& a, int n) {
    const Field* F = a.field();
    if (a.is_zero() || a.coeff(0).is_zero()) fail(errc::zero_division, "series has no inverse");
    Fq a0i = a.coeff(0).inv();
    std::vector<Fq> b{a0i};
    for (int j = 1; j < n; ++j) {
        Fq s = F->zero();
        for (int i = 1; i <= j; ++i) s += a.coeff(static_cast<std::size_t>(i)) * b[static_cast<std::size_t>(j - i)];
        b.push_back(-(a0i * s));
    }
    return UPoly(F, std::move(b));
}

// f(u, t) evaluated at a series u(t), mod t^n; f has exactly two variables,
// the unknown first and the parameter second
inline UPoly series_eval_bivariate(const Poly<Fq>& f, const UPoly& u, int n) {
    const Field* F = u.field();
    if (f.vars().size() != 2) fail(errc::invariant_violation, "series evaluation needs two variables");
    // powers of u by increasing exponent
    std::vector<UPoly> up{UPoly::constant(F, F->one())};
    UPoly acc(F);
    for (const auto& [e, c] : f.terms()) {
        while (up.size() <= e[0]) up.push_back(series_mul(up.back(), u, n));
        if (e[1] >= static_cast<unsigned>(n)) continue;
        std::vector<Fq> shifted(e[1], F->zero());
        shifted.push_back(c);
        acc = acc + series_mul(up[e[0]], UPoly(F, std::move(shifted)), n);
    }
    return series_trunc(acc, n);
}

// Newton lift of a simple root: u0 with f(u0, 0) = 0 and df/du(u0, 0) != 0
// extends to the unique series u(t) = u0 + ... with f(u(t), t) = 0 mod t^n
inline std::optional<UPoly> series_newton_root(const Poly<Fq>& f, const Fq& u0, int n) {
    const Field* F = u0.field_ptr();
    Poly<Fq> fu = f.derivative(0);
    UPoly u = UPoly::constant(F, u0);
    if (!series_eval_bivariate(f, u, 1).is_zero()) return std::nullopt;
    if (series_eval_bivariate(fu, u, 1).is_zero()) return std::nullopt;
    for (int prec = 1; prec < n;) {
        prec = std::min(2 * prec, n);
        UPoly val = series_eval_bivariate(f, u, prec);
        UPoly der = series_eval_bivariate(fu, u, prec);
        u = series_trunc(u - series_mul(val, series_inv(der, prec), prec), prec);
    }
    if (!series_eval_bivariate(f, u, n).is_zero())
        fail(errc::invariant_violation, "newton iteration failed to converge");
    return u;
}

} // namespace idxlab

#endif
