#ifndef IDXLAB_FERMAT_HPP
#define IDXLAB_FERMAT_HPP

// Exact split of x^p + (1-x)^p - 1 over the rationals: for an odd prime
// p >= 5 the polynomial is divisible by x(x-1)(x^2-x+1)^b with b = 1 when
// p = 2 mod 3 and b = 2 when p = 1 mod 3; the quotient is returned exactly.

#include <string>
#include <vector>

#include "intutil.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace idxlab {

struct FermatReport {
    long long p = 0;
    int b = 0;
    Poly<Rational> quotient;
    int quotient_degree = -1;
    bool remainder_zero = false;
};

inline FermatReport fermat_split(long long p) {
    if (p < 5 || !is_prime(static_cast<std::uint64_t>(p)))
        fail(errc::not_prime, "the split needs a prime p >= 5");
    std::vector<std::string> vars{"x"};
    auto C = [&](long long n) { return Poly<Rational>::constant(vars, Rational(n)); };
    Poly<Rational> x = Poly<Rational>::variable(vars, 0, Rational(1));
    Poly<Rational> f = x.pow(static_cast<unsigned>(p)) + (C(1) - x).pow(static_cast<unsigned>(p)) - C(1);
    int b = (p % 3 == 2) ? 1 : 2;
    Poly<Rational> divisor =
        x * (x - C(1)) * (x * x - x + C(1)).pow(static_cast<unsigned>(b));
    auto [q, r] = f.divrem(divisor);
    FermatReport rep;
    rep.p = p;
    rep.b = b;
    rep.quotient = q;
    rep.quotient_degree = q.total_degree();
    rep.remainder_zero = r.is_zero();
    return rep;
}

} // namespace idxlab

#endif
