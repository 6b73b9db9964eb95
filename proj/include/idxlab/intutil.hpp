#ifndef IDXLAB_INTUTIL_HPP
#define IDXLAB_INTUTIL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace idxlab {

// gcd over a list, with gcd() = 0 so a single value v yields v.
inline long long gcd_of_list(const std::vector<long long>& xs) {
    long long g = 0;
    for (long long x : xs) g = std::gcd(g, x);
    return g;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t checked_pow(std::uint64_t b, unsigned e, std::uint64_t cap) {
    std::uint64_t r = 1;
    while (e--) {
        if (b != 0 && r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// number of monomials of total degree < n in r variables
inline long long monomials_below(int n, int r) { return binomial(n - 1 + r, r); }

} // namespace idxlab

#endif
