#ifndef IDXLAB_CENSUS_HPP
#define IDXLAB_CENSUS_HPP

// Closed-point census over a finite base field: geometric point counts N_d,
// closed points of exact degree d peeled off by Frobenius orbits, gcd and
// minimum of the realized degree set, and a regular-locus-only variant.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "intutil.hpp"
#include "linalg.hpp"
#include "variety.hpp"

namespace idxlab {

inline constexpr std::uint64_t kEnumerationCap = 100000000ull; // 1e8 raw tuples

namespace detail {

struct ExtScope {
    FieldPtr ext;
    Embedding emb;
    std::vector<Poly<Fq>> gens;
    ExtScope(const Variety& v, int d)
        : ext(d == 1 ? v.field
                     : make_extension(make_prime_field(v.field->characteristic()),
                                      v.field->degree() * d)),
          emb(v.field, ext) {
        for (const auto& g : v.ideal)
            gens.push_back(g.map_coeffs(v.vars, [&](const Fq& c) { return emb(c); }));
    }
};

inline bool point_on(const std::vector<Poly<Fq>>& gens, const std::vector<Fq>& pt) {
    for (const auto& g : gens)
        if (!g.eval(pt).is_zero()) return false;
    return true;
}

} // namespace detail

// all F_{q^d}-points; projective varieties yield normalized representatives
// (first nonzero coordinate scaled to 1)
inline std::vector<std::vector<Fq>> enumerate_points(const Variety& v, int d) {
    validate_variety(v);
    if (d < 1) fail(errc::invariant_violation, "point degree must be positive");
    detail::ExtScope sc(v, d);
    std::size_t nv = v.vars.size();
    std::uint64_t q = sc.ext->size();
    std::uint64_t raw = checked_pow(q, static_cast<unsigned>(nv), kEnumerationCap);
    if (raw > kEnumerationCap) fail(errc::enumeration_too_large, "tuple space exceeds 1e8");
    std::vector<std::vector<Fq>> out;
    if (!v.projective) {
        std::vector<std::uint64_t> ctr(nv, 0);
        std::vector<Fq> pt(nv, sc.ext->zero());
        for (std::uint64_t i = 0; i < raw; ++i) {
            std::uint64_t t = i;
            for (std::size_t j = 0; j < nv; ++j) {
                std::uint64_t c = t % q;
                t /= q;
                if (c != ctr[j]) {
                    ctr[j] = c;
                    pt[j] = sc.ext->element(c);
                }
            }
            if (detail::point_on(sc.gens, pt)) out.push_back(pt);
        }
        return out;
    }
    for (std::size_t pivot = 0; pivot < nv; ++pivot) {
        std::size_t tail = nv - pivot - 1;
        std::uint64_t count = 1;
        for (std::size_t j = 0; j < tail; ++j) count *= q;
        std::vector<Fq> pt(nv, sc.ext->zero());
        pt[pivot] = sc.ext->one();
        for (std::uint64_t i = 0; i < count; ++i) {
            std::uint64_t t = i;
            for (std::size_t j = 0; j < tail; ++j) {
                pt[pivot + 1 + j] = sc.ext->element(t % q);
                t /= q;
            }
            if (detail::point_on(sc.gens, pt)) out.push_back(pt);
        }
    }
    return out;
}

struct Census {
    int max_degree = 0;
    bool regular_only = false;
    std::vector<long long> n_d; // n_d[i] = geometric count over F_{q^(i+1)}
    std::vector<long long> a_d; // a_d[i] = closed points of exact degree i+1
    std::vector<int> degree_set;
    long long gcd_estimate = 0; // 0 when no closed point of degree <= D exists
    long long min_degree = 0;
};

namespace detail {

inline int orbit_length(std::vector<Fq> pt, std::uint32_t p, unsigned base_k, int d) {
    auto frob = [&](std::vector<Fq>& v) {
        for (auto& c : v) {
            for (unsigned i = 0; i < base_k; ++i) c = c.frobenius();
        }
    };
    std::vector<Fq> cur = pt;
    frob(cur);
    int len = 1;
    while (cur != pt) {
        frob(cur);
        ++len;
        if (len > d) fail(errc::invariant_violation, "frobenius orbit does not close");
    }
    (void)p;
    return len;
}

} // namespace detail

// degrees 1..D; regular_only restricts to points where the jacobian rank
// equals the codimension (requires a known codimension)
inline Census closed_point_census(const Variety& v, int max_degree, bool regular_only = false) {
    validate_variety(v);
    if (max_degree < 1) fail(errc::invariant_violation, "census needs max_degree >= 1");
    int codim = regular_only ? variety_codim(v) : 0;
    Census c;
    c.max_degree = max_degree;
    c.regular_only = regular_only;
    for (int d = 1; d <= max_degree; ++d) {
        detail::ExtScope sc(v, d);
        auto pts = enumerate_points(v, d);
        long long exact = 0;
        long long total = 0;
        for (auto& pt : pts) {
            if (regular_only &&
                jacobian_rank_at(sc.gens, pt, sc.ext.get()) != static_cast<std::size_t>(codim))
                continue;
            ++total;
            if (detail::orbit_length(pt, v.field->characteristic(), v.field->degree(), d) == d)
                ++exact;
        }
        if (exact % d != 0) fail(errc::invariant_violation, "orbit census not divisible by degree");
        c.n_d.push_back(total);
        c.a_d.push_back(exact / d);
        if (exact > 0) c.degree_set.push_back(d);
    }
    std::vector<long long> degs(c.degree_set.begin(), c.degree_set.end());
    c.gcd_estimate = gcd_of_list(degs);
    c.min_degree = degs.empty() ? 0 : *std::min_element(degs.begin(), degs.end());
    return c;
}

// gcd of closed-point degrees realized up to max_degree (upper estimate of
// the full gcd in the divisibility order)
inline long long index_estimate(const Variety& v, int max_degree) {
    return closed_point_census(v, max_degree, false).gcd_estimate;
}

inline Census regular_filter(const Variety& v, int max_degree) {
    return closed_point_census(v, max_degree, true);
}

// largest census degree within both the enumeration cap and the extension
// tower cap
inline int default_census_degree(const Variety& v) {
    int best = 0;
    for (int d = 1; d * v.field->degree() <= static_cast<int>(kMaxExtensionDegree); ++d) {
        std::uint64_t q = checked_pow(static_cast<std::uint64_t>(v.field->characteristic()),
                                      static_cast<unsigned>(v.field->degree() * d),
                                      kMaxFieldSize);
        if (q > kMaxFieldSize) break;
        std::uint64_t raw = checked_pow(q, static_cast<unsigned>(v.vars.size()), kEnumerationCap);
        if (raw > kEnumerationCap) break;
        best = d;
    }
    if (best == 0) fail(errc::enumeration_too_large, "no census degree fits the caps");
    return best;
}

} // namespace idxlab

#endif
