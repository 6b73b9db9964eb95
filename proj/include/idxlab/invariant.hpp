#ifndef IDXLAB_INVARIANT_HPP
#define IDXLAB_INVARIANT_HPP

// Sampling and exhaustive search over m-primary ideals of a local ring germ:
// gcd estimates for the multiplicity set, principal-ideal multiplicity scans,
// and the additivity / associativity cross-checks that tie multiplicities to
// component decompositions.  Sampled gcds are divisibility-order upper
// estimates: more samples can only shrink them.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "intutil.hpp"
#include "local.hpp"
#include "upoly.hpp"

namespace idxlab {

struct GammaSample {
    std::string kind; // "maximal", "curated", "sampled"
    std::vector<std::string> gens;
    long long e;
};

struct GammaReport {
    int dimension = -1;
    long long e_of_m = 0;
    std::vector<GammaSample> samples;
    long long running_gcd = 0;
    std::uint64_t seed = 0;
    int trials_requested = 0;
    int trials_done = 0;
};

namespace detail {

inline std::vector<Expo> positive_monomials_upto(int bound, std::size_t r) {
    std::vector<Expo> all = monomial_basis(bound + 1, r);
    std::vector<Expo> out;
    for (auto& e : all)
        if (expo_degree(e) >= 1) out.push_back(e);
    return out;
}

} // namespace detail

// draw parameter ideals with uniform coefficients on monomials of degree
// 1..degree_bound until the Hilbert table certifies m-primariness
inline std::pair<std::vector<Poly<Fq>>, HsTable> sample_parameter_ideal(
    const LocalRingSpec& s, int dim, int degree_bound, std::mt19937_64& rng,
    int n_max = kDefaultHsMax, int cutoff_max = kDefaultCutoffMax, int max_attempts = 200) {
    if (dim < 1) fail(errc::invariant_violation, "sampling needs positive dimension");
    auto monos = detail::positive_monomials_upto(degree_bound, s.vars.size());
    std::uint32_t q = s.field->size();
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Poly<Fq>> gens;
        for (int i = 0; i < dim; ++i) {
            Poly<Fq> g(s.vars);
            for (const auto& e : monos) {
                Fq c = s.field->element(uniform_index(rng, q));
                g.add_term(e, c);
            }
            gens.push_back(std::move(g));
        }
        bool zero = false;
        for (const auto& g : gens) zero = zero || g.is_zero();
        if (zero) continue;
        try {
            HsTable t = hs_table(s, gens, n_max, cutoff_max);
            return {gens, t};
        } catch (const error& e) {
            if (e.code() == errc::not_primary || e.code() == errc::no_convergence) continue;
            throw;
        }
    }
    fail(errc::sampling_exhausted, "no m-primary parameter ideal found");
}

// gcd of e(Q) over e(m), the curated ideals, and `trials` sampled parameter
// ideals; the running gcd is an upper estimate of the full multiplicity gcd
inline GammaReport gamma_estimate(const LocalRingSpec& s,
                                  const std::vector<std::vector<Poly<Fq>>>& curated, int trials,
                                  std::uint64_t seed, int degree_bound = 3,
                                  int n_max = kDefaultHsMax, int cutoff_max = kDefaultCutoffMax) {
    validate_local(s);
    GammaReport rep;
    rep.seed = seed;
    rep.trials_requested = trials;
    auto mg = maximal_ideal_gens(s.field, s.vars);
    auto [dim, em] = hs_multiplicity(s, mg, n_max, cutoff_max);
    rep.dimension = dim;
    rep.e_of_m = em;
    rep.running_gcd = em;
    GammaSample ms;
    ms.kind = "maximal";
    for (const auto& g : mg) ms.gens.push_back(g.str());
    ms.e = em;
    rep.samples.push_back(std::move(ms));
    for (const auto& q : curated) {
        auto [d2, e2] = hs_multiplicity(s, q, n_max, cutoff_max);
        (void)d2;
        GammaSample cs;
        cs.kind = "curated";
        for (const auto& g : q) cs.gens.push_back(g.str());
        cs.e = e2;
        rep.samples.push_back(std::move(cs));
        rep.running_gcd = std::gcd(rep.running_gcd, e2);
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        if (dim < 1) break; // zero-dimensional germs have a single length
        auto [gens, table] = sample_parameter_ideal(s, dim, degree_bound, rng, n_max, cutoff_max);
        GammaSample ss;
        ss.kind = "sampled";
        for (const auto& g : gens) ss.gens.push_back(g.str());
        ss.e = table.multiplicity;
        rep.samples.push_back(std::move(ss));
        rep.running_gcd = std::gcd(rep.running_gcd, table.multiplicity);
        ++rep.trials_done;
    }
    return rep;
}

inline constexpr std::uint64_t kScanCandidateCap = 1u << 20;

// every finite colength l(A/(f)) over all f supported on monomials of degree
// 1..degree_bound, exhaustively; values map to the first witness found in
// enumeration order
inline std::map<long long, Poly<Fq>> principal_multiplicity_scan(const LocalRingSpec& s,
                                                                 int degree_bound,
                                                                 int cutoff_max = kDefaultCutoffMax) {
    validate_local(s);
    std::uint64_t q = s.field->size();
    auto monos = detail::positive_monomials_upto(degree_bound, s.vars.size());
    if (q > 4 || monos.size() > 20)
        fail(errc::scan_too_large, "scan preconditions: q <= 4 and at most 20 monomials");
    std::uint64_t total = checked_pow(q, static_cast<unsigned>(monos.size()), kScanCandidateCap);
    if (total > kScanCandidateCap) fail(errc::scan_too_large, "too many scan candidates");
    std::map<long long, Poly<Fq>> out;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        Poly<Fq> f(s.vars);
        std::uint64_t t = idx;
        for (const auto& e : monos) {
            std::uint64_t c = t % q;
            t /= q;
            if (c) f.add_term(e, s.field->element(c));
        }
        try {
            long long len = local_length(s, {f}, cutoff_max);
            out.try_emplace(len, std::move(f));
        } catch (const error& err) {
            if (err.code() != errc::not_finite) throw;
        }
    }
    return out;
}

struct AdditivityPart {
    std::string gen;
    int multiplicity; // exponent in the product decomposition
    long long e;      // multiplicity of the reduced component germ
};

struct AdditivityReport {
    long long lhs = 0; // e(m) of the full germ
    long long rhs = 0; // sum of multiplicity * component e
    std::vector<AdditivityPart> parts;
    bool holds = false;
};

// e(m, A) against the weighted sum over the components of a verified product
// decomposition of the principal generator
inline AdditivityReport check_additivity(const LocalRingSpec& s,
                                         const std::vector<std::pair<Poly<Fq>, int>>& components,
                                         int n_max = kDefaultHsMax, int cutoff_max = kDefaultCutoffMax) {
    validate_local(s);
    if (s.ideal.size() != 1)
        fail(errc::invariant_violation, "additivity check needs a principal germ");
    if (components.empty()) fail(errc::component_mismatch, "no components supplied");
    Poly<Fq> prod = Poly<Fq>::constant(s.vars, s.field->one());
    for (const auto& [g, a] : components) {
        if (a < 1) fail(errc::component_mismatch, "component exponent must be positive");
        prod = prod * g.pow(static_cast<unsigned>(a));
    }
    if (!s.ideal[0].scalar_ratio(prod))
        fail(errc::component_mismatch, "product of components does not match the generator");
    AdditivityReport rep;
    rep.lhs = hs_multiplicity(s, maximal_ideal_gens(s.field, s.vars), n_max, cutoff_max).second;
    for (const auto& [g, a] : components) {
        LocalRingSpec cs{s.field, s.vars, {g}, std::nullopt};
        long long e = hs_multiplicity(cs, maximal_ideal_gens(s.field, s.vars), n_max, cutoff_max).second;
        rep.parts.push_back({g.str(), a, e});
        rep.rhs += static_cast<long long>(a) * e;
    }
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

struct AssocComponent {
    std::vector<Poly<Fq>> germ; // generators cutting the component
    long long local_mult;       // multiplicity of the prefix ideal along it
    long long suffix_order;     // declared order of the suffix on the component
};

struct AssociativityReport {
    long long lhs = 0; // e of the combined parameter ideal
    long long rhs = 0;
    std::vector<long long> recomputed_suffix_orders;
    bool holds = false;
};

// e((prefix, suffix), A) against sum of local multiplicities times suffix
// orders over the supplied components of V(prefix); suffix orders are
// recomputed, local multiplicities cross-checked when a single component
// carries everything
inline AssociativityReport check_associativity(const LocalRingSpec& s,
                                               const std::vector<Poly<Fq>>& prefix,
                                               const std::vector<Poly<Fq>>& suffix,
                                               const std::vector<AssocComponent>& components,
                                               int n_max = kDefaultHsMax,
                                               int cutoff_max = kDefaultCutoffMax) {
    validate_local(s);
    if (suffix.empty()) fail(errc::invariant_violation, "suffix must be nonempty");
    if (components.empty()) fail(errc::decomposition_inconsistent, "no components supplied");
    std::vector<Poly<Fq>> q = prefix;
    for (const auto& g : suffix) q.push_back(g);
    AssociativityReport rep;
    rep.lhs = hs_multiplicity(s, q, n_max, cutoff_max).second;
    for (const auto& comp : components) {
        LocalRingSpec cs{s.field, s.vars, s.ideal, std::nullopt};
        for (const auto& g : comp.germ) cs.ideal.push_back(g);
        long long so;
        if (suffix.size() == 1) {
            so = local_length(cs, suffix, cutoff_max);
        } else {
            so = hs_multiplicity(cs, suffix, n_max, cutoff_max).second;
        }
        if (so != comp.suffix_order)
            fail(errc::decomposition_inconsistent,
                 "suffix order on component recomputed as " + std::to_string(so) + ", declared " +
                     std::to_string(comp.suffix_order));
        rep.recomputed_suffix_orders.push_back(so);
        rep.rhs += comp.local_mult * so;
    }
    if (components.size() == 1) {
        long long so = rep.recomputed_suffix_orders[0];
        if (so == 0 || rep.lhs % so != 0 || rep.lhs / so != components[0].local_mult)
            fail(errc::decomposition_inconsistent, "single-component local multiplicity mismatch");
    }
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

} // namespace idxlab

#endif
