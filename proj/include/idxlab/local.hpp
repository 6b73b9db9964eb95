#ifndef IDXLAB_LOCAL_HPP
#define IDXLAB_LOCAL_HPP

// Lengths and multiplicities of the local ring at the origin of an affine
// variety.  Everything reduces to exact linear algebra on quotients truncated
// by a power of the maximal ideal: the dimension of k[x]/(I + extra + m^n) is
// the monomial count below degree n minus the rank of the relation rows, and
// lengths are read off once the value stops moving as the cutoff grows.
// Hilbert–Samuel tables detect (dimension, multiplicity) as the order and
// value of the first finite difference that goes constant at a dimension the
// ideal can actually have; a nonzero ideal caps the dimension strictly below
// the variable count, which screens off the binomial prefix that high-order
// germs share with the regular ring.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "intutil.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "variety.hpp"

namespace idxlab {

struct LocalRingSpec {
    FieldPtr field;
    std::vector<std::string> vars;
    std::vector<Poly<Fq>> ideal;
    std::optional<int> declared_dim;
};

inline constexpr int kDefaultCutoffMax = 24;
inline constexpr int kDefaultHsMax = 12;
inline constexpr std::size_t kGeneratorCap = 5000;

inline void validate_local(const LocalRingSpec& s, const std::vector<Poly<Fq>>& extra = {}) {
    if (s.vars.empty()) fail(errc::schema_error, "local ring needs at least one variable");
    auto check = [&](const Poly<Fq>& g) {
        if (g.is_zero()) fail(errc::zero_polynomial, "zero generator");
        if (g.vars() != s.vars) fail(errc::schema_error, "generator variable list mismatch");
        if (!g.constant_term_is_zero())
            fail(errc::invariant_violation, "generator does not vanish at the origin: " + g.str());
    };
    for (const auto& g : s.ideal) check(g);
    for (const auto& g : extra) check(g);
}

namespace detail {

inline void monomials_upto(int n, std::size_t r, Expo& cur, std::size_t pos, int left,
                           std::vector<Expo>& out) {
    if (pos == r) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= left; ++e) {
        cur[pos] = static_cast<std::uint16_t>(e);
        monomials_upto(n, r, cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

// all monomials of total degree < n in r variables
inline std::vector<Expo> monomial_basis(int n, std::size_t r) {
    std::vector<Expo> out;
    Expo cur(r, 0);
    monomials_upto(n, r, cur, 0, n - 1, out);
    return out;
}

} // namespace detail

// dim_k of k[vars] / (ideal + extra + m^n)
inline long long truncated_quotient_dim(const LocalRingSpec& s, const std::vector<Poly<Fq>>& extra,
                                        int n) {
    if (n < 1) fail(errc::invariant_violation, "truncation must be positive");
    validate_local(s, extra);
    std::size_t r = s.vars.size();
    auto basis = detail::monomial_basis(n, r);
    std::map<Expo, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    RowSpace rows(s.field.get(), basis.size());

    auto feed = [&](const Poly<Fq>& g) {
        int og = g.order();
        for (const auto& m : basis) {
            if (static_cast<int>(expo_degree(m)) + og >= n) continue;
            std::vector<Fq> row(basis.size(), s.field->zero());
            bool nonzero = false;
            for (const auto& [e, c] : g.terms()) {
                Expo prod(r);
                unsigned deg = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    prod[i] = static_cast<std::uint16_t>(e[i] + m[i]);
                    deg += prod[i];
                }
                if (deg >= static_cast<unsigned>(n)) continue;
                row[col.at(prod)] += c;
                nonzero = true;
            }
            if (nonzero) rows.insert(std::move(row));
        }
    };
    for (const auto& g : s.ideal) feed(g);
    for (const auto& g : extra) feed(g);
    return static_cast<long long>(basis.size()) - static_cast<long long>(rows.rank());
}

struct LengthResult {
    long long value;
    int cutoff; // smallest cutoff at which the value had stabilized
};

// l( A/(extra) ) for A the descriptor's local ring at the origin; the
// truncated dimension is recomputed with growing cutoff until it holds still
// for two more increments
inline LengthResult local_length_full(const LocalRingSpec& s, const std::vector<Poly<Fq>>& extra,
                                      int cutoff_max = kDefaultCutoffMax) {
    long long v0 = -1, v1 = -1;
    int m0 = 0;
    for (int m = 2; m <= cutoff_max; m += 2) {
        long long v = truncated_quotient_dim(s, extra, m);
        if (v == v1 && v == v0) return {v, m0};
        if (v == v1) {
            // one increment of agreement; keep m0 at the first occurrence
        } else {
            m0 = m;
        }
        v0 = v1;
        v1 = v;
    }
    fail(errc::not_finite, "length did not stabilize below cutoff " + std::to_string(cutoff_max));
}

inline long long local_length(const LocalRingSpec& s, const std::vector<Poly<Fq>>& extra,
                              int cutoff_max = kDefaultCutoffMax) {
    return local_length_full(s, extra, cutoff_max).value;
}

struct HsRow {
    int n;
    long long length;
};

struct HsTable {
    std::vector<HsRow> rows;
    int dimension = -1;
    long long multiplicity = 0;
    int truncation_used = 0;
    bool stabilized = false;
};

namespace detail {

// products of n generators (with repetition), deduplicated
inline std::vector<Poly<Fq>> ideal_power_gens(const std::vector<Poly<Fq>>& q, int n) {
    std::vector<Poly<Fq>> cur = q;
    std::set<std::string> seen;
    for (int step = 1; step < n; ++step) {
        std::vector<Poly<Fq>> next;
        std::set<std::string> keys;
        for (const auto& a : cur)
            for (const auto& b : q) {
                Poly<Fq> prod = a * b;
                auto key = prod.str();
                if (keys.insert(key).second) next.push_back(std::move(prod));
                if (next.size() > kGeneratorCap)
                    fail(errc::generator_cap_exceeded, "ideal power has too many generators");
            }
        cur = std::move(next);
    }
    return cur;
}

// smallest d whose d-th finite difference is constant over the last three
// rows, among the dimensions the caller considers possible
template <class Pred>
inline std::optional<std::pair<int, long long>> detect_difference(const std::vector<HsRow>& rows,
                                                                  Pred&& plausible) {
    std::vector<long long> vals;
    for (const auto& r : rows) vals.push_back(r.length);
    for (int d = 0; d + 3 <= static_cast<int>(vals.size()); ++d) {
        if (!plausible(d)) continue;
        std::vector<long long> diff = vals;
        for (int i = 0; i < d; ++i)
            for (std::size_t j = diff.size() - 1; j > 0; --j) diff[j] -= diff[j - 1];
        // after d differencing passes, entries d.. are the d-th differences
        std::size_t m = diff.size();
        if (m >= static_cast<std::size_t>(d) + 3) {
            long long a = diff[m - 1], b = diff[m - 2], c = diff[m - 3];
            if (a == b && b == c && m - 3 >= static_cast<std::size_t>(d)) return std::make_pair(d, a);
        }
    }
    return std::nullopt;
}

} // namespace detail

// Hilbert–Samuel table of an m-primary ideal Q: rows (n, l(A/Q^n)) until the
// d-th finite difference is constant over three consecutive rows for a d the
// ring can have.  The length column of a germ of order e agrees with the
// regular ring's binomial counts through n = e, so for e >= 5 the ambient
// second difference sits at a constant 1 long before the true tail appears;
// a hit at the full variable count is therefore trusted only for the zero
// ideal, and anything else keeps the table growing.
inline HsTable hs_table(const LocalRingSpec& s, const std::vector<Poly<Fq>>& q_gens,
                        int n_max = kDefaultHsMax, int cutoff_max = kDefaultCutoffMax) {
    validate_local(s, q_gens);
    if (q_gens.empty()) fail(errc::invariant_violation, "empty ideal is never primary");
    int ambient = static_cast<int>(s.vars.size());
    auto plausible = [&](int d) { return s.ideal.empty() ? d == ambient : d < ambient; };
    HsTable t;
    for (int n = 1; n <= n_max; ++n) {
        auto gens = detail::ideal_power_gens(q_gens, n);
        LengthResult lr{};
        try {
            lr = local_length_full(s, gens, cutoff_max);
        } catch (const error& e) {
            if (e.code() == errc::not_finite)
                fail(errc::not_primary,
                     "length of A/Q^" + std::to_string(n) + " is not finite; Q is not primary");
            throw;
        }
        t.rows.push_back({n, lr.value});
        t.truncation_used = std::max(t.truncation_used, lr.cutoff);
        if (auto hit = detail::detect_difference(t.rows, plausible)) {
            t.dimension = hit->first;
            t.multiplicity = hit->second;
            t.stabilized = true;
            return t;
        }
    }
    fail(errc::no_convergence, "no finite difference stabilized at a plausible dimension within " +
                                   std::to_string(n_max) + " rows");
}

// (dimension, multiplicity) = (degree of the HS polynomial, its normalized
// leading coefficient), read from the stabilized finite difference
inline std::pair<int, long long> hs_multiplicity(const LocalRingSpec& s,
                                                 const std::vector<Poly<Fq>>& q_gens,
                                                 int n_max = kDefaultHsMax,
                                                 int cutoff_max = kDefaultCutoffMax) {
    HsTable t = hs_table(s, q_gens, n_max, cutoff_max);
    if (s.declared_dim && *s.declared_dim != t.dimension)
        fail(errc::dimension_mismatch,
             "declared dimension " + std::to_string(*s.declared_dim) + " but detected " +
                 std::to_string(t.dimension));
    return {t.dimension, t.multiplicity};
}

inline std::vector<Poly<Fq>> maximal_ideal_gens(const FieldPtr& f, const std::vector<std::string>& vars) {
    std::vector<Poly<Fq>> g;
    for (std::size_t i = 0; i < vars.size(); ++i)
        g.push_back(Poly<Fq>::variable(vars, i, f->one()));
    return g;
}

// multiplicity e(m, O_{X,pt}) of an affine variety at a point, base changing
// to the point's field when it lives in an extension; for a hypersurface the
// result is cross-checked against the order of the translated equation
inline long long multiplicity_at_point(const Variety& v, const std::vector<Fq>& point,
                                       int n_max = kDefaultHsMax, int cutoff_max = kDefaultCutoffMax) {
    validate_variety(v);
    if (v.projective) fail(errc::invariant_violation, "multiplicity is taken at affine points");
    if (point.size() != v.vars.size()) fail(errc::invariant_violation, "point arity mismatch");
    const Field* pf = point.empty() ? v.field.get() : point[0].field_ptr();
    Variety w = v;
    if (pf != v.field.get())
        w = base_change(v, Field::intern(pf->characteristic(), pf->degree()));
    LocalRingSpec s;
    s.field = w.field;
    s.vars = w.vars;
    for (const auto& g : w.ideal) {
        if (!g.eval(point).is_zero())
            fail(errc::point_not_on_variety, "point is not on the variety");
        s.ideal.push_back(g.translate(point));
    }
    auto [d, e] = hs_multiplicity(s, maximal_ideal_gens(s.field, s.vars), n_max, cutoff_max);
    if (s.ideal.size() == 1) {
        long long ord = s.ideal[0].order();
        if (ord != e)
            fail(errc::invariant_violation,
                 "hypersurface multiplicity " + std::to_string(e) + " disagrees with lowest order " +
                     std::to_string(ord));
    }
    return e;
}

} // namespace idxlab

#endif
