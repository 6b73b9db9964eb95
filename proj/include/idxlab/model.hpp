#ifndef IDXLAB_MODEL_HPP
#define IDXLAB_MODEL_HPP

// Arithmetic surfaces over the power series ring k[[t]], presented by one
// equation f(x,y,t) = 0 flat over t, with the special fiber supplied as a
// weighted component decomposition.  Reports: the gcd bound coming from
// regular closed fiber points, regularity of the total space at a point,
// fiber multiplicities, and degrees of horizontal curves cut through a
// chosen fiber point, with a series witness when Newton applies.

#include <optional>
#include <string>
#include <vector>

#include "census.hpp"
#include "invariant.hpp"
#include "local.hpp"
#include "polygcd.hpp"
#include "series.hpp"

namespace idxlab {

struct ModelComponent {
    Poly<Fq> g;  // irreducible equation in the fiber variables
    long long r; // multiplicity in the special fiber
};

struct Model {
    FieldPtr field;
    std::vector<std::string> fiber_vars; // two variables
    std::string param;                   // name of the series parameter
    Poly<Fq> f;                          // over fiber_vars + {param}
    std::vector<ModelComponent> components;
};

inline constexpr int kIrreducibilityCheckMaxDegree = 4;
inline constexpr std::uint32_t kIrreducibilityCheckMaxField = 4;

namespace detail {

// exhaustive bivariate divisor search; sound because single-divisor division
// has zero remainder exactly on multiples
inline bool bivariate_irreducible(const Poly<Fq>& g, const FieldPtr& F) {
    int dg = g.total_degree();
    if (dg < 1) return false;
    std::uint64_t q = F->size();
    for (int da = 1; 2 * da <= dg; ++da) {
        auto monos = monomial_basis(da + 1, g.vars().size());
        std::uint64_t total = checked_pow(q, static_cast<unsigned>(monos.size()), kScanCandidateCap);
        if (total > kScanCandidateCap) fail(errc::scan_too_large, "irreducibility search too large");
        for (std::uint64_t idx = 1; idx < total; ++idx) {
            Poly<Fq> a(g.vars());
            std::uint64_t t = idx;
            for (const auto& e : monos) {
                std::uint64_t c = t % q;
                t /= q;
                if (c) a.add_term(e, F->element(c));
            }
            if (a.total_degree() < 1) continue;
            if (a.leading_term().second != F->one()) continue; // one candidate per scalar class
            if (g.divisible_by(a)) return false;
        }
    }
    return true;
}

} // namespace detail

inline Poly<Fq> special_fiber(const Model& m) {
    std::size_t tv = m.fiber_vars.size();
    return m.f.subst_const(tv, m.field->zero()).drop_var(tv);
}

// checks flatness, the component product, pairwise coprimality, and (within
// the exhaustive range) irreducibility; returns warnings for trusted claims
inline std::vector<std::string> validate_model(const Model& m) {
    if (m.fiber_vars.size() != 2) fail(errc::invariant_violation, "model needs two fiber variables");
    if (m.f.vars().size() != 3) fail(errc::invariant_violation, "model equation needs three variables");
    if (m.f.is_zero()) fail(errc::zero_polynomial, "model equation is zero");
    if (m.components.empty()) fail(errc::component_mismatch, "no fiber components supplied");
    Poly<Fq> f0 = special_fiber(m);
    if (f0.is_zero()) fail(errc::not_flat, "the parameter divides the equation");
    Poly<Fq> prod = Poly<Fq>::constant(m.fiber_vars, m.field->one());
    for (const auto& c : m.components) {
        if (c.g.is_zero() || c.g.total_degree() < 1)
            fail(errc::component_mismatch, "fiber component must be nonconstant");
        if (c.r < 1) fail(errc::component_mismatch, "fiber multiplicity must be positive");
        prod = prod * c.g.pow(static_cast<unsigned>(c.r));
    }
    if (!f0.scalar_ratio(prod))
        fail(errc::component_product_mismatch,
             "special fiber does not match the weighted component product");
    for (std::size_t i = 0; i < m.components.size(); ++i)
        for (std::size_t j = i + 1; j < m.components.size(); ++j)
            if (poly_gcd(m.components[i].g, m.components[j].g).total_degree() != 0)
                fail(errc::not_coprime, "fiber components share a factor");
    std::vector<std::string> warnings;
    for (const auto& c : m.components) {
        if (c.g.total_degree() <= kIrreducibilityCheckMaxDegree &&
            m.field->size() <= kIrreducibilityCheckMaxField) {
            if (!detail::bivariate_irreducible(c.g, m.field))
                fail(errc::decomposition_inconsistent,
                     "fiber component " + c.g.str() + " is reducible");
        } else {
            warnings.push_back("component " + c.g.str() +
                               " trusted irreducible (outside the exhaustive search range)");
        }
    }
    return warnings;
}

struct FiberComponentReport {
    std::string g;
    long long r = 0;
    long long delta_reg = 0; // gcd of regular closed-point degrees, 0 if none seen
    std::vector<long long> a_d;
};

struct FiberReport {
    int census_degree = 0;
    std::vector<FiberComponentReport> components;
    long long gcd_bound = 0; // gcd over components of r * delta_reg
    std::vector<std::string> warnings;
};

// the divisibility bound on generic-fiber point degrees read off the special
// fiber: gcd over components of multiplicity times regular-locus index
inline FiberReport model_fiber_report(const Model& m, int census_degree) {
    FiberReport rep;
    rep.warnings = validate_model(m);
    rep.census_degree = census_degree;
    std::vector<long long> contributions;
    for (const auto& c : m.components) {
        Variety v{m.field, false, m.fiber_vars, {c.g}, 1};
        Census cen = regular_filter(v, census_degree);
        FiberComponentReport cr;
        cr.g = c.g.str();
        cr.r = c.r;
        cr.delta_reg = cen.gcd_estimate;
        cr.a_d = cen.a_d;
        rep.components.push_back(std::move(cr));
        contributions.push_back(c.r * cen.gcd_estimate);
    }
    rep.gcd_bound = gcd_of_list(contributions);
    return rep;
}

namespace detail {

inline FieldPtr point_field(const Model& m, const std::vector<Fq>& pt) {
    const Field* pf = pt.empty() ? m.field.get() : pt[0].field_ptr();
    if (pf->characteristic() != m.field->characteristic() ||
        pf->degree() % m.field->degree() != 0)
        fail(errc::no_embedding, "point field does not extend the model field");
    return Field::intern(pf->characteristic(), pf->degree());
}

inline Poly<Fq> change_field(const Poly<Fq>& p, const FieldPtr& src, const FieldPtr& dst) {
    if (src.get() == dst.get()) return p;
    Embedding emb(src, dst);
    return p.map_coeffs(p.vars(), [&](const Fq& c) { return emb(c); });
}

} // namespace detail

// regularity of the total space at a closed point of the special fiber
inline bool model_regularity_at(const Model& m, const std::vector<Fq>& pt) {
    if (pt.size() != 2) fail(errc::invariant_violation, "fiber points have two coordinates");
    FieldPtr E = detail::point_field(m, pt);
    Poly<Fq> fe = detail::change_field(m.f, m.field, E);
    std::vector<Fq> pt3{pt[0], pt[1], E->zero()};
    if (!fe.eval(pt3).is_zero()) fail(errc::point_not_on_fiber, "point is not on the special fiber");
    return fe.translate(pt3).order() == 1;
}

struct ModelPointReport {
    int point_degree = 0;
    bool regular = false;
    std::vector<std::size_t> components_through;
    std::vector<long long> component_mults;
    long long e_fiber = 0;    // multiplicity of the special fiber germ
    long long lift_bound = 0; // e_fiber * point_degree
};

// fiber-point dossier: residue degree, total-space regularity, components
// through the point, and the degree bound for horizontal curves through it;
// the fiber multiplicity is computed twice (weighted sum and directly on the
// possibly nonreduced fiber germ)
inline ModelPointReport model_point_report(const Model& m, const std::vector<Fq>& pt) {
    validate_model(m);
    ModelPointReport rep;
    rep.regular = model_regularity_at(m, pt); // also checks the point is on the fiber
    FieldPtr E = detail::point_field(m, pt);
    rep.point_degree =
        detail::orbit_length(pt, m.field->characteristic(), m.field->degree(),
                             static_cast<int>(E->degree() / m.field->degree()));
    for (std::size_t i = 0; i < m.components.size(); ++i) {
        Poly<Fq> ge = detail::change_field(m.components[i].g, m.field, E);
        if (!ge.eval(pt).is_zero()) continue;
        Variety comp{m.field, false, m.fiber_vars, {m.components[i].g}, 1};
        long long e = multiplicity_at_point(comp, pt);
        rep.components_through.push_back(i);
        rep.component_mults.push_back(e);
        rep.e_fiber += m.components[i].r * e;
    }
    if (rep.components_through.empty())
        fail(errc::point_not_on_fiber, "point lies on no fiber component");
    Variety fiber{m.field, false, m.fiber_vars, {special_fiber(m)}, 1};
    long long direct = multiplicity_at_point(fiber, pt);
    if (direct != rep.e_fiber)
        fail(errc::invariant_violation, "fiber multiplicity disagrees with the weighted sum");
    rep.lift_bound = rep.e_fiber * rep.point_degree;
    return rep;
}

struct LiftReport {
    int point_degree = 0;
    std::size_t component = 0;
    long long component_r = 0;
    long long computed = 0;  // m * length of the curve-fiber intersection
    long long predicted = 0; // r * e * m with e = 1 at a transversal cut
    bool matches = false;
    std::optional<std::string> witness; // series solution when Newton applies
};

// degree of the horizontal curve cut by g through a regular point of the
// model sitting on a single smooth component, with g transversal to it
inline LiftReport lift_degree(const Model& m, const std::vector<Fq>& pt, const Poly<Fq>& g,
                              int truncation = 12) {
    validate_model(m);
    if (g.vars().size() != 2) fail(errc::invariant_violation, "the cut lives in the fiber variables");
    ModelPointReport pr = model_point_report(m, pt);
    if (!pr.regular) fail(errc::not_regular_point, "model is singular at the point");
    if (pr.components_through.size() != 1)
        fail(errc::not_regular_point, "point lies on more than one fiber component");
    std::size_t ci = pr.components_through[0];
    if (pr.component_mults[0] != 1)
        fail(errc::not_regular_point, "fiber component is singular at the point");
    FieldPtr E = detail::point_field(m, pt);
    Poly<Fq> ge = detail::change_field(g, m.field, E);
    if (!ge.eval(pt).is_zero()) fail(errc::not_transversal, "the cut does not pass through the point");
    Poly<Fq> comp_e = detail::change_field(m.components[ci].g, m.field, E);
    LocalRingSpec on_comp{E, m.fiber_vars, {comp_e.translate(pt)}, std::nullopt};
    if (local_length(on_comp, {ge.translate(pt)}) != 1)
        fail(errc::not_transversal, "the cut meets the component with multiplicity > 1");
    LiftReport rep;
    rep.point_degree = pr.point_degree;
    rep.component = ci;
    rep.component_r = m.components[ci].r;
    std::vector<std::string> vars3 = m.f.vars();
    Poly<Fq> fe = detail::change_field(m.f, m.field, E);
    std::vector<Fq> pt3{pt[0], pt[1], E->zero()};
    LocalRingSpec total{E, vars3, {fe.translate(pt3)}, std::nullopt};
    Poly<Fq> g3 = ge.extend_vars(m.param).translate(pt3);
    Poly<Fq> tpoly = Poly<Fq>::variable(vars3, 2, E->one());
    rep.computed = pr.point_degree * local_length(total, {g3, tpoly});
    rep.predicted = rep.component_r * pr.point_degree;
    rep.matches = rep.computed == rep.predicted;
    // series witness: fiber smooth at the point and the cut is a coordinate
    Poly<Fq> f0e = detail::change_field(special_fiber(m), m.field, E);
    if (f0e.translate(pt).order() == 1) {
        for (std::size_t xi = 0; xi < 2 && !rep.witness; ++xi) {
            Poly<Fq> coord = Poly<Fq>::variable(m.fiber_vars, xi, E->one());
            Poly<Fq> shifted = coord - Poly<Fq>::constant(m.fiber_vars, pt[xi]);
            if (!ge.scalar_ratio(shifted)) continue;
            std::size_t other = 1 - xi;
            Poly<Fq> restricted = fe.subst_const(xi, pt[xi]).drop_var(xi);
            if (auto u = series_newton_root(restricted, pt[other], truncation))
                rep.witness = m.fiber_vars[other] + " = " + u->str(m.param);
        }
    }
    return rep;
}

// first fiber point (in enumeration order) of the requested residue degree
// where a lift is well-posed: regular model point on a single component,
// smooth on that component
inline std::vector<Fq> find_fiber_point(const Model& m, int target_degree) {
    validate_model(m);
    Variety fiber{m.field, false, m.fiber_vars, {special_fiber(m)}, 1};
    for (auto& pt : enumerate_points(fiber, target_degree)) {
        if (detail::orbit_length(pt, m.field->characteristic(), m.field->degree(), target_degree) !=
            target_degree)
            continue;
        try {
            ModelPointReport pr = model_point_report(m, pt);
            if (pr.regular && pr.components_through.size() == 1 && pr.component_mults[0] == 1)
                return pt;
        } catch (const error&) {
            continue;
        }
    }
    fail(errc::sampling_exhausted,
         "no suitable fiber point of degree " + std::to_string(target_degree));
}

} // namespace idxlab

#endif
