#ifndef IDXLAB_RESOLUTION_HPP
#define IDXLAB_RESOLUTION_HPP

// Affine cone over a projective variety with the vertex-multiplicity /
// point-degree-gcd comparison, and resolution of plane curve germs by
// quadratic transforms.  A resolved germ yields its places: closed points on
// a blown-up model where the strict transform is smooth and transverse to
// the exceptional line, each carrying a residue degree.  The gcd of those
// degrees is the moving-multiplicity value n of the germ.

#include <optional>
#include <string>
#include <vector>

#include "census.hpp"
#include "invariant.hpp"
#include "polygcd.hpp"
#include "upoly.hpp"

namespace idxlab {

struct BlowupStep {
    int mult = 0;            // order of the germ = exceptional multiplicity
    Poly<Fq> chart1, chart2; // strict transforms g(x,xy)/x^m and g(xy,y)/y^m
    std::vector<UFactor> exceptional; // irreducible factors of chart1 along x=0
    bool chart2_origin = false;       // strict transform meets chart-2 origin
};

// one quadratic transform centered at the origin of a two-variable germ
inline BlowupStep blowup_step(const Poly<Fq>& g, const Field* F) {
    if (g.vars().size() != 2) fail(errc::invariant_violation, "blowup needs a two-variable germ");
    if (g.is_zero()) fail(errc::zero_germ, "blowup of the zero germ");
    if (!g.constant_term_is_zero())
        fail(errc::invariant_violation, "germ does not vanish at the center");
    BlowupStep bs;
    bs.mult = g.order();
    Poly<Fq> c1(g.vars()), c2(g.vars());
    for (const auto& [e, c] : g.terms()) {
        Expo e1{static_cast<std::uint16_t>(e[0] + e[1] - bs.mult), e[1]};
        Expo e2{e[0], static_cast<std::uint16_t>(e[0] + e[1] - bs.mult)};
        c1.add_term(e1, c);
        c2.add_term(e2, c);
    }
    bs.chart1 = std::move(c1);
    bs.chart2 = std::move(c2);
    UPoly along = to_upoly(bs.chart1.subst_const(0, F->zero()), 1, F);
    if (along.is_zero())
        fail(errc::invariant_violation, "exceptional line is a component of the strict transform");
    bs.exceptional = along.deg() > 0 ? univar_factor(along) : std::vector<UFactor>{};
    bs.chart2_origin = bs.chart2.constant_term_is_zero();
    return bs;
}

struct ResolutionPlace {
    int residue_degree = 0;
    std::string path; // chart/root choices leading to the place
};

struct ResolutionReport {
    Poly<Fq> reduced;
    int blowup_count = 0;
    std::vector<ResolutionPlace> places;
    long long n_value = 0;
};

inline constexpr int kDefaultBlowupBudget = 64;

namespace detail {

struct ResolveState {
    int budget;
    int root_choice;
    int blowups = 0;
    std::vector<ResolutionPlace> places;
};

// h: germ at the origin; when has_exc, the exceptional line is {first var = 0}
inline void resolve_rec(const Poly<Fq>& h, const FieldPtr& F, int deg_mult, bool has_exc,
                        const std::string& path, ResolveState& st) {
    int ord = h.order();
    if (ord < 1) fail(errc::invariant_violation, "germ does not pass through the center");
    if (ord == 1) {
        if (!has_exc) {
            st.places.push_back({deg_mult, path});
            return;
        }
        UPoly along = to_upoly(h.subst_const(0, F->zero()), 1, F.get());
        if (along.is_zero())
            fail(errc::invariant_violation, "exceptional line is a component of the strict transform");
        int yord = 0;
        while (along.coeff(static_cast<std::size_t>(yord)).is_zero()) ++yord;
        if (yord == 1) {
            st.places.push_back({deg_mult, path});
            return;
        }
        // smooth but tangent to the exceptional line: keep transforming
    }
    if (st.blowups >= st.budget)
        fail(errc::blowup_budget_exceeded,
             "no resolution within " + std::to_string(st.budget) + " quadratic transforms");
    ++st.blowups;
    BlowupStep bs = blowup_step(h, F.get());
    const std::string yname = h.vars()[1];
    for (const auto& fac : bs.exceptional) {
        int e = fac.poly.deg();
        std::string step = "(chart:1,root:" + fac.poly.str(yname) + ")";
        if (e == 1) {
            Fq r = -fac.poly[0];
            resolve_rec(bs.chart1.translate({F->zero(), r}), F, deg_mult, true, path + step, st);
        } else {
            FieldPtr F2 = make_extension(make_prime_field(F->characteristic()),
                                         F->degree() * static_cast<unsigned>(e));
            Embedding emb(F, F2);
            Poly<Fq> c1 = bs.chart1.map_coeffs(h.vars(), [&](const Fq& c) { return emb(c); });
            std::vector<Fq> fc;
            for (int i = 0; i <= e; ++i) fc.push_back(emb(fac.poly.coeff(static_cast<std::size_t>(i))));
            auto roots = upoly_roots(UPoly(F2.get(), std::move(fc)));
            if (static_cast<int>(roots.size()) != e)
                fail(errc::invariant_violation, "irreducible factor did not split in its root field");
            Fq r = roots[static_cast<std::size_t>(st.root_choice % e)].first;
            resolve_rec(c1.translate({F2->zero(), r}), F2, deg_mult * e, true, path + step, st);
        }
    }
    if (bs.chart2_origin)
        resolve_rec(bs.chart2.swap_vars(0, 1), F, deg_mult, true, path + "(chart:2,origin)", st);
}

} // namespace detail

// resolve the reduced germ of a plane curve at the origin; root_choice picks
// among conjugate centers when an exceptional point needs a field extension
// (the resulting places and n are independent of the choice)
inline ResolutionReport resolve_germ(const FieldPtr& F, const Poly<Fq>& germ,
                                     int budget = kDefaultBlowupBudget, int root_choice = 0) {
    if (germ.vars().size() != 2) fail(errc::invariant_violation, "resolution needs a two-variable germ");
    if (germ.is_zero()) fail(errc::zero_germ, "resolution of the zero germ");
    if (!germ.constant_term_is_zero())
        fail(errc::invariant_violation, "germ does not vanish at the origin");
    ResolutionReport rep;
    rep.reduced = poly_radical(germ, F.get());
    detail::ResolveState st{budget, root_choice < 0 ? 0 : root_choice};
    detail::resolve_rec(rep.reduced, F, 1, false, "origin", st);
    rep.blowup_count = st.blowups;
    rep.places = std::move(st.places);
    std::vector<long long> degs;
    for (const auto& p : rep.places) degs.push_back(p.residue_degree);
    rep.n_value = gcd_of_list(degs);
    return rep;
}

// the local ring germ at the vertex of the affine cone over a projective
// variety (same equations read in affine space)
inline LocalRingSpec build_affine_cone(const Variety& v) {
    validate_variety(v);
    if (!v.projective) fail(errc::invariant_violation, "cone construction needs a projective variety");
    return LocalRingSpec{v.field, v.vars, v.ideal, std::nullopt};
}

struct ConeReport {
    int census_degree = 0;
    long long delta = 0; // gcd of closed-point degrees of the projective variety
    std::vector<long long> a_d;
    int cone_dimension = -1;
    long long vertex_multiplicity = 0;
    GammaReport gamma;
    bool equality_witnessed = false; // gamma gcd at the vertex == delta
    bool delta_divides_all = false;  // delta divides every sampled multiplicity
    std::optional<long long> expected_degree;
    bool degree_matches = false; // vertex multiplicity == expected degree
};

// compares the point-degree gcd of a regular projective variety with the
// multiplicity gcd at the vertex of its affine cone
inline ConeReport cone_theorem_check(const Variety& v, int census_degree, int trials,
                                     const std::vector<std::vector<Poly<Fq>>>& curated,
                                     std::uint64_t seed,
                                     std::optional<long long> expected_degree = std::nullopt,
                                     int degree_bound = 1) {
    Census full = closed_point_census(v, census_degree, false);
    Census reg = closed_point_census(v, census_degree, true);
    if (full.a_d != reg.a_d)
        fail(errc::invariant_violation, "variety has singular points within the census range");
    LocalRingSpec cone = build_affine_cone(v);
    ConeReport r;
    r.census_degree = census_degree;
    r.delta = full.gcd_estimate;
    r.a_d = full.a_d;
    r.gamma = gamma_estimate(cone, curated, trials, seed, degree_bound);
    r.cone_dimension = r.gamma.dimension;
    r.vertex_multiplicity = r.gamma.e_of_m;
    r.equality_witnessed = r.delta != 0 && r.gamma.running_gcd == r.delta;
    if (r.delta != 0) {
        r.delta_divides_all = true;
        for (const auto& s : r.gamma.samples)
            r.delta_divides_all = r.delta_divides_all && s.e % r.delta == 0;
    }
    r.expected_degree = expected_degree;
    r.degree_matches = expected_degree && r.vertex_multiplicity == *expected_degree;
    return r;
}

} // namespace idxlab

#endif
