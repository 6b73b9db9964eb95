#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <idxlab/idxlab.hpp>

using namespace idxlab;

namespace {
const std::vector<std::string> XY{"x", "y"};
} // namespace

TEST_CASE("principal scan on three rational lines: attained colengths") {
    FieldPtr F2 = make_prime_field(2);
    LocalRingSpec lines{F2, XY, {parse_poly("x*y*(x+y)", XY, F2)}, 1};
    auto scan = principal_multiplicity_scan(lines, 3);
    REQUIRE(scan.count(3) == 0); // every linear form lies on a branch
    REQUIRE(scan.count(6) == 1);
    REQUIRE(scan.count(7) == 1);
    // witnesses actually achieve their colengths
    for (const auto& [e, f] : scan) {
        REQUIRE(local_length(lines, {f}) == e);
        REQUIRE(f.total_degree() <= 3);
        REQUIRE(f.constant_term_is_zero());
    }
    // the minimum is the sum of branch orders of the gentlest transversal
    REQUIRE(scan.begin()->first == 4);
}

TEST_CASE("a linear parameter of colength 3 appears after extending constants") {
    FieldPtr F2 = make_prime_field(2);
    FieldPtr F4 = make_extension(F2, 2);
    LocalRingSpec over2{F2, XY, {parse_poly("x*y*(x+y)", XY, F2)}, 1};
    LocalRingSpec over4{F4, XY, {parse_poly("x*y*(x+y)", XY, F4)}, 1};
    REQUIRE(principal_multiplicity_scan(over2, 1).empty());
    auto s4 = principal_multiplicity_scan(over4, 1);
    REQUIRE(s4.size() == 1);
    REQUIRE(s4.begin()->first == 3);
    REQUIRE(s4.begin()->second.str().find('g') != std::string::npos);
}

TEST_CASE("gamma estimate seeds with e(m) and folds in curated ideals") {
    FieldPtr F2 = make_prime_field(2);
    LocalRingSpec lines{F2, XY, {parse_poly("x*y*(x+y)", XY, F2)}, 1};
    std::vector<std::vector<Poly<Fq>>> curated{{parse_poly("x^2+x*y+y^2", XY, F2)},
                                               {parse_poly("x^2+y^3", XY, F2)}};
    GammaReport g = gamma_estimate(lines, curated, 4, 99);
    REQUIRE(g.e_of_m == 3);
    REQUIRE(g.dimension == 1);
    REQUIRE(g.samples.size() >= 3);
    REQUIRE(g.samples[0].kind == "maximal");
    REQUIRE(g.samples[0].e == 3);
    REQUIRE(g.samples[1].kind == "curated");
    REQUIRE(g.samples[1].e == 6);
    REQUIRE(g.samples[2].kind == "curated");
    REQUIRE(g.samples[2].e == 7);
    REQUIRE(g.running_gcd == 1);
    REQUIRE(g.trials_done == 4);
    for (const auto& s : g.samples)
        if (s.kind == "sampled") REQUIRE(s.e >= 3);
}

TEST_CASE("gamma sampling is reproducible for a fixed seed") {
    FieldPtr F2 = make_prime_field(2);
    LocalRingSpec pair{F2, XY, {parse_poly("x^2+x*y+y^2", XY, F2)}, 1};
    GammaReport a = gamma_estimate(pair, {}, 5, 12345);
    GammaReport b = gamma_estimate(pair, {}, 5, 12345);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        REQUIRE(a.samples[i].gens == b.samples[i].gens);
        REQUIRE(a.samples[i].e == b.samples[i].e);
    }
    GammaReport c = gamma_estimate(pair, {}, 5, 54321);
    REQUIRE(c.running_gcd == 2); // every parameter of the tangent pair has even colength
    REQUIRE(a.running_gcd == 2);
}

TEST_CASE("trials can be disabled entirely") {
    FieldPtr F2 = make_prime_field(2);
    LocalRingSpec pair{F2, XY, {parse_poly("x^2+x*y+y^2", XY, F2)}, 1};
    GammaReport g = gamma_estimate(pair, {}, 0, 1);
    REQUIRE(g.trials_requested == 0);
    REQUIRE(g.trials_done == 0);
    REQUIRE(g.samples.size() == 1); // only the maximal ideal
    REQUIRE(g.running_gcd == 2);
}

TEST_CASE("scan caps rule out large enumerations honestly") {
    FieldPtr F5 = make_prime_field(5);
    LocalRingSpec big{F5, XY, {parse_poly("x*y", XY, F5)}, 1};
    REQUIRE_THROWS_AS(principal_multiplicity_scan(big, 3), error);
    try {
        principal_multiplicity_scan(big, 3);
        FAIL("expected an error");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::scan_too_large);
    }
}
