#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <idxlab/idxlab.hpp>

using namespace idxlab;

namespace {

const std::vector<std::string> XY{"x", "y"};

std::vector<int> place_degrees(const ResolutionReport& r) {
    std::vector<int> d;
    for (const auto& p : r.places) d.push_back(p.residue_degree);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("a quadratic transform splits the cusp into chart equations") {
    FieldPtr F5 = make_prime_field(5);
    Poly<Fq> cusp = parse_poly("y^2-x^3", XY, F5);
    BlowupStep bs = blowup_step(cusp, F5.get());
    REQUIRE(bs.mult == 2);
    REQUIRE(bs.chart1 == parse_poly("y^2-x", XY, F5));
    REQUIRE(bs.chart2 == parse_poly("1-x^3*y", XY, F5));
    REQUIRE(bs.exceptional.size() == 1);
    REQUIRE(bs.exceptional[0].poly.deg() == 1);
    REQUIRE(bs.exceptional[0].multiplicity == 2);
    REQUIRE_FALSE(bs.chart2_origin);
}

TEST_CASE("the total transform law recomposes the germ in both charts") {
    FieldPtr F3 = make_prime_field(3);
    Poly<Fq> g = parse_poly("y^2-x^3+x*y^3", XY, F3);
    BlowupStep bs = blowup_step(g, F3.get());
    Poly<Fq> x = Poly<Fq>::variable(XY, 0, F3->one());
    Poly<Fq> y = Poly<Fq>::variable(XY, 1, F3->one());
    // g(x, x*y) = x^m * chart1 and g(x*y, y) = y^m * chart2
    REQUIRE(g.subst_var(1, x * y) == x.pow(static_cast<unsigned>(bs.mult)) * bs.chart1);
    REQUIRE(g.subst_var(0, x * y) == y.pow(static_cast<unsigned>(bs.mult)) * bs.chart2);
}

TEST_CASE("the cusp resolves in two transforms to a single rational place") {
    FieldPtr F5 = make_prime_field(5);
    ResolutionReport r = resolve_germ(F5, parse_poly("y^2-x^3", XY, F5));
    REQUIRE(r.blowup_count == 2);
    REQUIRE(place_degrees(r) == std::vector<int>{1});
    REQUIRE(r.n_value == 1);
}

TEST_CASE("a conjugate line pair resolves to one place of degree two") {
    FieldPtr F2 = make_prime_field(2);
    ResolutionReport r = resolve_germ(F2, parse_poly("x^2+x*y+y^2", XY, F2));
    REQUIRE(r.blowup_count == 1);
    REQUIRE(place_degrees(r) == std::vector<int>{2});
    REQUIRE(r.n_value == 2);
    // the place was found after extending the base field
    REQUIRE(r.places[0].path.find("chart:1") != std::string::npos);
}

TEST_CASE("three rational lines give three rational places after one transform") {
    FieldPtr F2 = make_prime_field(2);
    ResolutionReport r = resolve_germ(F2, parse_poly("x*y*(x+y)", XY, F2));
    REQUIRE(r.blowup_count == 1);
    REQUIRE(place_degrees(r) == std::vector<int>{1, 1, 1});
    REQUIRE(r.n_value == 1);
}

TEST_CASE("the root choice among conjugate centers does not change the outcome") {
    FieldPtr F2 = make_prime_field(2);
    Poly<Fq> pair = parse_poly("x^2+x*y+y^2", XY, F2);
    ResolutionReport a = resolve_germ(F2, pair, kDefaultBlowupBudget, 0);
    ResolutionReport b = resolve_germ(F2, pair, kDefaultBlowupBudget, 1);
    REQUIRE(place_degrees(a) == place_degrees(b));
    REQUIRE(a.n_value == b.n_value);
    REQUIRE(a.blowup_count == b.blowup_count);
}

TEST_CASE("a non-reduced germ is resolved through its radical") {
    FieldPtr F3 = make_prime_field(3);
    ResolutionReport r = resolve_germ(F3, parse_poly("x^2*y", XY, F3));
    REQUIRE(r.reduced == parse_poly("x*y", XY, F3));
    REQUIRE(r.blowup_count == 1);
    REQUIRE(place_degrees(r) == std::vector<int>{1, 1});
    REQUIRE(r.n_value == 1);
}

TEST_CASE("a smooth germ is already resolved") {
    FieldPtr F7 = make_prime_field(7);
    ResolutionReport r = resolve_germ(F7, parse_poly("x+y^2", XY, F7));
    REQUIRE(r.blowup_count == 0);
    REQUIRE(place_degrees(r) == std::vector<int>{1});
    REQUIRE(r.n_value == 1);
}

TEST_CASE("resolution rejects degenerate inputs and exhausted budgets") {
    FieldPtr F5 = make_prime_field(5);
    Poly<Fq> zero(XY);
    REQUIRE_THROWS_AS(resolve_germ(F5, zero), error);
    REQUIRE_THROWS_AS(resolve_germ(F5, parse_poly("x+1", XY, F5)), error);
    try {
        resolve_germ(F5, parse_poly("y^2-x^3", XY, F5), 1);
        FAIL("budget of one transform cannot resolve the cusp");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::blowup_budget_exceeded);
    }
}

TEST_CASE("the tacnode needs a deeper tower than the cusp") {
    FieldPtr F5 = make_prime_field(5);
    ResolutionReport r = resolve_germ(F5, parse_poly("y^2-x^4", XY, F5));
    // y^2 - x^4 = (y-x^2)(y+x^2): two smooth branches tangent to each other
    REQUIRE(r.blowup_count >= 2);
    REQUIRE(place_degrees(r) == std::vector<int>{1, 1});
    REQUIRE(r.n_value == 1);
}
