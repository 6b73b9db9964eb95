#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <idxlab/idxlab.hpp>

using namespace idxlab;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
} // namespace

TEST_CASE("projective enumeration normalizes to one representative per point") {
    FieldPtr F2 = make_prime_field(2);
    Variety line{F2, true, XY, {}, std::nullopt};
    auto pts = enumerate_points(line, 1);
    REQUIRE(pts.size() == 3);
    for (const auto& p : pts) {
        // first nonzero coordinate is one
        std::size_t i = 0;
        while (i < p.size() && p[i].is_zero()) ++i;
        REQUIRE(i < p.size());
        REQUIRE(p[i] == p[i].field().one());
    }
    REQUIRE(enumerate_points(line, 2).size() == 5);
    Variety spec4{F2, false, {"x"}, {parse_poly("x^2+x+1", {"x"}, F2)}, 1};
    REQUIRE(enumerate_points(spec4, 1).empty());
    REQUIRE(enumerate_points(spec4, 2).size() == 2);
    FieldPtr F3 = make_prime_field(3);
    Variety circle{F3, false, XY, {parse_poly("x^2+y^2+1", XY, F3)}, 1};
    REQUIRE(enumerate_points(circle, 1).size() == 4);
}

TEST_CASE("orbit peeling turns rational counts into closed point counts") {
    FieldPtr F2 = make_prime_field(2);
    Variety line{F2, true, XY, {}, std::nullopt};
    Census c = closed_point_census(line, 6);
    REQUIRE(c.a_d == std::vector<long long>{3, 1, 2, 3, 6, 9});
    for (int d = 1; d <= 6; ++d) {
        long long sum = 0;
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) sum += e * c.a_d[static_cast<std::size_t>(e - 1)];
        REQUIRE(sum == c.n_d[static_cast<std::size_t>(d - 1)]);
        REQUIRE(c.n_d[static_cast<std::size_t>(d - 1)] == (1ll << d) + 1);
    }
    REQUIRE(c.gcd_estimate == 1);
    REQUIRE(c.min_degree == 1);

    Variety plane{F2, true, XYZ, {}, std::nullopt};
    Census c2 = closed_point_census(plane, 6);
    for (int d = 1; d <= 6; ++d) {
        long long sum = 0;
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) sum += e * c2.a_d[static_cast<std::size_t>(e - 1)];
        REQUIRE(sum == c2.n_d[static_cast<std::size_t>(d - 1)]);
        REQUIRE(c2.n_d[static_cast<std::size_t>(d - 1)] == (1ll << (2 * d)) + (1ll << d) + 1);
    }
}

TEST_CASE("a point with no rational locus has index two until depth grows") {
    FieldPtr F2 = make_prime_field(2);
    Variety spec4{F2, false, {"x"}, {parse_poly("x^2+x+1", {"x"}, F2)}, 1};
    Census c = closed_point_census(spec4, 2);
    REQUIRE(c.a_d == std::vector<long long>{0, 1});
    REQUIRE(c.gcd_estimate == 2);
    REQUIRE(index_estimate(spec4, 3) == 2);
    REQUIRE(index_estimate(spec4, 1) == 0); // no information yet
}

TEST_CASE("removing rational points still leaves index one at depth three") {
    FieldPtr F2 = make_prime_field(2);
    Variety dense{F2, false, XY, {parse_poly("(x^2+x)*y+1", XY, F2)}, 1};
    Census c = closed_point_census(dense, 3);
    REQUIRE(c.a_d == std::vector<long long>{0, 1, 2});
    REQUIRE(index_estimate(dense, 2) == 2);
    REQUIRE(index_estimate(dense, 3) == 1);
    REQUIRE(index_estimate(dense, 6) == 1);
}

TEST_CASE("the regular-locus census can have a larger index than the full one") {
    FieldPtr F3 = make_prime_field(3);
    Variety sing{F3, false, XY, {parse_poly("x^2+y^2", XY, F3)}, 1};
    Census full = closed_point_census(sing, 2);
    REQUIRE(full.a_d == std::vector<long long>{1, 8});
    REQUIRE(full.gcd_estimate == 1);
    Census reg = regular_filter(sing, 2);
    REQUIRE(reg.a_d == std::vector<long long>{0, 8});
    REQUIRE(reg.gcd_estimate == 2);
    REQUIRE(reg.regular_only);
    REQUIRE(reg.degree_set == std::vector<int>{2});
}

TEST_CASE("the constant field degree divides every regular point degree") {
    FieldPtr F2 = make_prime_field(2);
    Variety pair{F2, false, XY, {parse_poly("x^2+x*y+y^2", XY, F2)}, 1};
    Census reg = regular_filter(pair, 2);
    REQUIRE(reg.a_d == std::vector<long long>{0, 3});
    REQUIRE(reg.gcd_estimate == 2);
}

TEST_CASE("a smooth plane cubic with a rational point witnesses the genus-one bound") {
    FieldPtr F2 = make_prime_field(2);
    Variety cubic{F2, true, XYZ, {parse_poly("y^2*z+y*z^2+x^3", XYZ, F2)}, 1};
    Census c = closed_point_census(cubic, 2);
    REQUIRE(c.a_d[0] == 3);
    REQUIRE(c.gcd_estimate == 1);
    Census r = regular_filter(cubic, 2);
    REQUIRE(r.a_d == c.a_d); // the curve is smooth in this range
    // a conic with a rational point witnesses the genus-zero bound
    FieldPtr F3 = make_prime_field(3);
    Variety conic{F3, true, XYZ, {parse_poly("x^2+y^2+z^2", XYZ, F3)}, 1};
    REQUIRE(index_estimate(conic, 1) == 1);
}

TEST_CASE("census depth is capped and the caps are reported") {
    FieldPtr F2 = make_prime_field(2);
    Variety line{F2, true, XY, {}, std::nullopt};
    int d = default_census_degree(line);
    REQUIRE(d >= 6);
    REQUIRE_THROWS_AS(enumerate_points(line, 100), error);
    FieldPtr F251 = make_prime_field(251);
    Variety big{F251, false, XYZ, {parse_poly("x", XYZ, F251)}, 1};
    REQUIRE_THROWS_AS(enumerate_points(big, 2), error);
}

TEST_CASE("frobenius orbit length is the exact residue degree") {
    FieldPtr F2 = make_prime_field(2);
    Variety line{F2, true, XY, {}, std::nullopt};
    // degree-2 closed point of the projective line: the conjugate pair {g, g+1}
    auto pts = enumerate_points(line, 2);
    int orbit2 = 0;
    for (const auto& p : pts) {
        if (detail::orbit_length(p, 2, 1, 2) == 2) ++orbit2;
    }
    REQUIRE(orbit2 == 2); // two geometric points forming one closed point
}
