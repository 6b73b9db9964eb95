#include <catch2/catch_amalgamated.hpp>

#include <idxlab/idxlab.hpp>

using namespace idxlab;

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(BigInt(2), BigInt(4));
    REQUIRE(a.str() == "1/2");
    REQUIRE((a + a).str() == "1");
    REQUIRE((Rational(1) / Rational(7) * Rational(7)).str() == "1");
    REQUIRE((Rational(-2) / Rational(4)).str() == "-1/2");
    REQUIRE(Rational().is_zero());
    REQUIRE_THROWS_AS(Rational(1) / Rational(0), error);
    // big values stay exact
    Rational big = Rational(1);
    for (int i = 0; i < 64; ++i) big = big * Rational(3);
    REQUIRE(big.str() == "3433683820292512484657849089281");
}

TEST_CASE("the split polynomial divides exactly for p = 5, 7, 11, 13") {
    struct Case { long long p; int b; int deg; };
    for (auto c : {Case{5, 1, 0}, Case{7, 2, 0}, Case{11, 1, 6}, Case{13, 2, 6}}) {
        FermatReport r = fermat_split(c.p);
        REQUIRE(r.p == c.p);
        REQUIRE(r.b == c.b);
        REQUIRE(r.remainder_zero);
        REQUIRE(r.quotient_degree == c.deg);
        REQUIRE(r.quotient_degree == static_cast<int>(c.p) - 3 - 2 * c.b);
    }
    REQUIRE(fermat_split(5).quotient.str() == "5");
    REQUIRE(fermat_split(7).quotient.str() == "7");
}

TEST_CASE("the quotient has no roots at the forced factors") {
    FermatReport r = fermat_split(11);
    std::vector<std::string> X{"x"};
    // E_11 evaluated at 0 and 1 is nonzero (those roots are carried by x(x-1))
    Poly<Rational> q = r.quotient;
    REQUIRE(!q.eval({Rational(0)}).is_zero());
    REQUIRE(!q.eval({Rational(1)}).is_zero());
    // the full product reconstructs x^p + (1-x)^p - 1
    Poly<Rational> x = Poly<Rational>::variable(X, 0, Rational(1));
    Poly<Rational> one = Poly<Rational>::constant(X, Rational(1));
    Poly<Rational> lhs = x.pow(11) + (one - x).pow(11) - one;
    Poly<Rational> quad = x * x - x + one;
    Poly<Rational> forced = x * (x - one) * quad.pow(static_cast<unsigned>(r.b));
    REQUIRE(forced * q == lhs);
}

TEST_CASE("the split rejects non-primes and small primes") {
    REQUIRE_THROWS_AS(fermat_split(9), error);
    REQUIRE_THROWS_AS(fermat_split(4), error);
    REQUIRE_THROWS_AS(fermat_split(3), error);
    REQUIRE_THROWS_AS(fermat_split(2), error);
}
