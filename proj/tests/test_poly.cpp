#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <idxlab/idxlab.hpp>

using namespace idxlab;

namespace {

const std::vector<std::string> XY{"x", "y"};

Poly<Fq> random_poly(const FieldPtr& F, std::mt19937_64& rng, int deg) {
    Poly<Fq> r(XY);
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j)
            r.add_term(Expo{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)},
                       F->element(uniform_index(rng, F->size())));
    return r;
}

std::vector<Fq> random_point(const FieldPtr& F, std::mt19937_64& rng) {
    return {F->element(uniform_index(rng, F->size())), F->element(uniform_index(rng, F->size()))};
}

} // namespace

TEST_CASE("grevlex puts higher degree first and breaks ties from the back") {
    FieldPtr F = make_prime_field(5);
    Poly<Fq> p = parse_poly("x^2+x*y+y^2+x+y+1", XY, F);
    std::vector<std::string> seen;
    for (const auto& [e, c] : p.terms()) {
        Poly<Fq> m = Poly<Fq>::monomial(XY, e, c);
        seen.push_back(m.str());
    }
    REQUIRE(seen == std::vector<std::string>{"x^2", "x*y", "y^2", "x", "y", "1"});
    REQUIRE(p.leading_term().first == Expo{2, 0});
}

TEST_CASE("evaluation is a ring map at random points") {
    FieldPtr F = make_extension(make_prime_field(2), 2);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Poly<Fq> a = random_poly(F, rng, 3);
        Poly<Fq> b = random_poly(F, rng, 3);
        auto pt = random_point(F, rng);
        REQUIRE((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
        REQUIRE((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
}

TEST_CASE("translation composes with evaluation") {
    FieldPtr F = make_prime_field(7);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Poly<Fq> a = random_poly(F, rng, 3);
        auto shift = random_point(F, rng);
        auto pt = random_point(F, rng);
        std::vector<Fq> moved{pt[0] + shift[0], pt[1] + shift[1]};
        REQUIRE(a.translate(shift).eval(pt) == a.eval(moved));
    }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
    FieldPtr F = make_prime_field(3);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        Poly<Fq> a = random_poly(F, rng, 3);
        Poly<Fq> b = random_poly(F, rng, 3);
        for (std::size_t i = 0; i < 2; ++i) {
            Poly<Fq> lhs = (a * b).derivative(i);
            Poly<Fq> rhs = a.derivative(i) * b + a * b.derivative(i);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("order and lowest form pick out the bottom of the polynomial") {
    FieldPtr F = make_prime_field(2);
    Poly<Fq> f = parse_poly("x^2+x*y+y^3+x^4", XY, F);
    REQUIRE(f.order() == 2);
    REQUIRE(f.total_degree() == 4);
    REQUIRE(f.lowest_form() == parse_poly("x^2+x*y", XY, F));
    REQUIRE(f.lowest_form().is_homogeneous());
    REQUIRE(!f.is_homogeneous());
    REQUIRE(Poly<Fq>(XY).order() == -1);
}

TEST_CASE("division by a single divisor recomposes and detects divisibility") {
    FieldPtr F = make_prime_field(5);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Poly<Fq> a = random_poly(F, rng, 3);
        Poly<Fq> g = random_poly(F, rng, 2);
        if (g.is_zero()) continue;
        auto [q, r] = a.divrem(g);
        REQUIRE(q * g + r == a);
        Poly<Fq> prod = a * g;
        REQUIRE(prod.divisible_by(g));
        if (!a.is_zero()) REQUIRE(prod.exact_div(g) == a);
    }
    Poly<Fq> x = parse_poly("x", XY, F);
    REQUIRE(!parse_poly("x+y", XY, F).divisible_by(x));
}

TEST_CASE("scalar ratio finds the constant between proportional polynomials") {
    FieldPtr F = make_prime_field(7);
    Poly<Fq> f = parse_poly("x^2+3*y", XY, F);
    Poly<Fq> g = f * F->from_int(4);
    auto c = g.scalar_ratio(f);
    REQUIRE(c.has_value());
    REQUIRE(*c == F->from_int(4));
    REQUIRE(!g.scalar_ratio(parse_poly("x^2+y", XY, F)).has_value());
    REQUIRE(!g.scalar_ratio(parse_poly("x^2", XY, F)).has_value());
}

TEST_CASE("variable plumbing: swap, drop, extend") {
    FieldPtr F = make_prime_field(3);
    Poly<Fq> f = parse_poly("x^2+2*y", XY, F);
    REQUIRE(f.swap_vars(0, 1) == parse_poly("y^2+2*x", XY, F));
    Poly<Fq> ext = f.extend_vars("t");
    REQUIRE(ext.vars() == std::vector<std::string>{"x", "y", "t"});
    REQUIRE(ext.subst_const(2, F->one()) == ext);
    Poly<Fq> only_x = parse_poly("x^2+x", XY, F);
    Poly<Fq> dropped = only_x.drop_var(1);
    REQUIRE(dropped.vars() == std::vector<std::string>{"x"});
    REQUIRE_THROWS_AS(f.drop_var(0), error);
}

TEST_CASE("substitution is evaluation with polynomial values") {
    FieldPtr F = make_prime_field(5);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Poly<Fq> a = random_poly(F, rng, 3);
        Poly<Fq> repl = random_poly(F, rng, 2);
        auto pt = random_point(F, rng);
        std::vector<Fq> inner{repl.eval(pt), pt[1]};
        REQUIRE(a.subst_var(0, repl).eval(pt) == a.eval(inner));
    }
}

TEST_CASE("string form survives a parse round trip") {
    FieldPtr F4 = make_extension(make_prime_field(2), 2);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        Poly<Fq> a = random_poly(F4, rng, 3);
        REQUIRE(parse_poly(a.str(), XY, F4) == a);
    }
    FieldPtr F7 = make_prime_field(7);
    Poly<Fq> withneg = parse_poly("x^2-3*y-1", XY, F7);
    REQUIRE(parse_poly(withneg.str(), XY, F7) == withneg);
}

TEST_CASE("rationals feed polynomial arithmetic without loss") {
    std::vector<std::string> X{"x"};
    Poly<Rational> f = Poly<Rational>::variable(X, 0, Rational(1));
    Poly<Rational> g = (f - Poly<Rational>::constant(X, Rational(1))).pow(3);
    REQUIRE(g.str() == "x^3-3*x^2+3*x-1");
    Rational half(BigInt(1), BigInt(2));
    REQUIRE((half + half).str() == "1");
    REQUIRE((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str() == "1/2");
}
