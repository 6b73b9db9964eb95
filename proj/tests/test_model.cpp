#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <idxlab/idxlab.hpp>

using namespace idxlab;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYT{"x", "y", "t"};

Model pair_model() { // special fiber is a conjugate line pair, reduced
    FieldPtr F3 = make_prime_field(3);
    return Model{F3, XY, "t", parse_poly("x^2+y^2+t", XYT, F3),
                 {{parse_poly("x^2+y^2", XY, F3), 1}}};
}

Model doubled_conic() { // special fiber is a smooth conic with multiplicity two
    FieldPtr F3 = make_prime_field(3);
    return Model{F3, XY, "t", parse_poly("t-(x^2+y^2+1)^2", XYT, F3),
                 {{parse_poly("x^2+y^2+1", XY, F3), 2}}};
}

Model crossing_lines() { // special fiber is two rational lines through the origin
    FieldPtr F2 = make_prime_field(2);
    return Model{F2, XY, "t", parse_poly("x*y-t", XYT, F2),
                 {{parse_poly("x", XY, F2), 1}, {parse_poly("y", XY, F2), 1}}};
}

} // namespace

TEST_CASE("model validation accepts the corpus and verifies each invariant") {
    REQUIRE(validate_model(pair_model()).empty());
    REQUIRE(validate_model(doubled_conic()).empty());
    REQUIRE(validate_model(crossing_lines()).empty());
    Model m = pair_model();
    REQUIRE(special_fiber(m) == parse_poly("x^2+y^2", XY, m.field));
}

TEST_CASE("model validation rejects broken descriptors with the right code") {
    FieldPtr F3 = make_prime_field(3);
    Model vertical{F3, XY, "t", parse_poly("t*x", XYT, F3), {{parse_poly("x", XY, F3), 1}}};
    try {
        validate_model(vertical);
        FAIL("the parameter divides the equation");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::not_flat);
    }
    Model wrong = pair_model();
    wrong.components[0].r = 2;
    try {
        validate_model(wrong);
        FAIL("component product has the wrong weight");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::component_product_mismatch);
    }
    Model shared{F3, XY, "t", parse_poly("x^2*y-t", XYT, F3),
                 {{parse_poly("x", XY, F3), 1}, {parse_poly("x*y", XY, F3), 1}}};
    try {
        validate_model(shared);
        FAIL("components share the factor x");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::not_coprime);
    }
    Model split{F3, XY, "t", parse_poly("x^2-y^2+t", XYT, F3),
                {{parse_poly("x^2-y^2", XY, F3), 1}}};
    try {
        validate_model(split);
        FAIL("the declared component factors as (x-y)(x+y)");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::decomposition_inconsistent);
    }
}

TEST_CASE("components outside the exhaustive search range are trusted loudly") {
    FieldPtr F5 = make_prime_field(5);
    Model m{F5, XY, "t", parse_poly("x^2+y^2+1+t", XYT, F5),
            {{parse_poly("x^2+y^2+1", XY, F5), 1}}};
    auto warnings = validate_model(m);
    REQUIRE(warnings.size() == 1);
    REQUIRE(warnings[0].find("trusted") != std::string::npos);
}

TEST_CASE("the fiber gcd bound multiplies component weight by regular index") {
    FiberReport r1 = model_fiber_report(pair_model(), 2);
    REQUIRE(r1.components.size() == 1);
    REQUIRE(r1.components[0].delta_reg == 2); // no rational smooth point on the pair
    REQUIRE(r1.gcd_bound == 2);

    FiberReport r2 = model_fiber_report(doubled_conic(), 2);
    REQUIRE(r2.components[0].delta_reg == 1); // four rational smooth points
    REQUIRE(r2.components[0].a_d[0] == 4);
    REQUIRE(r2.gcd_bound == 2); // but the component carries weight two

    FiberReport r3 = model_fiber_report(crossing_lines(), 1);
    REQUIRE(r3.gcd_bound == 1);
}

TEST_CASE("regularity of the total space reads the order of the translated equation") {
    FieldPtr F3 = make_prime_field(3);
    Model m = pair_model();
    std::vector<Fq> origin{F3->zero(), F3->zero()};
    REQUIRE(model_regularity_at(m, origin));
    Model sq{F3, XY, "t", parse_poly("x^2+y^2+t^2", XYT, F3),
             {{parse_poly("x^2+y^2", XY, F3), 1}}};
    REQUIRE_FALSE(model_regularity_at(sq, origin));
    std::vector<Fq> off{F3->one(), F3->one()};
    try {
        model_regularity_at(m, off);
        FAIL("the point is not on the special fiber");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::point_not_on_fiber);
    }
}

TEST_CASE("the point dossier computes the fiber multiplicity by two routes") {
    FieldPtr F3 = make_prime_field(3);
    std::vector<Fq> origin{F3->zero(), F3->zero()};
    ModelPointReport p1 = model_point_report(pair_model(), origin);
    REQUIRE(p1.point_degree == 1);
    REQUIRE(p1.regular);
    REQUIRE(p1.components_through == std::vector<std::size_t>{0});
    REQUIRE(p1.component_mults == std::vector<long long>{2});
    REQUIRE(p1.e_fiber == 2);
    REQUIRE(p1.lift_bound == 2);

    ModelPointReport p2 = model_point_report(doubled_conic(), {F3->one(), F3->one()});
    REQUIRE(p2.e_fiber == 2); // weight two times a smooth point
    REQUIRE(p2.component_mults == std::vector<long long>{1});
    REQUIRE(p2.lift_bound == 2);

    FieldPtr F2 = make_prime_field(2);
    ModelPointReport p3 = model_point_report(crossing_lines(), {F2->zero(), F2->zero()});
    REQUIRE(p3.components_through == std::vector<std::size_t>{0, 1});
    REQUIRE(p3.e_fiber == 2); // both lines pass through, each with weight one
    REQUIRE(p3.regular);
}

TEST_CASE("a transversal cut through a weight-two component lifts to degree two") {
    FieldPtr F3 = make_prime_field(3);
    Model m = doubled_conic();
    LiftReport r = lift_degree(m, {F3->one(), F3->one()}, parse_poly("x-1", XY, F3));
    REQUIRE(r.computed == 2);
    REQUIRE(r.predicted == 2);
    REQUIRE(r.matches);
    REQUIRE_FALSE(r.witness.has_value()); // the fiber is non-reduced at the point
}

TEST_CASE("a rational point on a crossing line lifts with an explicit series") {
    FieldPtr F2 = make_prime_field(2);
    Model m = crossing_lines();
    LiftReport r = lift_degree(m, {F2->one(), F2->zero()}, parse_poly("x-1", XY, F2));
    REQUIRE(r.computed == 1);
    REQUIRE(r.predicted == 1);
    REQUIRE(r.matches);
    REQUIRE(r.witness.has_value());
    REQUIRE(*r.witness == "y = t");
}

TEST_CASE("a degree-two fiber point lifts to a degree-two horizontal curve") {
    Model m = pair_model();
    std::vector<Fq> pt = find_fiber_point(m, 2);
    REQUIRE(pt[0].str() == "g");
    REQUIRE(pt[1] == pt[1].field().one());
    LiftReport r = lift_degree(m, pt, parse_poly("y-1", XY, m.field));
    REQUIRE(r.point_degree == 2);
    REQUIRE(r.computed == 2);
    REQUIRE(r.predicted == 2);
    REQUIRE(r.matches);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness->rfind("x = ", 0) == 0);
    // the gcd bound divides the exhibited degree, and the bound is attained
    REQUIRE(r.computed % model_fiber_report(m, 2).gcd_bound == 0);
    ModelPointReport pr = model_point_report(m, pt);
    REQUIRE(r.computed >= pr.lift_bound);
}

TEST_CASE("lifting refuses ill-posed points and non-transversal cuts") {
    FieldPtr F3 = make_prime_field(3);
    std::vector<Fq> origin{F3->zero(), F3->zero()};
    try {
        lift_degree(pair_model(), origin, parse_poly("y", XY, F3));
        FAIL("the fiber component is singular at the origin");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::not_regular_point);
    }
    FieldPtr F2 = make_prime_field(2);
    try {
        lift_degree(crossing_lines(), {F2->zero(), F2->zero()}, parse_poly("x+y", XY, F2));
        FAIL("the origin lies on two components");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::not_regular_point);
    }
    try {
        lift_degree(doubled_conic(), {F3->one(), F3->one()}, parse_poly("x+y+1", XY, F3));
        FAIL("the cut is tangent to the conic at (1,1)");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::not_transversal);
    }
    try {
        lift_degree(doubled_conic(), {F3->one(), F3->one()}, parse_poly("x", XY, F3));
        FAIL("the cut misses the point");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::not_transversal);
    }
}

TEST_CASE("the weighted point count of the special fiber matches its cycle") {
    for (int d = 1; d <= 2; ++d) {
        for (const Model& m : {pair_model(), doubled_conic(), crossing_lines()}) {
            Variety red{m.field, false, m.fiber_vars, {special_fiber(m)}, 1};
            FieldPtr E = d == 1 ? m.field
                                : make_extension(make_prime_field(m.field->characteristic()),
                                                 m.field->degree() * d);
            long long lhs = 0;
            for (const auto& pt : enumerate_points(red, d)) {
                for (const auto& c : m.components) {
                    if (detail::change_field(c.g, m.field, E).eval(pt).is_zero()) lhs += c.r;
                }
            }
            long long rhs = 0;
            for (const auto& c : m.components) {
                Variety comp{m.field, false, m.fiber_vars, {c.g}, 1};
                rhs += c.r * static_cast<long long>(enumerate_points(comp, d).size());
            }
            REQUIRE(lhs == rhs);
        }
    }
}
