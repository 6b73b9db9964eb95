#include <set>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <idxlab/idxlab.hpp>

using namespace idxlab;

namespace {
FieldPtr field_q(unsigned p, unsigned k) {
    return k == 1 ? make_prime_field(p) : make_extension(make_prime_field(p), k);
}
} // namespace

TEST_CASE("field axioms hold exhaustively up to q = 16") {
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        FieldPtr F = field_q(p, k);
        std::uint32_t q = F->size();
        for (std::uint32_t i = 0; i < q; ++i) {
            Fq a = F->element(i);
            REQUIRE(a + F->zero() == a);
            REQUIRE(a * F->one() == a);
            REQUIRE(a - a == F->zero());
            if (!a.is_zero()) REQUIRE(a * a.inv() == F->one());
            for (std::uint32_t j = 0; j < q; ++j) {
                Fq b = F->element(j);
                REQUIRE(a + b == b + a);
                REQUIRE(a * b == b * a);
                for (std::uint32_t l = 0; l < q; ++l) {
                    Fq c = F->element(l);
                    REQUIRE((a + b) + c == a + (b + c));
                    REQUIRE((a * b) * c == a * (b * c));
                    REQUIRE(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("canonical moduli are the first irreducible in enumeration order") {
    REQUIRE(modulus_str(*field_q(2, 2)) == "x^2+x+1");
    REQUIRE(modulus_str(*field_q(2, 3)) == "x^3+x+1");
    REQUIRE(modulus_str(*field_q(2, 4)) == "x^4+x+1");
    REQUIRE(modulus_str(*field_q(3, 2)) == "x^2+1");
    REQUIRE(field_q(2, 2) == field_q(2, 2)); // interned
}

TEST_CASE("element index round-trips and orders the field") {
    FieldPtr F9 = field_q(3, 2);
    for (std::uint32_t i = 0; i < 9; ++i) REQUIRE(F9->element(i).index() == i);
    FieldPtr F4 = field_q(2, 2);
    REQUIRE(F4->element(0).str() == "0");
    REQUIRE(F4->element(1).str() == "1");
    REQUIRE(F4->element(2).str() == "g");
    REQUIRE(F4->element(3).str() == "g+1");
    Fq g = F4->generator();
    REQUIRE(g * g == g + F4->one()); // g^2 = g + 1 under x^2+x+1
}

TEST_CASE("multiplicative generator candidates have full order in small fields") {
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
        FieldPtr F = field_q(p, k);
        // every nonzero element has order dividing q-1, attained by some element
        std::uint32_t best = 0;
        for (std::uint32_t i = 1; i < F->size(); ++i) {
            Fq a = F->element(i);
            std::uint32_t ord = 1;
            Fq x = a;
            while (x != F->one()) {
                x *= a;
                ++ord;
            }
            best = std::max(best, ord);
            REQUIRE((F->size() - 1) % ord == 0);
        }
        REQUIRE(best == F->size() - 1);
    }
}

TEST_CASE("frobenius is additive, multiplicative, and fixes exactly the prime field") {
    FieldPtr F16 = field_q(2, 4);
    for (std::uint32_t i = 0; i < 16; ++i) {
        Fq a = F16->element(i);
        for (std::uint32_t j = 0; j < 16; ++j) {
            Fq b = F16->element(j);
            REQUIRE((a + b).frobenius() == a.frobenius() + b.frobenius());
            REQUIRE((a * b).frobenius() == a.frobenius() * b.frobenius());
        }
        bool fixed = a.frobenius() == a;
        bool prime = a.is_zero() || a == F16->one();
        REQUIRE(fixed == prime);
    }
}

TEST_CASE("embeddings are injective ring maps compatible with towers") {
    FieldPtr F2 = field_q(2, 1);
    FieldPtr F4 = field_q(2, 2);
    FieldPtr F16 = field_q(2, 4);
    Embedding up(F4, F16);
    std::set<std::uint32_t> image;
    for (std::uint32_t i = 0; i < 4; ++i) {
        Fq a = F4->element(i);
        image.insert(up(a).index());
        for (std::uint32_t j = 0; j < 4; ++j) {
            Fq b = F4->element(j);
            REQUIRE(up(a + b) == up(a) + up(b));
            REQUIRE(up(a * b) == up(a) * up(b));
        }
    }
    REQUIRE(image.size() == 4);
    REQUIRE(up(F4->one()) == F16->one());
    // the image of F_4 is the fixed field of the squared frobenius
    for (std::uint32_t i : image) {
        Fq x = F16->element(i);
        REQUIRE(x.frobenius().frobenius() == x);
    }
    Embedding same(F4, F4);
    for (std::uint32_t i = 0; i < 4; ++i) REQUIRE(same(F4->element(i)) == F4->element(i));
    REQUIRE_THROWS_AS(Embedding(field_q(2, 3), F16), error);
    REQUIRE_THROWS_AS(Embedding(F4, field_q(3, 2)), error);
}

TEST_CASE("field construction rejects bad parameters") {
    REQUIRE_THROWS_AS(make_prime_field(6), error);
    REQUIRE_THROWS_AS(make_prime_field(1), error);
    REQUIRE_THROWS_AS(make_extension(make_prime_field(2), 9), error);
    REQUIRE_THROWS_AS(make_extension(make_prime_field(251), 3), error);
    REQUIRE_THROWS_AS(make_prime_field(2)->element(2), error);
    REQUIRE_THROWS_AS(make_prime_field(2)->zero().inv(), error);
}
