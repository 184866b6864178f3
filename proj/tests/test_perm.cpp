#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ppbase/group.hpp"
#include "ppbase/numeric.hpp"
#include "ppbase/perm.hpp"

using namespace ppbase;

namespace {

Permutation p(const std::string& cycles, unsigned degree) { return parse_cycles(cycles, degree); }

Permutation random_perm(std::mt19937& rng, unsigned degree) {
    std::vector<unsigned> im(degree);
    for (unsigned i = 0; i < degree; ++i) im[i] = i;
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
}

}  // namespace

TEST_CASE("element_order basics") {
    CHECK(element_order(Permutation::identity(5)) == 1);
    CHECK(element_order(p("(1,2,3)", 3)) == 3);
    CHECK(element_order(p("(1,2)(3,4,5)", 5)) == 6);
    CHECK(element_order(p("(1,2,3,4)", 4)) == 4);
}

TEST_CASE("composition and inverse") {
    auto a = p("(1,2,3)", 4);
    auto b = p("(3,4)", 4);
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b)(0) == b(a(0)));
    // associativity spot-check
    auto c = p("(1,4)", 4);
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK(a.power(3).is_identity());
    CHECK(a.power(-1) == a.inverse());
}

TEST_CASE("is_pp_element") {
    CHECK(is_pp_element(p("(1,2,3,4)", 4)));       // order 4 = 2^2
    CHECK(!is_pp_element(p("(1,2)(3,4,5)", 5)));   // order 6
    CHECK(!is_pp_element(Permutation::identity(4)));  // identity is not pp
}

TEST_CASE("pp_decompose order 6") {
    auto g = p("(1,2)(3,4,5)", 5);
    auto d = pp_decompose(g);
    REQUIRE(d.parts.size() == 2);
    CHECK(element_order(d.parts[0]) == 2);
    CHECK(element_order(d.parts[1]) == 3);
    CHECK(d.parts[0] == g.power(3));
    CHECK(d.parts[1] == g.power(4));
    Permutation prod = d.parts[0] * d.parts[1];
    CHECK(prod == g);
    CHECK(d.parts[0] * d.parts[1] == d.parts[1] * d.parts[0]);
}

TEST_CASE("pp_decompose already prime power") {
    auto g = p("(1,2,3,4)", 4);
    auto d = pp_decompose(g);
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0] == g);
}

TEST_CASE("pp_decompose rejects identity") {
    CHECK_THROWS_AS(pp_decompose(Permutation::identity(3)), Error);
}

TEST_CASE("pp_decompose parts regenerate the cyclic group") {
    // order 12: parts of orders 4 and 3; <parts> must equal <g> elementwise.
    auto g = p("(1,2,3,4)(5,6,7)", 7);
    auto d = pp_decompose(g);
    REQUIRE(d.parts.size() == 2);
    CHECK(element_order(d.parts[0]) == 4);
    CHECK(element_order(d.parts[1]) == 3);
    auto cyc = closure(7, {g}).elements();
    auto regen = closure(7, d.parts).elements();
    CHECK(cyc == regen);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto r = random_perm(rng, 8);
        if (r.is_identity()) continue;
        auto dec = pp_decompose(r);
        // pairwise commuting, coprime pp orders, product = source in order
        Permutation prod = Permutation::identity(8);
        for (const auto& part : dec.parts) {
            CHECK(is_pp_element(part));
            prod = prod * part;
        }
        CHECK(prod == r);
        for (std::size_t i = 0; i < dec.parts.size(); ++i)
            for (std::size_t j = i + 1; j < dec.parts.size(); ++j) {
                CHECK(dec.parts[i] * dec.parts[j] == dec.parts[j] * dec.parts[i]);
                CHECK(std::gcd(element_order(dec.parts[i]), element_order(dec.parts[j])) == 1);
            }
        CHECK(closure(8, {r}).elements() == closure(8, dec.parts).elements());
    }
}

TEST_CASE("cycle format round trip") {
    CHECK(format_cycles(Permutation::identity(6)) == "()");
    CHECK(format_cycles(p("(1,2)(3,4,5)", 6)) == "(1,2)(3,4,5)");
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto g = random_perm(rng, 9);
        CHECK(parse_cycles(format_cycles(g), 9) == g);
    }
}

TEST_CASE("cycle parse errors") {
    CHECK_THROWS_AS(parse_cycles("(1,2", 4), ParseError);
    CHECK_THROWS_AS(parse_cycles("(0,1)", 4), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1,5)", 4), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 4), ParseError);
    CHECK_THROWS_AS(parse_cycles("", 4), ParseError);
    CHECK(parse_cycles("()", 4).is_identity());
    try {
        parse_cycles("(1,2", 4);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("primary_part exponents") {
    auto g = p("(1,2)(3,4,5)", 5);  // order 6
    CHECK(primary_part(g, 2) == g.power(3));
    CHECK(primary_part(g, 3) == g.power(4));
    CHECK_THROWS_AS(primary_part(g, 5), Error);
}

TEST_CASE("numeric helpers") {
    CHECK(is_prime_power(8));
    CHECK(is_prime_power(7));
    CHECK(!is_prime_power(1));
    CHECK(!is_prime_power(6));
    CHECK(is_prime(2));
    CHECK(!is_prime(1));
    CHECK(multiplicative_order(2, 31) == 5);
    CHECK(multiplicative_order(2, 7) == 3);
}
