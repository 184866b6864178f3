#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppbase/classify.hpp"
#include "ppbase/genset.hpp"
#include "ppbase/group.hpp"
#include "ppbase/perm.hpp"
#include "ppbase/structure.hpp"

using namespace ppbase;

namespace {

Permutation p(const std::string& cycles, unsigned degree) { return parse_cycles(cycles, degree); }

PermGroup sym(unsigned n) {
    std::vector<Permutation> gens{p("(1,2)", n)};
    if (n > 2) {
        std::vector<unsigned> im(n);
        for (unsigned i = 0; i < n; ++i) im[i] = (i + 1) % n;
        gens.push_back(Permutation(std::move(im)));
    }
    return PermGroup(n, std::move(gens));
}

PermGroup alt5() {
    return PermGroup(5, {p("(1,2,3)", 5), p("(3,4,5)", 5)});
}

PermGroup cyclic(unsigned n) {
    std::vector<unsigned> im(n);
    for (unsigned i = 0; i < n; ++i) im[i] = (i + 1) % n;
    return PermGroup(n, {Permutation(std::move(im))});
}

// C7 x| C3, the Frobenius group of order 21 (x -> 2x has order 3 mod 7).
PermGroup f21() {
    return PermGroup(7, {p("(1,2,3,4,5,6,7)", 7), p("(2,3,5)(4,7,6)", 7)});
}

// (C3 x C3) x| C2 with simultaneous inversion.
PermGroup c3c3_inv() {
    return PermGroup(6, {p("(1,2,3)", 6), p("(4,5,6)", 6), p("(2,3)(5,6)", 6)});
}

PermGroup product(const PermGroup& A, const PermGroup& B) {
    unsigned d = A.degree() + B.degree();
    std::vector<Permutation> gens;
    for (const auto& g : A.generators()) {
        std::vector<unsigned> im(d);
        for (unsigned i = 0; i < A.degree(); ++i) im[i] = g(i);
        for (unsigned i = A.degree(); i < d; ++i) im[i] = i;
        gens.push_back(Permutation(std::move(im)));
    }
    for (const auto& g : B.generators()) {
        std::vector<unsigned> im(d);
        for (unsigned i = 0; i < A.degree(); ++i) im[i] = i;
        for (unsigned i = 0; i < B.degree(); ++i) im[A.degree() + i] = A.degree() + g(i);
        gens.push_back(Permutation(std::move(im)));
    }
    return PermGroup(d, std::move(gens));
}

PermGroup elem_abelian(unsigned prime, unsigned rank) {
    PermGroup G = cyclic(prime);
    for (unsigned i = 1; i < rank; ++i) G = product(G, cyclic(prime));
    return G;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    auto f = poly_from(2, {1, 1, 1});  // x^2+x+1 over F2
    CHECK(poly_is_irreducible(f));
    CHECK(!poly_is_irreducible(poly_from(2, {1, 0, 1})));  // x^2+1 = (x+1)^2
    CHECK(poly_to_string(f) == "x^2+x+1");
    auto g = poly_mul(f, f);
    CHECK(poly_divexact(g, f) == f);
    CHECK(poly_gcd(g, f) == f);
    CHECK(least_irreducible(2, 3) == poly_from(2, {1, 1, 0, 1}));  // x^3+x+1
    CHECK(poly_lcm(poly_from(3, {2, 1}), poly_from(3, {1, 1})).degree() == 2);
}

TEST_CASE("minimal polynomial examples") {
    ModuleAction ident{5, 3, FpMatrix::identity(5, 3), {}};
    CHECK(minimal_polynomial(ident) == poly_from(5, {4, 1}));  // x - 1

    // companion matrix of x^2+x+1 over F2
    FpMatrix comp{2, 2, {0, 1, 1, 1}};
    ModuleAction ca{2, 2, comp, {}};
    CHECK(minimal_polynomial(ca) == poly_from(2, {1, 1, 1}));

    // [[0,1],[2,0]] over F3 has order 4; minimal polynomial x^2+1
    FpMatrix m{3, 2, {0, 1, 2, 0}};
    CHECK(mat_order(m) == 4);
    ModuleAction ma{3, 2, m, {}};
    CHECK(minimal_polynomial(ma) == poly_from(3, {1, 0, 1}));

    FpMatrix sing{3, 2, {1, 2, 2, 4}};
    ModuleAction sa{3, 2, sing, {}};
    CHECK_THROWS_AS(minimal_polynomial(sa), Error);
}

TEST_CASE("char_poly equals minpoly power for scalar actions") {
    FpMatrix two = FpMatrix::identity(3, 2);
    two.at(0, 0) = 2;
    two.at(1, 1) = 2;
    CHECK(char_poly(two) == poly_pow(poly_from(3, {1, 1}), 2));  // (x+1)^2 = (x-2)^2
    FpMatrix m{3, 2, {0, 1, 2, 0}};
    CHECK(char_poly(m) == min_poly(m));  // degree 2 = dim
}

TEST_CASE("recognize_scalar_extension on Sym(3)") {
    auto se = recognize_scalar_extension(sym(3));
    REQUIRE(se.has_value());
    CHECK(se->p == 3);
    CHECK(se->q == 2);
    CHECK(se->dim == 1);
    CHECK(se->module_degree == 1);
    CHECK(se->multiplicity == 1);
    CHECK(se->min_poly == poly_from(3, {1, 1}));  // x+1, i.e. action by -1
    CHECK(se->P.order() == 3);
    CHECK(se->Q.order() == 2);
}

TEST_CASE("recognize_scalar_extension: simultaneous inversion is homogeneous") {
    auto se = recognize_scalar_extension(c3c3_inv());
    REQUIRE(se.has_value());
    CHECK(se->p == 3);
    CHECK(se->dim == 2);
    CHECK(se->module_degree == 1);
    CHECK(se->multiplicity == 2);
    CHECK(se->min_poly == poly_from(3, {1, 1}));
}

TEST_CASE("recognize_scalar_extension rejections") {
    CHECK(!recognize_scalar_extension(sym(4)).has_value());
    CHECK(!recognize_scalar_extension(cyclic(6)).has_value());  // action not faithful
    CHECK(!recognize_scalar_extension(alt5()).has_value());
    CHECK_THROWS_AS(recognize_scalar_extension(cyclic(4)), Error);  // Phi != 1
    auto se21 = recognize_scalar_extension(f21());
    REQUIRE(se21.has_value());
    CHECK(se21->p == 7);
    CHECK(se21->q == 3);
    CHECK(se21->module_degree == 1);
    // the mixed action diag(-1, 1) on C3 x C3 is faithful but not homogeneous
    auto mixed = PermGroup(6, {p("(1,2,3)", 6), p("(4,5,6)", 6), p("(2,3)", 6)});
    CHECK(mixed.order() == 18);
    CHECK(!recognize_scalar_extension(mixed).has_value());
}

TEST_CASE("basis independence under relabelling") {
    auto G = c3c3_inv();
    auto se = recognize_scalar_extension(G);
    REQUIRE(se.has_value());
    // conjugate the whole group by a permutation and re-recognize
    auto t = p("(1,4)(2,5)(3,6)", 6);
    std::vector<Permutation> gens;
    for (const auto& g : G.generators()) gens.push_back(g.conjugated_by(t));
    auto se2 = recognize_scalar_extension(PermGroup(6, gens));
    REQUIRE(se2.has_value());
    CHECK(se2->min_poly == se->min_poly);
    CHECK(se2->multiplicity == se->multiplicity);
}

TEST_CASE("minimal normal subgroups of a scalar extension have order p^d") {
    for (const PermGroup& G : {sym(3), f21(), c3c3_inv()}) {
        auto se = recognize_scalar_extension(G);
        REQUIRE(se.has_value());
        std::uint64_t expect = 1;
        for (unsigned i = 0; i < se->module_degree; ++i) expect *= se->p;
        for (const auto& M : minimal_normal_subgroups(G))
            if (se->P.contains_subgroup(M)) CHECK(M.order() == expect);
    }
}

TEST_CASE("coprime_factorize") {
    auto f6 = coprime_factorize(cyclic(6));
    REQUIRE(f6.size() == 2);
    CHECK(f6[0].order() == 2);
    CHECK(f6[1].order() == 3);

    auto f30 = coprime_factorize(product(sym(3), cyclic(5)));
    REQUIRE(f30.size() == 2);
    CHECK(f30[0].order() == 6);
    CHECK(f30[1].order() == 5);

    CHECK(coprime_factorize(sym(3)).size() == 1);
    CHECK(coprime_factorize(product(cyclic(2), sym(3))).size() == 1);  // 2 and 6 share a prime

    // F21 x F20-like pair-split: no single prime splits F21 x C2
    auto f42 = coprime_factorize(product(f21(), cyclic(2)));
    REQUIRE(f42.size() == 2);
    CHECK(f42[0].order() == 2);
    CHECK(f42[1].order() == 21);
    CHECK_THROWS_AS(coprime_factorize(cyclic(4)), Error);
}

TEST_CASE("is_bpp_structural verdicts") {
    auto d1 = is_bpp_structural(elem_abelian(2, 2));
    CHECK(d1.kind == BppDescriptor::Kind::ElementaryAbelian);
    CHECK(d1.prime == 2);

    auto d2 = is_bpp_structural(product(f21(), cyclic(2)));
    REQUIRE(d2.kind == BppDescriptor::Kind::CoprimeProduct);
    REQUIRE(d2.factors.size() == 2);
    CHECK(d2.factors[0].kind == BppDescriptor::Kind::ElementaryAbelian);
    CHECK(d2.factors[1].kind == BppDescriptor::Kind::ScalarExtension);

    auto d3 = is_bpp_structural(alt5());
    CHECK(d3.kind == BppDescriptor::Kind::NotBpp);
    CHECK(d3.reason == "non-solvable");

    auto d4 = is_bpp_structural(PermGroup::trivial(2));
    CHECK(d4.kind == BppDescriptor::Kind::ElementaryAbelian);

    auto d5 = is_bpp_structural(sym(4));
    CHECK(d5.kind == BppDescriptor::Kind::NotBpp);
    CHECK(is_bpp_structural(sym(3)).kind == BppDescriptor::Kind::ScalarExtension);

    CHECK_THROWS_AS(is_bpp_structural(cyclic(4)), Error);
}

TEST_CASE("structural verdict matches brute force on Frattini-free groups") {
    std::vector<PermGroup> groups = {
        sym(3), sym(4), alt5(), cyclic(6),  cyclic(15), elem_abelian(2, 3), elem_abelian(3, 2),
        f21(),  c3c3_inv(), product(sym(3), cyclic(5)), product(cyclic(2), sym(3)),
        product(f21(), cyclic(2)), PermGroup::trivial(2)};
    for (const auto& G : groups) {
        CAPTURE(G.order());
        REQUIRE(frattini(G).is_trivial());
        CHECK(is_bpp_structural(G).is_bpp() == is_bpp_bruteforce(G));
    }
}
