#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppbase/group.hpp"
#include "ppbase/perm.hpp"
#include "ppbase/spread.hpp"
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

PermGroup alt(unsigned n) {
    std::vector<Permutation> gens;
    for (unsigned i = 2; i + 1 <= n; ++i)
        gens.push_back(p("(1," + std::to_string(i) + "," + std::to_string(i + 1) + ")", n));
    return PermGroup(n, std::move(gens));
}

}  // namespace

TEST_CASE("fixed point ratio examples") {
    auto S3 = sym(3);
    CHECK(fixed_point_ratio(S3, p("(1,2)", 3), closure(3, {p("(1,2)", 3)})) == Rational(1, 3));
    CHECK(fixed_point_ratio(S3, Permutation::identity(3), closure(3, {p("(1,2)", 3)})) == 1);
    CHECK(fixed_point_ratio(S3, p("(1,2,3)", 3), closure(3, {p("(1,2,3)", 3)})) == 1);
    CHECK_THROWS_AS(fixed_point_ratio(alt(4), p("(1,2)", 4), closure(4, {p("(1,2)", 4)})), Error);
}

TEST_CASE("dual-route identity over Sym(4) classes and maximals") {
    auto S4 = sym(4);
    auto lat = subgroup_lattice(S4);
    auto classes = conjugacy_classes(S4);
    for (std::size_t i : lat.maximal_indices()) {
        PermGroup M = lat.subgroup(i);
        for (const auto& [rep, size] : classes) {
            (void)size;
            // throws internally if the two routes ever disagree
            auto r = fixed_point_ratio(S4, rep, M);
            CHECK(r >= 0);
            CHECK(r <= 1);
        }
    }
}

TEST_CASE("spread_P on Sym(5)") {
    auto S5 = sym(5);
    auto A5 = alt(5);
    auto v = spread_P(S5, A5, p("(1,2)", 5), p("(1,2,3,4,5)", 5));
    CHECK(v < 1);   // some conjugate of the 5-cycle generates Sym(5) with (1,2)
    CHECK(v >= 0);
    // degenerate: s = identity, g not covering S
    CHECK(spread_P(S5, A5, p("(1,2)", 5), Permutation::identity(5)) == 1);
    CHECK_THROWS_AS(spread_P(S5, A5, p("(1,2)", 5), p("(1,2)", 5)), Error);  // s not in S
}

TEST_CASE("maximal overgroups") {
    auto S3 = sym(3);
    auto over = maximal_overgroups(S3, p("(1,2,3)", 3));
    REQUIRE(over.size() == 1);
    CHECK(over[0].order() == 3);
    CHECK(maximal_overgroups(S3, Permutation::identity(3)).size() == 4);  // A3 + three C2
    auto C5 = closure(5, {p("(1,2,3,4,5)", 5)});
    CHECK(maximal_overgroups(C5, p("(1,2,3,4,5)", 5)).empty());
}

TEST_CASE("spread bound check on Sym(5)") {
    auto S5 = sym(5);
    auto A5 = alt(5);
    auto rep = spread_bound_check(S5, A5, p("(1,2)", 5), p("(1,2,3,4,5)", 5));
    CHECK(rep.holds);
    CHECK(rep.P_value <= rep.bound_value);
    CHECK(rep.maximal_overgroups_of_s > 0);
    // g = identity: P(1, s) counts conjugates t with <t> not covering S
    auto rid = spread_bound_check(S5, A5, Permutation::identity(5), p("(1,2,3,4,5)", 5));
    CHECK(rid.P_value == 1);  // no 5-cycle generates Alt(5) alone
}

TEST_CASE("t_HK examples") {
    auto S5 = sym(5);
    auto A5 = alt(5);
    CHECK(t_HK(S5, A5, closure(5, {p("(1,2)", 5)})) == 1);
    CHECK(t_HK(S5, A5, S5) == 0);
    // socle case: K = 1, H = S: smallest pp generating set of Alt(5)
    CHECK(t_HK(A5, A5, PermGroup::trivial(5)) == 2);
    CHECK_THROWS_AS(t_HK(S5, A5, closure(5, {p("(1,2,3)", 5)})), Error);  // KS != H
}

TEST_CASE("t_H of Sym(5) with socle Alt(5)") {
    CHECK(t_H(sym(5), alt(5)) == 1);
    // H = S case: every subgroup supplements; K = 1 forces t = 2
    CHECK(t_H(alt(5), alt(5)) == 2);
}

TEST_CASE("K-independence of the explicit triple in Sym(5)") {
    auto S5 = sym(5);
    auto K = closure(5, {p("(1,2)", 5)});
    std::vector<Permutation> lambda{p("(1,2,3)", 5), p("(1,2)(3,4)", 5), p("(1,2)(3,5)", 5)};
    CHECK(is_k_independent_generating(S5, K, lambda));
    CHECK(m_K(S5, alt(5), K) >= 3);
    // K = H: no nonempty K-independent set exists
    CHECK(m_K(S5, alt(5), S5) == 0);
    std::vector<Permutation> dep{p("(1,2,3)", 5), p("(1,3,2)", 5)};
    CHECK(!is_k_independent_generating(S5, K, dep));
}

TEST_CASE("t_H parallel equals serial") {
    CHECK(t_H(sym(5), alt(5), kLatticeCapDefault, false) ==
          t_H(sym(5), alt(5), kLatticeCapDefault, true));
}

TEST_CASE("spread_P parallel equals serial") {
    auto S5 = sym(5);
    auto A5 = alt(5);
    CHECK(spread_P(S5, A5, p("(1,2)", 5), p("(1,2,3,4,5)", 5), kLatticeCapDefault, false) ==
          spread_P(S5, A5, p("(1,2)", 5), p("(1,2,3,4,5)", 5), kLatticeCapDefault, true));
}
