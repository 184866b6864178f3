#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "ppbase/group.hpp"
#include "ppbase/perm.hpp"
#include "ppbase/reference.hpp"
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

PermGroup cyclic(unsigned n) {
    std::vector<unsigned> im(n);
    for (unsigned i = 0; i < n; ++i) im[i] = (i + 1) % n;
    return PermGroup(n, {Permutation(std::move(im))});
}

// Quaternion group Q8 as a regular permutation group on 8 points.
PermGroup quaternion8() {
    // points: 1,i,-1,-i,j,k,-j,-k indexed 1..8 -> right multiplication by i and j
    return PermGroup(8, {p("(1,2,3,4)(5,8,7,6)", 8), p("(1,5,3,7)(2,6,4,8)", 8)});
}

}  // namespace

TEST_CASE("subgroup lattice counts") {
    CHECK(subgroup_lattice(sym(3)).size() == 6);
    CHECK(subgroup_lattice(cyclic(4)).size() == 3);
    auto V4 = closure(4, {p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)});
    CHECK(subgroup_lattice(V4).size() == 5);
    CHECK(subgroup_lattice(sym(4)).size() == 30);
    CHECK(subgroup_lattice(alt(4)).size() == 10);
    CHECK(subgroup_lattice(PermGroup::trivial(3)).size() == 1);
}

TEST_CASE("lattice matches the brute-force oracle on small groups") {
    for (const PermGroup& G : {sym(3), sym(4), alt(4), cyclic(12), quaternion8(),
                               closure(7, {p("(1,2,3,4,5,6,7)", 7), p("(2,3,5)(4,7,6)", 7)})}) {
        auto lat = subgroup_lattice(G);
        auto oracle = ref::all_subgroups_bruteforce(G);
        REQUIRE(lat.size() == oracle.size());
        // every oracle subgroup appears exactly once in the lattice
        for (const auto& S : oracle) {
            unsigned hits = 0;
            for (std::size_t i = 0; i < lat.size(); ++i)
                if (lat.entries[i].sub.order() == S.order() && lat.subgroup(i).same_group_as(S)) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("maximal flags agree with the definition") {
    auto G = sym(4);
    auto lat = subgroup_lattice(G);
    auto T = lat.table;
    auto els = G.elements();
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const auto& E = lat.entries[i];
        PermGroup M = lat.subgroup(i);
        bool maximal_def = M.order() != G.order();
        if (maximal_def) {
            for (const auto& x : els) {
                if (M.contains(x)) continue;
                auto gens = M.generators();
                gens.push_back(x);
                if (closure(G.degree(), gens).order() != G.order()) {
                    maximal_def = false;
                    break;
                }
            }
        }
        CHECK(E.maximal == maximal_def);
    }
}

TEST_CASE("serial and parallel lattice agree") {
    for (const PermGroup& G : {sym(4), sym(5), quaternion8()}) {
        auto a = subgroup_lattice(G, 2016, false);
        auto b = subgroup_lattice(G, 2016, true);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a.entries[i].sub.bits == b.entries[i].sub.bits);
            CHECK(a.entries[i].class_id == b.entries[i].class_id);
            CHECK(a.entries[i].maximal == b.entries[i].maximal);
            CHECK(a.entries[i].normal == b.entries[i].normal);
        }
    }
}

TEST_CASE("frattini subgroups") {
    CHECK(frattini(cyclic(4)).order() == 2);
    CHECK(frattini(sym(4)).order() == 1);
    auto q8 = quaternion8();
    auto phi = frattini(q8);
    CHECK(phi.order() == 2);  // center of Q8
    CHECK(phi.is_normal_in(q8));
    CHECK(frattini(cyclic(12)).order() == 2);
    CHECK(frattini(PermGroup::trivial(2)).order() == 1);
    // Phi is normal and nilpotent
    for (const PermGroup& G : {sym(4), cyclic(9), quaternion8(), cyclic(12)}) {
        auto f = frattini(G);
        CHECK(f.is_normal_in(G));
        CHECK(is_nilpotent(f));
    }
}

TEST_CASE("normal and minimal normal subgroups") {
    auto S4 = sym(4);
    auto ns = normal_subgroups(S4);
    REQUIRE(ns.size() == 4);  // 1, V4, A4, S4
    CHECK(ns[0].order() == 1);
    CHECK(ns[1].order() == 4);
    CHECK(ns[2].order() == 12);
    CHECK(ns[3].order() == 24);

    auto mins = minimal_normal_subgroups(S4);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].order() == 4);

    auto c6 = cyclic(6);
    auto mins6 = minimal_normal_subgroups(c6);
    REQUIRE(mins6.size() == 2);
    CHECK(mins6[0].order() == 2);
    CHECK(mins6[1].order() == 3);

    auto A5 = alt(5);
    auto mins5 = minimal_normal_subgroups(A5);
    REQUIRE(mins5.size() == 1);
    CHECK(mins5[0].order() == 60);

    CHECK(socle(S4).order() == 4);
    CHECK(socle(c6).order() == 6);
    CHECK(is_monolithic(S4));
    CHECK(!is_monolithic(c6));
}

TEST_CASE("solvability") {
    CHECK(is_solvable(sym(4)));
    CHECK(!is_solvable(alt(5)));
    CHECK(!is_solvable(sym(5)));
    CHECK(is_solvable(PermGroup::trivial(1)));
    CHECK(is_solvable(quaternion8()));
    CHECK(is_nilpotent(quaternion8()));
    CHECK(!is_nilpotent(sym(3)));
}

TEST_CASE("chief series of Sym(4)") {
    auto cs = chief_series(sym(4));
    REQUIRE(cs.terms.size() == 4);
    CHECK(cs.terms[0].order() == 24);
    CHECK(cs.terms[3].order() == 1);
    REQUIRE(cs.factors.size() == 3);
    CHECK(cs.factors[0].order == 2);
    CHECK(cs.factors[1].order == 3);
    CHECK(cs.factors[2].order == 4);
    for (const auto& f : cs.factors) CHECK(f.abelian);
    auto [a, b] = chief_counts(sym(4));
    CHECK(a == 3);
    CHECK(b == 0);
}

TEST_CASE("chief series of C4 and Cp") {
    auto [a4, b4] = chief_counts(cyclic(4));
    CHECK(a4 == 1);  // the lower C2 is a Frattini factor
    CHECK(b4 == 0);
    auto cs = chief_series(cyclic(5));
    REQUIRE(cs.factors.size() == 1);
    CHECK(cs.factors[0].order == 5);
    auto [a5, b5] = chief_counts(cyclic(5));
    CHECK(a5 == 1);
    CHECK(b5 == 0);
}

TEST_CASE("chief counts of Alt(5) and Sym(5)") {
    auto [a, b] = chief_counts(alt(5));
    CHECK(a == 1);
    CHECK(b == 1);
    auto [a5, b5] = chief_counts(sym(5));
    CHECK(a5 == 2);
    CHECK(b5 == 1);
}

TEST_CASE("Jordan-Hoelder invariance of factor multiset") {
    for (const PermGroup& G :
         {sym(4), cyclic(12), quaternion8(), closure(6, {p("(1,2,3,4,5,6)", 6), p("(2,6)(3,5)", 6)})}) {
        auto small = chief_series(G, 2016, ChiefSelection::SmallestFirst);
        auto large = chief_series(G, 2016, ChiefSelection::LargestFirst);
        REQUIRE(small.factors.size() == large.factors.size());
        std::map<std::tuple<std::uint64_t, bool, bool>, int> ms, ml;
        for (const auto& f : small.factors) ms[{f.order, f.abelian, f.frattini}]++;
        for (const auto& f : large.factors) ml[{f.order, f.abelian, f.frattini}]++;
        CHECK(ms == ml);
        // chief factors multiply to the group order
        std::uint64_t prod = 1;
        for (const auto& f : small.factors) prod *= f.order;
        CHECK(prod == G.order());
    }
}

TEST_CASE("a + frattini count equals total factors") {
    for (const PermGroup& G : {sym(4), cyclic(4), cyclic(12), quaternion8()}) {
        auto cs = chief_series(G);
        unsigned a = 0, fr = 0;
        for (const auto& f : cs.factors) (f.frattini ? fr : a)++;
        CHECK(a + fr == cs.factors.size());
    }
}

TEST_CASE("chief terms are normal and factors are chief") {
    auto G = sym(4);
    auto cs = chief_series(G);
    auto ns = normal_subgroups(G);
    for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
        CHECK(cs.terms[i].is_normal_in(G));
        // no normal subgroup strictly between consecutive terms
        for (const auto& N : ns) {
            if (N.order() <= cs.terms[i + 1].order() || N.order() >= cs.terms[i].order()) continue;
            bool between = cs.terms[i].contains_subgroup(N) && N.contains_subgroup(cs.terms[i + 1]);
            CHECK(!between);
        }
    }
}
