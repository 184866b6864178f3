#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "ppbase/genset.hpp"
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

PermGroup quaternion8() {
    return PermGroup(8, {p("(1,2,3,4)(5,8,7,6)", 8), p("(1,5,3,7)(2,6,4,8)", 8)});
}

PermGroup klein4() { return closure(4, {p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)}); }

}  // namespace

TEST_CASE("is_independent examples") {
    auto S3 = sym(3);
    CHECK(is_independent(S3, {p("(1,2)", 3), p("(1,3)", 3)}));
    CHECK(!is_independent(S3, {p("(1,2)", 3), p("(1,3)", 3), p("(2,3)", 3)}));
    CHECK(!is_independent(S3, {Permutation::identity(3)}));
    CHECK(is_independent(S3, {}));
    CHECK_THROWS_AS(is_independent(alt(4), {p("(1,2)", 4)}), Error);
    // inside C4, the square of the generator lies in Phi, so it is dependent
    auto C4 = cyclic(4);
    CHECK(!is_independent(C4, {p("(1,3)(2,4)", 4)}));
    CHECK(is_independent(C4, {p("(1,2,3,4)", 4)}));
}

TEST_CASE("max independent generating set values") {
    CHECK(max_independent_generating(sym(3)).m == 2);
    CHECK(max_independent_generating(sym(4)).m == 3);
    CHECK(max_independent_generating(cyclic(6)).m == 2);
    CHECK(max_independent_generating(cyclic(5)).m == 1);
    CHECK(max_independent_generating(klein4()).m == 2);
    CHECK(max_independent_generating(quaternion8()).m == 2);
    CHECK(max_independent_generating(PermGroup::trivial(3)).m == 0);
    CHECK(max_independent_generating(alt(4)).m == 2);
}

TEST_CASE("witnesses are independent generating sets of stated size") {
    for (const PermGroup& G : {sym(4), cyclic(12), quaternion8(), alt(4)}) {
        auto r = max_independent_generating(G);
        CHECK(r.witness.size() == r.m);
        CHECK(closure(G.degree(), r.witness).order() == G.order());
        CHECK(is_independent(G, r.witness));
        auto rp = max_pp_independent_generating(G);
        CHECK(rp.witness.size() == rp.m);
        for (const auto& w : rp.witness) CHECK(is_pp_element(w));
        CHECK(closure(G.degree(), rp.witness).order() == G.order());
        CHECK(is_independent(G, rp.witness));
    }
}

TEST_CASE("search agrees with brute-force reference") {
    for (const PermGroup& G : {sym(3), sym(4), alt(4), cyclic(6), cyclic(12), quaternion8(),
                               klein4(), cyclic(8), closure(5, {p("(1,2,3,4,5)", 5), p("(2,3,5,4)", 5)})}) {
        CAPTURE(G.order());
        CHECK(max_independent_generating(G).m == ref::max_independent_bruteforce(G));
        CHECK(max_pp_independent_generating(G).m == ref::max_pp_independent_bruteforce(G));
        CHECK(min_pp_generating(G).k == ref::min_pp_generating_bruteforce(G));
    }
}

TEST_CASE("serial and parallel searches agree including witnesses") {
    for (const PermGroup& G : {sym(4), alt(5), cyclic(12)}) {
        auto a = max_independent_generating(G, {}, false);
        auto b = max_independent_generating(G, {}, true);
        CHECK(a.m == b.m);
        CHECK(a.witness == b.witness);
        CHECK(a.stats.nodes == b.stats.nodes);
        auto c = min_pp_generating(G, {}, false);
        auto d = min_pp_generating(G, {}, true);
        CHECK(c.k == d.k);
        CHECK(c.witness == d.witness);
    }
}

TEST_CASE("min pp generating") {
    CHECK(min_pp_generating(cyclic(6)).k == 2);
    CHECK(min_pp_generating(sym(4)).k == 2);
    CHECK(min_pp_generating(cyclic(5)).k == 1);
    CHECK(min_pp_generating(klein4()).k == 2);
    CHECK(min_pp_generating(PermGroup::trivial(4)).k == 0);
    auto r = min_pp_generating(cyclic(6));
    REQUIRE(r.witness.size() == 2);
    CHECK(closure(6, r.witness).order() == 6);
    for (const auto& w : r.witness) CHECK(is_pp_element(w));
}

TEST_CASE("bpp verdicts") {
    CHECK(is_bpp_bruteforce(sym(3)));
    CHECK(!is_bpp_bruteforce(sym(4)));
    CHECK(is_bpp_bruteforce(klein4()));
    CHECK(is_bpp_bruteforce(cyclic(6)));
    CHECK(is_bpp_bruteforce(PermGroup::trivial(2)));
    CHECK(is_bpp_bruteforce(quaternion8()));  // Q8/Phi = V4
    CHECK(!is_bpp_bruteforce(alt(5)));
}

TEST_CASE("m equals m_pp on small groups") {
    for (const PermGroup& G : {sym(3), sym(4), alt(4), cyclic(6), cyclic(12), quaternion8(),
                               alt(5)}) {
        auto rep = genset_report(G);
        CHECK(rep.m == rep.m_pp);
        CHECK(rep.min_pp <= rep.m_pp);
        CHECK(rep.is_bpp == (rep.min_pp == rep.m_pp));
    }
}

TEST_CASE("m(G) = m(G/Phi) on groups with nontrivial Frattini") {
    for (const PermGroup& G : {cyclic(4), cyclic(8), cyclic(12), quaternion8(), cyclic(9)}) {
        auto phi = frattini(G);
        REQUIRE(phi.order() > 1);
        auto [Q, hom] = quotient(G, phi);
        (void)hom;
        CHECK(max_independent_generating(G).m == max_independent_generating(Q).m);
    }
}

TEST_CASE("pp_base_convert") {
    auto C6 = cyclic(6);
    auto g = p("(1,2,3,4,5,6)", 6);
    auto Y = pp_base_convert(C6, {g});
    REQUIRE(Y.size() == 2);
    CHECK(((Y[0] == g.power(3) && Y[1] == g.power(4)) || (Y[0] == g.power(4) && Y[1] == g.power(3))));

    auto S3 = sym(3);
    std::vector<Permutation> X{p("(1,2)", 3), p("(1,2,3)", 3)};
    CHECK(pp_base_convert(S3, X) == X);  // already pp

    CHECK_THROWS_AS(pp_base_convert(S3, {p("(1,2)", 3)}), Error);  // not generating

    // maximum independent sets convert at equal size
    for (const PermGroup& G : {sym(4), cyclic(12), sym(3)}) {
        auto r = max_independent_generating(G);
        auto Y2 = pp_base_convert(G, r.witness);
        CHECK(Y2.size() == r.witness.size());
        for (const auto& y : Y2) CHECK(is_pp_element(y));
    }
}

TEST_CASE("bpp is quotient closed on examples") {
    // Sym(3) is B_pp; its quotients C2 and 1 must be too.
    auto S3 = sym(3);
    for (const auto& N : normal_subgroups(S3)) {
        auto [Q, hom] = quotient(S3, N);
        (void)hom;
        CHECK(is_bpp_bruteforce(Q));
    }
}

TEST_CASE("chief deltas sum to m") {
    for (const PermGroup& G : {sym(4), cyclic(6), sym(3), quaternion8()}) {
        auto deltas = chief_deltas(G);
        int sum = std::accumulate(deltas.begin(), deltas.end(), 0);
        CHECK(sum == static_cast<int>(max_independent_generating(G).m));
        // abelian factors contribute 0 or 1, matching the Frattini flag
        auto cs = chief_series(G);
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            if (cs.factors[i].abelian) CHECK(deltas[i] == (cs.factors[i].frattini ? 0 : 1));
        }
    }
}

TEST_CASE("monolithic delta") {
    CHECK(monolithic_delta(sym(4)) == static_cast<int>(max_independent_generating(sym(4)).m) -
                                          static_cast<int>(max_independent_generating(sym(3)).m));
    CHECK_THROWS_AS(monolithic_delta(cyclic(6)), Error);
}

TEST_CASE("time budget is enforced") {
    SearchBudget tiny;
    tiny.time = std::chrono::milliseconds(0);
    CHECK_THROWS_AS(max_independent_generating(alt(5), tiny), BudgetExceeded);
}
