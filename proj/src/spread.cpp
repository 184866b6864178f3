#include "ppbase/spread.hpp"

#include <algorithm>

#include "ppbase/numeric.hpp"
#include "ppbase/table.hpp"

namespace ppbase {

namespace {

std::shared_ptr<const GroupTable> table_for(const PermGroup& G, std::uint64_t order_cap) {
    return G.table(std::max<std::uint64_t>(order_cap, PermGroup::kTableCap));
}

std::vector<EIdx> class_orbit(const GroupTable& T, EIdx seed) {
    std::vector<EIdx> orbit{seed};
    Bitset seen(T.size());
    seen.set(seed);
    for (std::size_t qi = 0; qi < orbit.size(); ++qi)
        for (EIdx g : T.gen_indices()) {
            EIdx c = T.conj(orbit[qi], g);
            if (!seen.test(c)) {
                seen.set(c);
                orbit.push_back(c);
            }
        }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

void check_product(const GroupTable& T, const TSub& K, const TSub& S, std::uint64_t order) {
    Bitset inter = K.bits;
    inter.and_with(S.bits);
    if (K.order() * S.order() / inter.count() != order)
        throw Error("H = KS violated: |K||S|/|K meet S| != |H|");
}

unsigned t_HK_sub(const GroupTable& T, const TSub& K, const TSub& S) {
    check_product(T, K, S, T.size());
    if (K.order() == T.size()) return 0;

    // pp-elements of S, high orders first (likely generators tried early)
    std::vector<EIdx> cand;
    for (EIdx e : S.elems)
        if (e != 0 && T.is_pp(e)) cand.push_back(e);
    std::sort(cand.begin(), cand.end(), [&](EIdx a, EIdx b) {
        if (T.order_of(a) != T.order_of(b)) return T.order_of(a) > T.order_of(b);
        return a < b;
    });

    for (EIdx s : cand)
        if (dimino_extend(T, K, s).order() == T.size()) return 1;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        TSub K1 = dimino_extend(T, K, cand[i]);
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            if (K1.bits.test(cand[j])) continue;
            if (dimino_extend(T, K1, cand[j]).order() == T.size()) return 2;
        }
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
        TSub K1 = dimino_extend(T, K, cand[i]);
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            TSub K2 = dimino_extend(T, K1, cand[j]);
            for (std::size_t l = j + 1; l < cand.size(); ++l) {
                if (K2.bits.test(cand[l])) continue;
                if (dimino_extend(T, K2, cand[l]).order() == T.size()) return 3;
            }
        }
    }
    throw CapExceeded("t_HK: no pp-supplement of size <= 3 (cap reached)");
}

}  // namespace

Rational fixed_point_ratio(const PermGroup& H, const Permutation& g, const PermGroup& M,
                           std::uint64_t order_cap) {
    if (!H.contains_subgroup(M)) throw Error("fixed_point_ratio: M is not a subgroup of H");
    if (!H.contains(g)) throw Error("fixed_point_ratio: g is not in H");
    auto T = table_for(H, order_cap);
    TSub Ms = subgroup_from_group(*T, M);
    EIdx gi = T->index_of(g);

    // Route 1: fixed right cosets of M under right multiplication by g.
    std::uint64_t index = T->size() / Ms.order();
    std::uint64_t fixed = 0;
    {
        std::vector<unsigned> coset_of(T->size(), 0);
        std::vector<char> assigned(T->size(), 0);
        std::vector<EIdx> reps;
        for (std::size_t t = 0; t < T->size(); ++t) {
            if (assigned[t]) continue;
            unsigned cid = static_cast<unsigned>(reps.size());
            reps.push_back(static_cast<EIdx>(t));
            for (EIdx m : Ms.elems) {
                EIdx u = T->mul(m, static_cast<EIdx>(t));
                assigned[u] = 1;
                coset_of[u] = cid;
            }
        }
        for (unsigned c = 0; c < reps.size(); ++c)
            if (coset_of[T->mul(reps[c], gi)] == c) ++fixed;
    }
    Rational route1(static_cast<unsigned long>(fixed), static_cast<unsigned long>(index));
    route1.canonicalize();

    // Route 2: |g^H meet M| / |g^H|.
    auto orbit = class_orbit(*T, gi);
    std::uint64_t in_m = 0;
    for (EIdx t : orbit)
        if (Ms.bits.test(t)) ++in_m;
    Rational route2(static_cast<unsigned long>(in_m), static_cast<unsigned long>(orbit.size()));
    route2.canonicalize();

    if (route1 != route2)
        throw Error("fixed_point_ratio: coset route and class route disagree (engine bug)");
    return route1;
}

Rational spread_P(const PermGroup& H, const PermGroup& S, const Permutation& g,
                  const Permutation& s, std::uint64_t order_cap, bool parallel) {
    if (!H.contains_subgroup(S)) throw Error("spread_P: S is not a subgroup of H");
    if (!S.is_normal_in(H)) throw Error("spread_P: S is not normal in H");
    if (!S.contains(s)) throw Error("spread_P: s is not in S");
    if (!H.contains(g)) throw Error("spread_P: g is not in H");
    auto T = table_for(H, order_cap);
    TSub Ss = subgroup_from_group(*T, S);
    EIdx gi = T->index_of(g);
    auto orbit = class_orbit(*T, T->index_of(s));

    std::uint64_t not_covering = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : not_covering) if (parallel)
    for (long long i = 0; i < static_cast<long long>(orbit.size()); ++i) {
        EIdx t = orbit[static_cast<std::size_t>(i)];
        TSub gen = dimino_extend(*T, cyclic_subgroup(*T, gi), t);
        if (!Ss.bits.is_subset_of(gen.bits)) not_covering += 1;
    }
    Rational r(static_cast<unsigned long>(not_covering), static_cast<unsigned long>(orbit.size()));
    r.canonicalize();
    return r;
}

std::vector<PermGroup> maximal_overgroups(const PermGroup& H, const Permutation& g,
                                          std::uint64_t order_cap) {
    if (!H.contains(g)) throw Error("maximal_overgroups: g is not in H");
    auto lat = subgroup_lattice_cached(H, order_cap);
    EIdx gi = lat->table->index_of(g);
    std::vector<PermGroup> out;
    for (std::size_t i : lat->maximal_containing(gi)) out.push_back(lat->subgroup(i));
    return out;
}

SpreadReport spread_bound_check(const PermGroup& H, const PermGroup& S, const Permutation& g,
                                const Permutation& s, std::uint64_t order_cap, bool parallel) {
    SpreadReport rep;
    rep.g = g;
    rep.s = s;
    rep.P_value = spread_P(H, S, g, s, order_cap, parallel);
    auto overgroups = maximal_overgroups(H, s, order_cap);
    rep.maximal_overgroups_of_s = overgroups.size();
    rep.bound_value = 0;
    for (const auto& M : overgroups) rep.bound_value += fixed_point_ratio(H, g, M, order_cap);
    rep.bound_value.canonicalize();
    rep.holds = rep.P_value <= rep.bound_value;
    if (!rep.holds) throw Error("spread bound violated (engine bug)");
    return rep;
}

unsigned t_HK(const PermGroup& H, const PermGroup& S, const PermGroup& K,
              std::uint64_t order_cap) {
    if (!H.contains_subgroup(S) || !H.contains_subgroup(K))
        throw Error("t_HK: S and K must be subgroups of H");
    auto T = table_for(H, order_cap);
    return t_HK_sub(*T, subgroup_from_group(*T, K), subgroup_from_group(*T, S));
}

unsigned t_H(const PermGroup& H, const PermGroup& S, std::uint64_t order_cap, bool parallel) {
    if (!H.contains_subgroup(S)) throw Error("t_H: S is not a subgroup of H");
    auto lat = subgroup_lattice_cached(H, order_cap);
    const GroupTable& T = *lat->table;
    TSub Ss = subgroup_from_group(T, S);

    std::vector<const TSub*> supplements;
    for (unsigned rep : lat->class_reps) {
        const TSub& K = lat->entries[rep].sub;
        Bitset inter = K.bits;
        inter.and_with(Ss.bits);
        if (K.order() * Ss.order() / inter.count() == T.size()) supplements.push_back(&K);
    }

    unsigned best = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(max : best) if (parallel)
    for (long long i = 0; i < static_cast<long long>(supplements.size()); ++i) {
        unsigned t = t_HK_sub(T, *supplements[static_cast<std::size_t>(i)], Ss);
        best = std::max(best, t);
    }
    return best;
}

unsigned m_K(const PermGroup& H, const PermGroup& S, const PermGroup& K,
             const SearchBudget& budget, bool parallel) {
    auto T = table_for(H, budget.order_cap);
    TSub Ks = subgroup_from_group(*T, K);
    TSub Ss = subgroup_from_group(*T, S);
    check_product(*T, Ks, Ss, T->size());
    return max_independent_over(H, K, budget, parallel).m;
}

bool is_k_independent_generating(const PermGroup& H, const PermGroup& K,
                                 const std::vector<Permutation>& Y, std::uint64_t order_cap) {
    auto T = table_for(H, order_cap);
    TSub Ks = subgroup_from_group(*T, K);
    std::vector<EIdx> yi;
    for (const auto& y : Y) yi.push_back(T->index_of(y));
    TSub full = Ks;
    for (EIdx e : yi) full = dimino_extend(*T, full, e);
    if (full.order() != T->size()) return false;  // not K-generating
    for (std::size_t skip = 0; skip < yi.size(); ++skip) {
        TSub sub = Ks;
        for (std::size_t j = 0; j < yi.size(); ++j)
            if (j != skip) sub = dimino_extend(*T, sub, yi[j]);
        if (sub.order() == T->size()) return false;  // proper subset already generates
    }
    return true;
}

}  // namespace ppbase
