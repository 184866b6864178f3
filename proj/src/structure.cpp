#include "ppbase/structure.hpp"

#include <algorithm>
#include <unordered_map>

#include "ppbase/numeric.hpp"

namespace ppbase {

namespace {

std::shared_ptr<const GroupTable> table_for(const PermGroup& G, std::uint64_t order_cap) {
    if (G.order() > order_cap)
        throw CapExceeded("order " + std::to_string(G.order()) + " exceeds cap " +
                          std::to_string(order_cap));
    return G.table(std::max<std::uint64_t>(order_cap, PermGroup::kTableCap));
}

// One cyclic subgroup per distinct <x> with x of prime-power order, keyed by
// element set; the stored generator is the least one.
std::vector<TSub> pp_cyclic_subgroups(const GroupTable& T) {
    std::vector<TSub> out;
    std::unordered_map<std::uint64_t, std::vector<unsigned>> seen;
    for (std::size_t e = 1; e < T.size(); ++e) {
        if (!T.is_pp(static_cast<EIdx>(e))) continue;
        const Bitset& bits = T.cyclic_bits(static_cast<EIdx>(e));
        std::uint64_t h = bits.hash();
        bool dup = false;
        for (unsigned idx : seen[h])
            if (out[idx].bits == bits) {
                dup = true;
                break;
            }
        if (dup) continue;
        TSub s;
        s.bits = bits;
        bits.for_each([&](std::size_t i) { s.elems.push_back(static_cast<EIdx>(i)); });
        s.gens = {static_cast<EIdx>(e)};
        seen[h].push_back(static_cast<unsigned>(out.size()));
        out.push_back(std::move(s));
    }
    return out;
}

struct LatticeBuilder {
    const GroupTable& T;
    std::vector<TSub> ppcyc;

    struct Rec {
        TSub sub;
        unsigned class_id;
    };
    std::vector<Rec> recs;
    std::vector<unsigned> class_rep_rec;           // class id -> rec index of canonical rep
    std::vector<char> class_all_joins_full;        // per class
    std::unordered_map<std::uint64_t, std::vector<unsigned>> by_hash;
    std::vector<unsigned> pending;                 // class ids awaiting join processing

    explicit LatticeBuilder(const GroupTable& t) : T(t), ppcyc(pp_cyclic_subgroups(t)) {}

    int find(const Bitset& b) const {
        std::uint64_t h = b.hash();
        auto it = by_hash.find(h);
        if (it == by_hash.end()) return -1;
        for (unsigned idx : it->second)
            if (recs[idx].sub.bits == b) return static_cast<int>(idx);
        return -1;
    }

    // Registers the full conjugation orbit of s as one class (no-op when known).
    void register_subgroup(TSub s) {
        if (find(s.bits) >= 0) return;
        // conjugation orbit
        std::vector<TSub> orbit{std::move(s)};
        std::unordered_map<std::uint64_t, std::vector<unsigned>> local;
        local[orbit[0].bits.hash()].push_back(0);
        for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
            for (EIdx g : T.gen_indices()) {
                TSub c = conjugate_subgroup(T, orbit[qi], g);
                std::uint64_t h = c.bits.hash();
                bool known = false;
                for (unsigned idx : local[h])
                    if (orbit[idx].bits == c.bits) {
                        known = true;
                        break;
                    }
                if (!known) {
                    local[h].push_back(static_cast<unsigned>(orbit.size()));
                    orbit.push_back(std::move(c));
                }
            }
        }
        std::sort(orbit.begin(), orbit.end(),
                  [](const TSub& a, const TSub& b) { return Bitset::canon_less(a.bits, b.bits); });
        unsigned cid = static_cast<unsigned>(class_rep_rec.size());
        class_rep_rec.push_back(static_cast<unsigned>(recs.size()));
        class_all_joins_full.push_back(1);
        for (auto& m : orbit) {
            by_hash[m.bits.hash()].push_back(static_cast<unsigned>(recs.size()));
            recs.push_back(Rec{std::move(m), cid});
        }
        pending.push_back(cid);
    }

    void run(bool parallel) {
        register_subgroup(trivial_subgroup(T));
        register_subgroup(full_subgroup(T));
        while (!pending.empty()) {
            std::vector<unsigned> batch;
            batch.swap(pending);
            struct Pair {
                unsigned cid;
                unsigned cyc;
            };
            std::vector<Pair> pairs;
            for (unsigned cid : batch) {
                const TSub& A = recs[class_rep_rec[cid]].sub;
                for (unsigned c = 0; c < ppcyc.size(); ++c)
                    if (!ppcyc[c].bits.is_subset_of(A.bits)) pairs.push_back({cid, c});
            }
            // code per pair: 1 join = G, 2 proper join (stored when new)
            std::vector<char> code(pairs.size(), 0);
            std::vector<std::pair<std::size_t, TSub>> found;
#pragma omp parallel if (parallel)
            {
                std::vector<std::pair<std::size_t, TSub>> local;
#pragma omp for schedule(dynamic, 16) nowait
                for (long long pi = 0; pi < static_cast<long long>(pairs.size()); ++pi) {
                    const auto& pr = pairs[static_cast<std::size_t>(pi)];
                    const TSub& A = recs[class_rep_rec[pr.cid]].sub;
                    TSub J = dimino_extend(T, A, ppcyc[pr.cyc].gens[0]);
                    if (J.order() == T.size()) {
                        code[static_cast<std::size_t>(pi)] = 1;
                    } else {
                        code[static_cast<std::size_t>(pi)] = 2;
                        if (find(J.bits) < 0) local.emplace_back(static_cast<std::size_t>(pi), std::move(J));
                    }
                }
#pragma omp critical
                for (auto& f : local) found.push_back(std::move(f));
            }
            std::sort(found.begin(), found.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [pi, J] : found) register_subgroup(std::move(J));
            for (std::size_t pi = 0; pi < pairs.size(); ++pi)
                if (code[pi] == 2) class_all_joins_full[pairs[pi].cid] = 0;
        }
    }
};

}  // namespace

PermGroup SubgroupLattice::subgroup(std::size_t i) const {
    return subgroup_to_permgroup(*table, group.degree(), entries[i].sub);
}

std::vector<std::size_t> SubgroupLattice::maximal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].maximal) out.push_back(i);
    return out;
}

std::vector<std::size_t> SubgroupLattice::maximal_containing(EIdx e) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].maximal && entries[i].sub.bits.test(e)) out.push_back(i);
    return out;
}

SubgroupLattice subgroup_lattice(const PermGroup& G, std::uint64_t order_cap, bool parallel) {
    SubgroupLattice lat;
    lat.group = G;
    lat.table = table_for(G, order_cap);
    const GroupTable& T = *lat.table;

    LatticeBuilder b(T);
    b.run(parallel);

    // Sort entries by (order, element set); classes keep their membership.
    std::vector<unsigned> perm(b.recs.size());
    for (unsigned i = 0; i < b.recs.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](unsigned x, unsigned y) {
        const TSub& a = b.recs[x].sub;
        const TSub& c = b.recs[y].sub;
        if (a.order() != c.order()) return a.order() < c.order();
        return Bitset::canon_less(a.bits, c.bits);
    });

    std::vector<unsigned> class_sizes(b.class_rep_rec.size(), 0);
    for (const auto& r : b.recs) ++class_sizes[r.class_id];

    std::vector<int> new_class_id(b.class_rep_rec.size(), -1);
    unsigned next_class = 0;
    lat.entries.reserve(b.recs.size());
    for (unsigned pi : perm) {
        auto& rec = b.recs[pi];
        if (new_class_id[rec.class_id] < 0) {
            new_class_id[rec.class_id] = static_cast<int>(next_class++);
            lat.class_reps.push_back(static_cast<unsigned>(lat.entries.size()));
        }
        SubgroupLattice::Entry e;
        bool is_full = rec.sub.order() == T.size();
        e.maximal = b.class_all_joins_full[rec.class_id] && !is_full;
        e.normal = class_sizes[rec.class_id] == 1;
        e.class_id = static_cast<unsigned>(new_class_id[rec.class_id]);
        e.sub = std::move(rec.sub);
        lat.entries.push_back(std::move(e));
    }
    return lat;
}

std::shared_ptr<const SubgroupLattice> subgroup_lattice_cached(const PermGroup& G,
                                                               std::uint64_t order_cap,
                                                               bool parallel) {
    if (auto c = G.aux_cached("lattice"))
        return std::static_pointer_cast<const SubgroupLattice>(c);
    auto lat = std::make_shared<const SubgroupLattice>(subgroup_lattice(G, order_cap, parallel));
    G.aux_store("lattice", lat);
    return lat;
}

PermGroup frattini(const PermGroup& G, std::uint64_t order_cap) {
    auto lat = subgroup_lattice_cached(G, order_cap);
    const GroupTable& T = *lat->table;
    Bitset phi = full_subgroup(T).bits;
    for (std::size_t i : lat->maximal_indices()) phi.and_with(lat->entries[i].sub.bits);
    TSub s;
    s.bits = phi;
    phi.for_each([&](std::size_t e) { s.elems.push_back(static_cast<EIdx>(e)); });
    s.gens = reduce_generators(T, s);
    return subgroup_to_permgroup(T, G.degree(), s);
}

namespace {

// All normal subgroups as TSub handles, ascending by (order, element set).
std::vector<TSub> normal_subgroup_handles(const GroupTable& T) {
    std::vector<TSub> out{trivial_subgroup(T)};
    std::unordered_map<std::uint64_t, std::vector<unsigned>> seen;
    seen[out[0].bits.hash()].push_back(0);
    auto known = [&](const Bitset& bits) {
        auto it = seen.find(bits.hash());
        if (it == seen.end()) return false;
        for (unsigned idx : it->second)
            if (out[idx].bits == bits) return true;
        return false;
    };
    for (std::size_t wi = 0; wi < out.size(); ++wi) {
        for (std::size_t c = 1; c < T.class_reps().size(); ++c) {
            EIdx rep = T.class_reps()[c];
            if (out[wi].bits.test(rep)) continue;
            TSub R = out[wi];
            for (EIdx m : T.class_members()[c])
                if (!R.bits.test(m)) R = dimino_extend(T, R, m);
            if (!known(R.bits)) {
                seen[R.bits.hash()].push_back(static_cast<unsigned>(out.size()));
                out.push_back(std::move(R));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const TSub& a, const TSub& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return Bitset::canon_less(a.bits, b.bits);
    });
    return out;
}

}  // namespace

std::vector<PermGroup> normal_subgroups(const PermGroup& G, std::uint64_t order_cap) {
    auto T = table_for(G, order_cap);
    std::vector<PermGroup> out;
    for (const auto& s : normal_subgroup_handles(*T))
        out.push_back(subgroup_to_permgroup(*T, G.degree(), s));
    return out;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& G, std::uint64_t order_cap) {
    auto T = table_for(G, order_cap);
    auto ns = normal_subgroup_handles(*T);
    std::vector<PermGroup> out;
    for (std::size_t i = 1; i < ns.size(); ++i) {  // skip trivial
        bool minimal = ns[i].order() > 1;
        for (std::size_t j = 1; j < ns.size() && minimal; ++j)
            if (j != i && ns[j].order() > 1 && ns[j].order() < ns[i].order() &&
                ns[j].bits.is_subset_of(ns[i].bits))
                minimal = false;
        if (minimal) out.push_back(subgroup_to_permgroup(*T, G.degree(), ns[i]));
    }
    return out;
}

PermGroup socle(const PermGroup& G, std::uint64_t order_cap) {
    auto T = table_for(G, order_cap);
    auto mins = minimal_normal_subgroups(G, order_cap);
    std::vector<EIdx> seeds;
    for (const auto& M : mins)
        for (const auto& g : M.generators()) seeds.push_back(T->index_of(g));
    std::sort(seeds.begin(), seeds.end());
    return subgroup_to_permgroup(*T, G.degree(), closure_of(*T, seeds));
}

bool is_monolithic(const PermGroup& G, std::uint64_t order_cap) {
    return minimal_normal_subgroups(G, order_cap).size() == 1;
}

bool is_solvable(const PermGroup& G) {
    PermGroup H = G;
    while (true) {
        if (H.is_trivial()) return true;
        std::vector<Permutation> comms;
        for (const auto& a : H.generators())
            for (const auto& b : H.generators()) {
                Permutation c = a.inverse() * b.inverse() * a * b;
                if (!c.is_identity()) comms.push_back(c);
            }
        PermGroup D = normal_closure(H, comms);
        if (D.order() == H.order()) return false;  // perfect group reached
        H = D;
    }
}

bool is_nilpotent(const PermGroup& G, std::uint64_t order_cap) {
    auto T = table_for(G, order_cap);
    TSub L = full_subgroup(*T);
    while (true) {
        if (L.order() == 1) return true;
        // [L, G]: generated by commutators of L with G, closed under conjugation.
        std::vector<EIdx> seeds;
        for (EIdx x : L.gens.empty() ? L.elems : L.gens)
            for (EIdx g : T->gen_indices()) {
                EIdx c = T->commutator(x, g);
                if (c != 0) seeds.push_back(c);
            }
        TSub N = closure_of(*T, seeds);
        // normal closure under G-conjugation
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<EIdx> snapshot = N.elems;
            for (EIdx e : snapshot)
                for (EIdx g : T->gen_indices()) {
                    EIdx c = T->conj(e, g);
                    if (!N.bits.test(c)) {
                        N = dimino_extend(*T, N, c);
                        grew = true;
                    }
                }
        }
        if (N.order() == L.order()) return false;  // series stalled above 1
        N.gens = reduce_generators(*T, N);
        L = std::move(N);
    }
}

ChiefSeries chief_series(const PermGroup& G, std::uint64_t order_cap, ChiefSelection selection) {
    if (selection == ChiefSelection::SmallestFirst)
        if (auto c = G.aux_cached("chief_series"))
            return *std::static_pointer_cast<const ChiefSeries>(c);
    auto T = table_for(G, order_cap);
    auto ns = normal_subgroup_handles(*T);

    // Ascending maximal chain through the normal subgroup lattice: each step
    // picks a normal subgroup covering the current one (nothing normal
    // strictly between), i.e. the pullback of a minimal normal subgroup of
    // the quotient.
    std::vector<std::size_t> chain{0};  // index into ns; ns[0] = trivial
    while (ns[chain.back()].order() < T->size()) {
        const TSub& cur = ns[chain.back()];
        std::vector<std::size_t> above;
        for (std::size_t i = 0; i < ns.size(); ++i)
            if (ns[i].order() > cur.order() && cur.bits.is_subset_of(ns[i].bits)) above.push_back(i);
        std::vector<std::size_t> covers;
        for (std::size_t i : above) {
            bool minimal = true;
            for (std::size_t j : above)
                if (j != i && ns[j].order() < ns[i].order() && ns[j].bits.is_subset_of(ns[i].bits)) {
                    minimal = false;
                    break;
                }
            if (minimal) covers.push_back(i);
        }
        // ns is sorted by (order, element set), so the first cover is the
        // smallest; the last is the largest.
        chain.push_back(selection == ChiefSelection::SmallestFirst ? covers.front() : covers.back());
    }

    ChiefSeries cs;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        cs.terms.push_back(subgroup_to_permgroup(*T, G.degree(), ns[*it]));

    for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
        const TSub& hi = ns[chain[chain.size() - 1 - i]];
        const TSub& lo = ns[chain[chain.size() - 2 - i]];
        ChiefSeries::Factor f;
        f.order = hi.order() / lo.order();
        // abelian factor: commutators of the upper term land in the lower term
        f.abelian = true;
        const auto& higens = hi.gens.empty() ? hi.elems : hi.gens;
        for (std::size_t x = 0; x < higens.size() && f.abelian; ++x)
            for (std::size_t y = x + 1; y < higens.size(); ++y)
                if (!lo.bits.test(T->commutator(higens[x], higens[y]))) {
                    f.abelian = false;
                    break;
                }
        // Frattini factor: image of the upper term inside Phi(G / lower term)
        auto [Q, hom] = quotient(G, cs.terms[i + 1],
                                 std::max<std::uint64_t>(order_cap, PermGroup::kTableCap));
        PermGroup phi = frattini(Q, order_cap);
        f.frattini = true;
        for (EIdx e : higens)
            if (!phi.contains(hom.apply(T->perm(e)))) {
                f.frattini = false;
                break;
            }
        cs.factors.push_back(f);
    }
    if (selection == ChiefSelection::SmallestFirst)
        G.aux_store("chief_series", std::make_shared<const ChiefSeries>(cs));
    return cs;
}

std::pair<unsigned, unsigned> chief_counts(const PermGroup& G, std::uint64_t order_cap) {
    auto cs = chief_series(G, order_cap);
    unsigned a = 0, b = 0;
    for (const auto& f : cs.factors) {
        if (!f.frattini) ++a;
        if (!f.abelian) ++b;
    }
    return {a, b};
}

}  // namespace ppbase
