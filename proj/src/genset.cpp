#include "ppbase/genset.hpp"

#include <algorithm>
#include <atomic>

#include "ppbase/numeric.hpp"
#include "ppbase/table.hpp"

namespace ppbase {

namespace {

using Clock = std::chrono::steady_clock;

// Backtracking search for independent sets over a group table, relative to a
// fixed base subgroup folded into every closure (the Frattini subgroup is
// handled by searching in the quotient instead; the base is used for the
// K-independence quantities). With class_roots on, roots are conjugacy-class
// representatives (conjugating a set preserves independence and generation,
// so the member of least class may be assumed to be its representative) and
// tail members are ascending element indices with class id at least the
// root's. Each node carries the closures <P \ {x}> so that extending by y
// costs |P| incremental Dimino steps with early abort.
struct MaxEngine {
    const GroupTable& T;
    TSub base;
    bool pp_only;
    bool class_roots;
    Clock::time_point deadline;
    int stop_above;  // >= 0: abort once best > stop_above (decision mode)
    bool parallel;

    std::vector<EIdx> candidates;
    std::vector<EIdx> roots;

    std::atomic<bool> timed_out{false};
    std::atomic<bool> early_stop{false};

    struct Local {
        unsigned best = 0;
        std::vector<EIdx> witness;
        SearchStats stats;
    };

    struct Result {
        unsigned best = 0;
        std::vector<EIdx> witness;
        SearchStats stats;
        bool early_stopped = false;
    };

    MaxEngine(const GroupTable& t, TSub base_sub, bool pp, bool croots, Clock::time_point dl,
              int stop, bool par)
        : T(t),
          base(std::move(base_sub)),
          pp_only(pp),
          class_roots(croots),
          deadline(dl),
          stop_above(stop),
          parallel(par) {
        for (std::size_t e = 1; e < T.size(); ++e) {
            if (base.bits.test(e)) continue;
            if (!pp_only || T.is_pp(static_cast<EIdx>(e))) candidates.push_back(static_cast<EIdx>(e));
        }
        if (class_roots) {
            std::vector<EIdx> reps;
            for (EIdx r : T.class_reps()) {
                if (r == 0 || base.bits.test(r)) continue;
                if (pp_only && !T.is_pp(r)) continue;
                reps.push_back(r);
            }
            std::sort(reps.begin(), reps.end(), [&](EIdx a, EIdx b) {
                if (T.order_of(a) != T.order_of(b)) return T.order_of(a) < T.order_of(b);
                return a < b;
            });
            roots = std::move(reps);
        } else {
            roots = candidates;
        }
    }

    struct Node {
        std::vector<EIdx> members;
        std::vector<TSub> excl;  // excl[j] = <members \ members[j]>
        TSub clo;                // <members>
    };

    void record(Local& loc, const Node& node) {
        unsigned size = static_cast<unsigned>(node.members.size());
        if (size > loc.best) {
            loc.best = size;
            loc.witness = node.members;
            if (stop_above >= 0 && static_cast<int>(size) > stop_above) early_stop = true;
        }
    }

    bool should_abort(Local& loc) {
        if ((loc.stats.nodes & 255u) == 0) {
            if (Clock::now() > deadline) timed_out = true;
        }
        return timed_out.load(std::memory_order_relaxed) ||
               early_stop.load(std::memory_order_relaxed);
    }

    // Tries to extend node by y; fills child and reports acceptance.
    bool extend(const Node& node, EIdx y, Node& child, Local& loc) {
        if (node.clo.bits.test(y)) return false;  // dependent immediately
        child.members = node.members;
        child.members.push_back(y);
        child.excl.clear();
        child.excl.reserve(node.members.size() + 1);
        for (std::size_t j = 0; j < node.members.size(); ++j) {
            ++loc.stats.closures;
            auto ext = dimino_extend_excluding(T, node.excl[j], y, node.members[j]);
            if (!ext) return false;  // an old member became dependent
            child.excl.push_back(std::move(*ext));
        }
        child.excl.push_back(node.clo);
        ++loc.stats.closures;
        child.clo = dimino_extend(T, node.clo, y);
        return true;
    }

    void dfs(const Node& node, unsigned root_class, Local& loc) {
        ++loc.stats.nodes;
        if (should_abort(loc)) return;
        Node child;
        EIdx tail_min;
        if (class_roots)
            tail_min = node.members.size() >= 2 ? static_cast<EIdx>(node.members.back() + 1)
                                                : static_cast<EIdx>(0);
        else
            tail_min = static_cast<EIdx>(node.members.back() + 1);
        for (EIdx y : candidates) {
            if (y < tail_min || y == node.members[0]) continue;
            if (class_roots && T.class_of()[y] < root_class) continue;
            if (should_abort(loc)) return;
            if (!extend(node, y, child, loc)) continue;
            if (child.clo.order() == T.size()) {
                record(loc, child);  // independent generating set; leaf
            } else {
                dfs(child, root_class, loc);
            }
        }
    }

    Result run() {
        if (candidates.empty()) return {};
        struct Task {
            std::size_t root_i;
            std::size_t cand_i;
        };
        std::vector<Task> tasks;
        for (std::size_t r = 0; r < roots.size(); ++r)
            for (std::size_t c = 0; c < candidates.size(); ++c) tasks.push_back({r, c});

        std::vector<Local> locals(tasks.size());
        std::vector<Local> root_locals(roots.size());

        // Singleton roots first (cyclic groups).
        for (std::size_t r = 0; r < roots.size(); ++r) {
            Node node;
            node.members = {roots[r]};
            node.excl = {base};
            root_locals[r].stats.closures++;
            node.clo = dimino_extend(T, base, roots[r]);
            if (node.clo.order() == T.size()) record(root_locals[r], node);
        }

#pragma omp parallel for schedule(dynamic, 4) if (parallel)
        for (long long ti = 0; ti < static_cast<long long>(tasks.size()); ++ti) {
            const Task& task = tasks[static_cast<std::size_t>(ti)];
            Local& loc = locals[static_cast<std::size_t>(ti)];
            if (Clock::now() > deadline) timed_out = true;
            if (timed_out.load(std::memory_order_relaxed) ||
                early_stop.load(std::memory_order_relaxed))
                continue;
            EIdx r = roots[task.root_i];
            EIdx y = candidates[task.cand_i];
            if (y == r) continue;
            unsigned rc = T.class_of()[r];
            if (class_roots && T.class_of()[y] < rc) continue;
            if (!class_roots && y < r) continue;  // plain ascending subsets
            Node root_node;
            root_node.members = {r};
            root_node.excl = {base};
            ++loc.stats.closures;
            root_node.clo = dimino_extend(T, base, r);
            if (root_node.clo.order() == T.size()) continue;  // singleton leaf handled above
            Node child;
            if (!extend(root_node, y, child, loc)) continue;
            if (child.clo.order() == T.size())
                record(loc, child);
            else
                dfs(child, rc, loc);
        }

        if (timed_out) throw BudgetExceeded("independent-set search exceeded its time budget");

        Result res;
        for (const auto& loc : root_locals) {
            res.stats += loc.stats;
            if (loc.best > res.best) {
                res.best = loc.best;
                res.witness = loc.witness;
            }
        }
        for (const auto& loc : locals) {
            res.stats += loc.stats;
            if (loc.best > res.best) {
                res.best = loc.best;
                res.witness = loc.witness;
            }
        }
        res.early_stopped = early_stop.load();
        return res;
    }
};

// Frattini-quotient context: searches run in Q = G/Phi(G), witnesses are
// lifted back to G.
struct FrattiniContext {
    PermGroup G;
    PermGroup phi;
    PermGroup Q;
    std::shared_ptr<const Homomorphism> hom;  // null when Phi = 1
    std::shared_ptr<const GroupTable> TQ;

    Permutation lift(const Permutation& qbar) const {
        if (!hom) return qbar;
        auto TG = G.table();
        for (std::size_t i = 0; i < TG->size(); ++i)
            if (hom->apply(TG->perm(static_cast<EIdx>(i))) == qbar)
                return TG->perm(static_cast<EIdx>(i));
        throw Error("lift: no preimage found (engine bug)");
    }

    Permutation lift_pp(const Permutation& qbar) const {
        if (!hom) return qbar;
        Permutation g = lift(qbar);
        std::uint64_t q_ord = element_order(qbar);
        auto fac = factorize(q_ord);
        if (fac.size() != 1) throw Error("lift_pp: quotient element is not pp (engine bug)");
        Permutation part = primary_part(g, fac[0].first);
        if (!(hom->apply(part) == qbar)) throw Error("lift_pp: primary part image mismatch");
        return part;
    }
};

FrattiniContext make_context(const PermGroup& G, const SearchBudget& budget) {
    FrattiniContext ctx;
    ctx.G = G;
    ctx.phi = frattini(G, budget.lattice_cap);
    if (ctx.phi.is_trivial()) {
        ctx.Q = G;
    } else {
        auto [Q, hom] = quotient(G, ctx.phi, budget.order_cap);
        ctx.Q = Q;
        ctx.hom = std::make_shared<Homomorphism>(hom);
    }
    ctx.TQ = ctx.Q.table(budget.order_cap);
    return ctx;
}

MaxIndependentResult run_max(const PermGroup& G, const SearchBudget& budget, bool parallel,
                             bool pp_only, int stop_above, bool* early_stopped) {
    MaxIndependentResult out;
    if (G.order() == 1) return out;
    FrattiniContext ctx = make_context(G, budget);
    MaxEngine engine(*ctx.TQ, trivial_subgroup(*ctx.TQ), pp_only, true,
                     Clock::now() + budget.time, stop_above, parallel);
    auto res = engine.run();
    out.m = res.best;
    out.stats = res.stats;
    if (early_stopped) *early_stopped = res.early_stopped;
    for (EIdx e : res.witness) {
        const Permutation& qbar = ctx.TQ->perm(e);
        out.witness.push_back(pp_only ? ctx.lift_pp(qbar) : ctx.lift(qbar));
    }
    if (!res.early_stopped && !out.witness.empty()) {
        if (closure(G.degree(), out.witness).order() != G.order())
            throw Error("lifted witness fails to generate (engine bug)");
        if (!is_independent(G, out.witness, budget.lattice_cap))
            throw Error("lifted witness is not independent (engine bug)");
    }
    return out;
}

}  // namespace

bool is_independent(const PermGroup& G, const std::vector<Permutation>& X,
                    std::uint64_t lattice_cap) {
    for (const auto& x : X)
        if (!G.contains(x)) throw Error("is_independent: member outside the group");
    if (X.empty()) return true;
    PermGroup phi = frattini(G, lattice_cap);
    auto T = G.table(std::max<std::uint64_t>(lattice_cap, PermGroup::kTableCap));
    std::vector<EIdx> phi_gens;
    for (const auto& g : phi.generators()) phi_gens.push_back(T->index_of(g));
    for (std::size_t skip = 0; skip < X.size(); ++skip) {
        std::vector<EIdx> seeds = phi_gens;
        for (std::size_t j = 0; j < X.size(); ++j)
            if (j != skip) seeds.push_back(T->index_of(X[j]));
        if (closure_of(*T, seeds).bits.test(T->index_of(X[skip]))) return false;
    }
    return true;
}

MaxIndependentResult max_independent_generating(const PermGroup& G, const SearchBudget& budget,
                                                bool parallel) {
    return run_max(G, budget, parallel, false, -1, nullptr);
}

MaxIndependentResult max_independent_over(const PermGroup& G, const PermGroup& B,
                                          const SearchBudget& budget, bool parallel) {
    if (!G.contains_subgroup(B)) throw Error("max_independent_over: base not inside the group");
    MaxIndependentResult out;
    auto T = G.table(budget.order_cap);
    TSub base = subgroup_from_group(*T, B);
    if (base.order() == G.order()) return out;  // B already generates; the empty set is maximal
    MaxEngine engine(*T, base, false, false, Clock::now() + budget.time, -1, parallel);
    auto res = engine.run();
    out.m = res.best;
    out.stats = res.stats;
    for (EIdx e : res.witness) out.witness.push_back(T->perm(e));
    return out;
}

MaxIndependentResult max_pp_independent_generating(const PermGroup& G, const SearchBudget& budget,
                                                   bool parallel) {
    return run_max(G, budget, parallel, true, -1, nullptr);
}

MinPpResult min_pp_generating(const PermGroup& G, const SearchBudget& budget, bool parallel) {
    MinPpResult out;
    if (G.order() == 1) return out;  // the empty set generates
    auto T = G.table(budget.order_cap);
    const GroupTable& Tr = *T;
    Clock::time_point deadline = Clock::now() + budget.time;

    std::vector<EIdx> cand;
    for (std::size_t e = 1; e < Tr.size(); ++e)
        if (Tr.is_pp(static_cast<EIdx>(e))) cand.push_back(static_cast<EIdx>(e));
    std::vector<EIdx> roots;
    for (EIdx r : Tr.class_reps())
        if (r != 0 && Tr.is_pp(r)) roots.push_back(r);
    std::sort(roots.begin(), roots.end(), [&](EIdx a, EIdx b) {
        if (Tr.order_of(a) != Tr.order_of(b)) return Tr.order_of(a) < Tr.order_of(b);
        return a < b;
    });

    std::atomic<bool> timed_out{false};

    struct Local {
        bool found = false;
        std::vector<EIdx> witness;
        SearchStats stats;
    };

    for (unsigned k = 1; k <= 40; ++k) {
        std::vector<Local> locals(roots.size());

#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (long long ri = 0; ri < static_cast<long long>(roots.size()); ++ri) {
            Local& loc = locals[static_cast<std::size_t>(ri)];
            if (timed_out.load(std::memory_order_relaxed)) continue;
            EIdx r = roots[static_cast<std::size_t>(ri)];
            unsigned rc = Tr.class_of()[r];
            std::vector<EIdx> members{r};
            loc.stats.closures++;
            TSub clo = dimino_extend(Tr, trivial_subgroup(Tr), r);

            auto rec = [&](auto&& self, const TSub& cur, EIdx from) -> bool {
                loc.stats.nodes++;
                if ((loc.stats.nodes & 255u) == 0 && Clock::now() > deadline) {
                    timed_out = true;
                    return false;
                }
                if (cur.order() == Tr.size()) return members.size() <= k;
                if (members.size() == k) return false;
                for (EIdx y : cand) {
                    if (y <= from && members.size() >= 2) continue;
                    if (y == r || Tr.class_of()[y] < rc) continue;
                    if (cur.bits.test(y)) continue;
                    loc.stats.closures++;
                    TSub next = dimino_extend(Tr, cur, y);
                    members.push_back(y);
                    if (self(self, next, y)) return true;
                    members.pop_back();
                }
                return false;
            };
            if (clo.order() == Tr.size()) {
                if (k == 1) {
                    loc.found = true;
                    loc.witness = members;
                }
            } else if (k >= 2 && rec(rec, clo, 0)) {
                loc.found = true;
                loc.witness = members;
            }
        }

        if (timed_out) throw BudgetExceeded("min pp generating search exceeded its time budget");
        for (const auto& loc : locals) out.stats += loc.stats;
        for (const auto& loc : locals)
            if (loc.found) {
                out.k = k;
                for (EIdx e : loc.witness) out.witness.push_back(Tr.perm(e));
                return out;
            }
    }
    throw Error("min_pp_generating: no generating set found (engine bug)");
}

bool is_bpp_bruteforce(const PermGroup& G, const SearchBudget& budget, bool parallel) {
    if (G.order() == 1) return true;  // unique pp-base: the empty set
    MinPpResult mn = min_pp_generating(G, budget, parallel);
    bool early = false;
    MaxIndependentResult mx =
        run_max(G, budget, parallel, true, static_cast<int>(mn.k), &early);
    if (early || mx.m > mn.k) return false;
    if (mx.m < mn.k) throw Error("max pp search below the minimum (engine bug)");
    return true;
}

GenSetReport genset_report(const PermGroup& G, const SearchBudget& budget, bool parallel) {
    GenSetReport rep;
    if (G.order() == 1) {
        rep.is_bpp = true;
        return rep;
    }
    auto mx = max_independent_generating(G, budget, parallel);
    auto mp = max_pp_independent_generating(G, budget, parallel);
    auto mn = min_pp_generating(G, budget, parallel);
    rep.m = mx.m;
    rep.m_pp = mp.m;
    rep.min_pp = mn.k;
    rep.is_bpp = (mn.k == mp.m);
    rep.witness_max = std::move(mx.witness);
    rep.witness_max_pp = std::move(mp.witness);
    rep.witness_min = std::move(mn.witness);
    rep.stats = mx.stats;
    rep.stats += mp.stats;
    rep.stats += mn.stats;
    return rep;
}

std::vector<Permutation> pp_base_convert(const PermGroup& G, const std::vector<Permutation>& X,
                                         const SearchBudget& budget) {
    if (closure(G.degree(), X).order() != G.order())
        throw Error("pp_base_convert: X does not generate G");
    if (!is_independent(G, X, budget.lattice_cap))
        throw Error("pp_base_convert: X is not independent");

    auto T = G.table(budget.order_cap);
    PermGroup phi = frattini(G, budget.lattice_cap);
    std::vector<EIdx> phi_gens;
    for (const auto& g : phi.generators()) phi_gens.push_back(T->index_of(g));

    struct Part {
        EIdx elem;
        std::size_t source;
    };
    std::vector<Part> parts;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (is_pp_element(X[i])) {
            parts.push_back({T->index_of(X[i]), i});
        } else {
            for (const auto& y : pp_decompose(X[i]).parts) parts.push_back({T->index_of(y), i});
        }
    }

    auto generates = [&](const std::vector<Part>& ps, std::size_t skip) {
        std::vector<EIdx> seeds = phi_gens;
        for (std::size_t j = 0; j < ps.size(); ++j)
            if (j != skip) seeds.push_back(ps[j].elem);
        return closure_of(*T, seeds).order() == T->size();
    };

    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (generates(parts, j)) {
                parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(j));
                removed = true;
                break;
            }
        }
    }

    std::vector<Permutation> Y;
    std::vector<bool> covered(X.size(), false);
    for (const auto& p : parts) {
        Y.push_back(T->perm(p.elem));
        covered[p.source] = true;
    }
    for (bool c : covered)
        if (!c) throw Error("pp_base_convert: an input element lost all its parts (engine bug)");
    if (Y.size() < X.size()) throw Error("pp_base_convert: result smaller than input (engine bug)");
    if (!is_independent(G, Y, budget.lattice_cap) || closure(G.degree(), Y).order() != G.order())
        throw Error("pp_base_convert: result is not a pp-base (engine bug)");
    return Y;
}

int monolithic_delta(const PermGroup& G, const SearchBudget& budget, bool parallel) {
    auto mins = minimal_normal_subgroups(G, budget.lattice_cap);
    if (mins.size() != 1) throw Error("monolithic_delta: group is not monolithic");
    auto [Q, hom] = quotient(G, mins[0], budget.order_cap);
    (void)hom;
    return static_cast<int>(max_independent_generating(G, budget, parallel).m) -
           static_cast<int>(max_independent_generating(Q, budget, parallel).m);
}

std::vector<int> chief_deltas(const PermGroup& G, const SearchBudget& budget, bool parallel) {
    auto cs = chief_series(G, budget.lattice_cap);
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
        auto [Qhi, h1] = quotient(G, cs.terms[i + 1], budget.order_cap);  // G/G_{i+1}
        auto [Qlo, h2] = quotient(G, cs.terms[i], budget.order_cap);      // G/G_i
        (void)h1;
        (void)h2;
        out.push_back(static_cast<int>(max_independent_generating(Qhi, budget, parallel).m) -
                      static_cast<int>(max_independent_generating(Qlo, budget, parallel).m));
    }
    return out;
}

}  // namespace ppbase
