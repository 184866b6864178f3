#include "ppbase/table.hpp"

#include <algorithm>

#include "ppbase/numeric.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ppbase {

std::shared_ptr<const GroupTable> GroupTable::build(std::vector<Permutation> elements,
                                                    const std::vector<Permutation>& gens) {
    auto table = std::make_shared<GroupTable>();
    GroupTable& T = *table;
    std::sort(elements.begin(), elements.end());
    T.elems_ = std::move(elements);
    T.n_ = T.elems_.size();
    if (T.n_ == 0) throw Error("group table needs at least the identity");
    if (T.n_ > 60000) throw CapExceeded("group table limited to 60000 elements");
    if (!T.elems_[0].is_identity()) throw Error("identity missing from element list");

    T.index_.reserve(T.n_ * 2);
    for (std::size_t i = 0; i < T.n_; ++i) T.index_.emplace(T.elems_[i], static_cast<EIdx>(i));

    T.gen_idx_.clear();
    for (const auto& g : gens) T.gen_idx_.push_back(T.index_of(g));

    const std::size_t n = T.n_;
    const unsigned degree = T.elems_[0].degree();

    // Multiplication table. Generator columns are computed by hashing; every
    // other column j comes from a BFS factorization j = j' * g, so that
    // a*j = (a*j')*g is a single lookup.
    T.mult_.assign(n * n, 0);
    std::vector<EIdx> bfs_parent(n, 0), bfs_gen(n, 0);
    std::vector<EIdx> bfs_order;
    bfs_order.reserve(n);
    {
        std::vector<bool> seen(n, false);
        seen[0] = true;
        std::vector<EIdx> queue{0};
        std::size_t qi = 0;
        while (qi < queue.size()) {
            EIdx x = queue[qi++];
            for (std::size_t gi = 0; gi < T.gen_idx_.size(); ++gi) {
                Permutation prod = T.elems_[x] * T.elems_[T.gen_idx_[gi]];
                EIdx y = T.index_of(prod);
                if (!seen[y]) {
                    seen[y] = true;
                    bfs_parent[y] = x;
                    bfs_gen[y] = static_cast<EIdx>(gi);
                    bfs_order.push_back(y);
                    queue.push_back(y);
                }
            }
        }
        if (queue.size() != n) throw Error("generators do not generate the element list");
    }
    // Generator columns by hashing.
    for (std::size_t gi = 0; gi < T.gen_idx_.size(); ++gi) {
        EIdx g = T.gen_idx_[gi];
#pragma omp parallel for schedule(static)
        for (long long a = 0; a < static_cast<long long>(n); ++a) {
            T.mult_[static_cast<std::size_t>(a) * n + g] =
                T.index_of(T.elems_[static_cast<std::size_t>(a)] * T.elems_[g]);
        }
    }
    std::vector<bool> is_gen_col(n, false);
    for (EIdx g : T.gen_idx_) is_gen_col[g] = true;
#pragma omp parallel for schedule(static)
    for (long long a = 0; a < static_cast<long long>(n); ++a) {
        auto row = T.mult_.begin() + static_cast<std::size_t>(a) * n;
        row[0] = static_cast<EIdx>(a);
        for (EIdx j : bfs_order) {
            if (is_gen_col[j]) continue;  // precomputed, never rewritten
            EIdx jp = bfs_parent[j];
            EIdx g = T.gen_idx_[bfs_gen[j]];
            row[j] = T.mult_[static_cast<std::size_t>(row[jp]) * n + g];
        }
    }

    T.inv_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) T.inv_[i] = T.index_of(T.elems_[i].inverse());

    T.elem_order_.resize(n);
    T.pp_flag_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        T.elem_order_[i] = element_order(T.elems_[i]);
        T.pp_flag_[i] = is_prime_power(T.elem_order_[i]);
    }

    // Conjugacy classes: orbits under conjugation by the generators, seeded in
    // ascending element order so each representative is the least member.
    T.class_of_.assign(n, 0);
    std::vector<bool> visited(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (visited[i]) continue;
        unsigned cid = static_cast<unsigned>(T.class_reps_.size());
        T.class_reps_.push_back(static_cast<EIdx>(i));
        std::vector<EIdx> members;
        std::vector<EIdx> queue{static_cast<EIdx>(i)};
        visited[i] = true;
        while (!queue.empty()) {
            EIdx x = queue.back();
            queue.pop_back();
            members.push_back(x);
            T.class_of_[x] = cid;
            for (EIdx g : T.gen_idx_) {
                EIdx y = T.conj(x, g);
                if (!visited[y]) {
                    visited[y] = true;
                    queue.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        T.class_members_.push_back(std::move(members));
    }

    // Cyclic subgroups, one bitset per element.
    T.cyclic_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Bitset b(n);
        EIdx x = 0;
        do {
            b.set(x);
            x = T.mul(x, static_cast<EIdx>(i));
        } while (x != 0);
        T.cyclic_.push_back(std::move(b));
    }

    (void)degree;
    return table;
}

EIdx GroupTable::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw Error("element not in group table");
    return it->second;
}

std::optional<EIdx> GroupTable::find(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

TSub trivial_subgroup(const GroupTable& T) {
    TSub s;
    s.bits = Bitset(T.size());
    s.bits.set(0);
    s.elems = {0};
    return s;
}

TSub cyclic_subgroup(const GroupTable& T, EIdx g) {
    TSub s;
    s.bits = T.cyclic_bits(g);
    s.bits.for_each([&](std::size_t i) { s.elems.push_back(static_cast<EIdx>(i)); });
    if (g != 0) s.gens = {g};
    return s;
}

TSub full_subgroup(const GroupTable& T) {
    TSub s;
    s.bits = Bitset(T.size());
    s.elems.resize(T.size());
    for (std::size_t i = 0; i < T.size(); ++i) {
        s.bits.set(i);
        s.elems[i] = static_cast<EIdx>(i);
    }
    s.gens = T.gen_indices();
    return s;
}

namespace {

// Shared Dimino core: expands <S, z> coset by coset over the base subgroup S.
// If probe != n, bails out once probe appears.
std::optional<TSub> dimino_core(const GroupTable& T, const TSub& S, EIdx z, std::size_t probe) {
    if (probe < T.size() && S.bits.test(static_cast<EIdx>(probe))) return std::nullopt;
    if (S.bits.test(z)) return S;
    if (static_cast<std::size_t>(z) == probe) return std::nullopt;
    TSub R;
    R.bits = S.bits;
    R.elems = S.elems;
    R.gens = S.gens;
    R.gens.push_back(z);

    std::vector<EIdx> reps{z};
    auto add_coset = [&](EIdx rep) -> bool {
        for (EIdx s : S.elems) {
            EIdx u = T.mul(s, rep);
            if (!R.bits.test(u)) {
                R.bits.set(u);
                R.elems.push_back(u);
                if (u == probe) return false;
            }
        }
        return true;
    };
    if (!add_coset(z)) return std::nullopt;
    std::size_t qi = 0;
    while (qi < reps.size()) {
        EIdx r = reps[qi++];
        for (EIdx g : R.gens) {
            EIdx t = T.mul(r, g);
            if (!R.bits.test(t)) {
                reps.push_back(t);
                if (!add_coset(t)) return std::nullopt;
            }
        }
    }
    std::sort(R.elems.begin(), R.elems.end());
    return R;
}

}  // namespace

TSub dimino_extend(const GroupTable& T, const TSub& S, EIdx z) {
    return *dimino_core(T, S, z, T.size());
}

std::optional<TSub> dimino_extend_excluding(const GroupTable& T, const TSub& S, EIdx z,
                                            EIdx probe) {
    return dimino_core(T, S, z, probe);
}

TSub closure_of(const GroupTable& T, std::span<const EIdx> seeds) {
    TSub R = trivial_subgroup(T);
    for (EIdx s : seeds) R = dimino_extend(T, R, s);
    return R;
}

std::vector<EIdx> reduce_generators(const GroupTable& T, const TSub& S) {
    std::vector<EIdx> gens;
    TSub R = trivial_subgroup(T);
    for (EIdx e : S.elems) {
        if (R.bits.test(e)) continue;
        gens.push_back(e);
        R = dimino_extend(T, R, e);
        if (R.order() == S.order()) break;
    }
    return gens;
}

TSub subgroup_from_group(const GroupTable& T, const PermGroup& S) {
    std::vector<EIdx> seeds;
    for (const auto& g : S.generators()) seeds.push_back(T.index_of(g));
    return closure_of(T, seeds);
}

PermGroup subgroup_to_permgroup(const GroupTable& T, unsigned degree, const TSub& S) {
    std::vector<Permutation> gens;
    std::vector<EIdx> gi = S.gens.empty() ? reduce_generators(T, S) : S.gens;
    for (EIdx g : gi) gens.push_back(T.perm(g));
    return PermGroup(degree, std::move(gens));
}

TSub conjugate_subgroup(const GroupTable& T, const TSub& S, EIdx g) {
    TSub R;
    R.bits = Bitset(T.size());
    R.elems.reserve(S.elems.size());
    for (EIdx e : S.elems) {
        EIdx c = T.conj(e, g);
        R.bits.set(c);
        R.elems.push_back(c);
    }
    std::sort(R.elems.begin(), R.elems.end());
    for (EIdx e : S.gens) R.gens.push_back(T.conj(e, g));
    return R;
}

bool subgroup_is_normal(const GroupTable& T, const TSub& S) {
    for (EIdx g : T.gen_indices())
        for (EIdx e : S.gens.empty() ? S.elems : S.gens)
            if (!S.bits.test(T.conj(e, g))) return false;
    return true;
}

bool subgroup_is_abelian(const GroupTable& T, const TSub& S) {
    const auto& gens = S.gens.empty() ? S.elems : S.gens;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (T.mul(gens[i], gens[j]) != T.mul(gens[j], gens[i])) return false;
    return true;
}

}  // namespace ppbase
