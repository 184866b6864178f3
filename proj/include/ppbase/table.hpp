#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ppbase/bitset.hpp"
#include "ppbase/group.hpp"
#include "ppbase/perm.hpp"

namespace ppbase {

// Element index within a GroupTable. Tables are capped well below 2^16.
using EIdx = std::uint16_t;

// Dense multiplication-table view of a small group. Elements are sorted
// lexicographically by image array, so index 0 is the identity and index
// order is the deterministic element order used everywhere.
class GroupTable {
public:
    static std::shared_ptr<const GroupTable> build(std::vector<Permutation> elements,
                                                   const std::vector<Permutation>& gens);

    std::size_t size() const { return n_; }
    const Permutation& perm(EIdx i) const { return elems_[i]; }
    const std::vector<Permutation>& perms() const { return elems_; }

    EIdx index_of(const Permutation& p) const;
    std::optional<EIdx> find(const Permutation& p) const;

    EIdx mul(EIdx a, EIdx b) const { return mult_[std::size_t(a) * n_ + b]; }
    EIdx inv(EIdx a) const { return inv_[a]; }
    EIdx conj(EIdx x, EIdx g) const { return mul(mul(inv_[g], x), g); }
    EIdx commutator(EIdx a, EIdx b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }

    std::uint64_t order_of(EIdx i) const { return elem_order_[i]; }
    bool is_pp(EIdx i) const { return pp_flag_[i]; }

    const std::vector<EIdx>& gen_indices() const { return gen_idx_; }

    // Conjugacy classes; reps are the least members, ascending.
    const std::vector<unsigned>& class_of() const { return class_of_; }
    const std::vector<EIdx>& class_reps() const { return class_reps_; }
    const std::vector<std::vector<EIdx>>& class_members() const { return class_members_; }

    // Cyclic subgroup generated by each element (bitset), built at construction.
    const Bitset& cyclic_bits(EIdx i) const { return cyclic_[i]; }

private:
    std::size_t n_ = 0;
    std::vector<Permutation> elems_;
    std::vector<EIdx> mult_;
    std::vector<EIdx> inv_;
    std::vector<std::uint64_t> elem_order_;
    std::vector<bool> pp_flag_;
    std::vector<EIdx> gen_idx_;
    std::unordered_map<Permutation, EIdx, PermHash> index_;
    std::vector<unsigned> class_of_;
    std::vector<EIdx> class_reps_;
    std::vector<std::vector<EIdx>> class_members_;
    std::vector<Bitset> cyclic_;
};

// Subgroup handle: element bitset, ascending element list and a small
// generating set (empty for the trivial subgroup).
struct TSub {
    Bitset bits;
    std::vector<EIdx> elems;
    std::vector<EIdx> gens;

    std::uint64_t order() const { return elems.size(); }
    bool contains(EIdx i) const { return bits.test(i); }
};

TSub trivial_subgroup(const GroupTable& T);
TSub full_subgroup(const GroupTable& T);
TSub cyclic_subgroup(const GroupTable& T, EIdx g);

// <S, z> by coset expansion over the base subgroup S.
TSub dimino_extend(const GroupTable& T, const TSub& S, EIdx z);

// As above, but bails out with nullopt as soon as `probe` shows up in the
// partial closure. A complete result is guaranteed probe-free.
std::optional<TSub> dimino_extend_excluding(const GroupTable& T, const TSub& S, EIdx z,
                                            EIdx probe);

TSub closure_of(const GroupTable& T, std::span<const EIdx> seeds);

// Greedy small generating set of an existing subgroup, deterministic
// (ascending element scan).
std::vector<EIdx> reduce_generators(const GroupTable& T, const TSub& S);

// Subgroup handle for a subgroup given as a PermGroup (all generators must lie
// in the table's group).
TSub subgroup_from_group(const GroupTable& T, const PermGroup& S);

PermGroup subgroup_to_permgroup(const GroupTable& T, unsigned degree, const TSub& S);

// Conjugate subgroup S^g, elementwise.
TSub conjugate_subgroup(const GroupTable& T, const TSub& S, EIdx g);

bool subgroup_is_normal(const GroupTable& T, const TSub& S);
bool subgroup_is_abelian(const GroupTable& T, const TSub& S);

}  // namespace ppbase
