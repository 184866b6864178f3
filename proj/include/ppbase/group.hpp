#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ppbase/perm.hpp"

namespace ppbase {

class GroupTable;

namespace detail {
struct GroupImpl;
struct HomImpl;
}  // namespace detail

// A finite permutation group given by generators. The stabilizer chain and the
// multiplication table are built lazily and cached; a PermGroup is immutable
// after construction and cheap to copy.
class PermGroup {
public:
    static constexpr std::uint64_t kElementsCap = 20000;
    static constexpr std::uint64_t kTableCap = 6000;

    PermGroup();  // trivial group of degree 0
    PermGroup(unsigned degree, std::vector<Permutation> generators);
    static PermGroup trivial(unsigned degree);

    unsigned degree() const;
    const std::vector<Permutation>& generators() const;

    std::uint64_t order() const;
    bool is_trivial() const { return order() == 1; }
    bool contains(const Permutation& g) const;

    // All elements in lexicographic image order. Errors if order() > cap.
    std::vector<Permutation> elements(std::uint64_t cap = kElementsCap) const;

    // Multiplication-table view for enumerative algorithms; cached. Errors if
    // order() > cap (an explicit larger cap may be passed).
    std::shared_ptr<const GroupTable> table(std::uint64_t cap = kTableCap) const;

    bool contains_subgroup(const PermGroup& other) const;
    bool same_group_as(const PermGroup& other) const;
    bool is_normal_in(const PermGroup& ambient) const;
    bool is_abelian() const;

    // Type-erased per-group cache slots (used to share computed lattices).
    std::shared_ptr<const void> aux_cached(const std::string& key) const;
    void aux_store(const std::string& key, std::shared_ptr<const void> value) const;

private:
    std::shared_ptr<detail::GroupImpl> impl_;
    friend PermGroup build_group(unsigned, std::vector<Permutation>);
};

PermGroup build_group(unsigned degree, std::vector<Permutation> gens);

// Subgroup of Sym(degree) generated by the seeds; the group argument only
// supplies the ambient degree.
PermGroup closure(unsigned degree, const std::vector<Permutation>& seeds);
PermGroup closure(const PermGroup& ambient, const std::vector<Permutation>& seeds);

// Smallest normal subgroup of G containing the seeds (seeds must lie in G).
PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& seeds);

// (representative, class size) pairs; representatives are the lexicographically
// least class members, listed in ascending order. Needs order(G) <= cap.
std::vector<std::pair<Permutation, std::uint64_t>> conjugacy_classes(
    const PermGroup& G, std::uint64_t cap = PermGroup::kElementsCap);

// A homomorphism G -> H described by generator images, applicable to arbitrary
// elements of the source.
class Homomorphism {
public:
    const PermGroup& source() const;
    const PermGroup& target() const;
    const std::vector<Permutation>& gen_images() const;

    Permutation apply(const Permutation& g) const;
    PermGroup kernel() const;
    PermGroup image() const;

    // Verifies multiplicativity over the whole source (dense check).
    Homomorphism(PermGroup source, PermGroup target, std::vector<Permutation> gen_images,
                 std::uint64_t cap = PermGroup::kTableCap);

private:
    explicit Homomorphism(std::shared_ptr<const detail::HomImpl> impl);
    std::shared_ptr<const detail::HomImpl> impl_;

    friend Homomorphism coset_action(const PermGroup&, const PermGroup&, std::uint64_t);
    friend std::pair<PermGroup, Homomorphism> quotient(const PermGroup&, const PermGroup&,
                                                       std::uint64_t);
};

// Action of G on the right cosets of M; target degree is the index |G:M| and
// the kernel is the core of M in G.
Homomorphism coset_action(const PermGroup& G, const PermGroup& M,
                          std::uint64_t cap = PermGroup::kTableCap);

// Permutation group isomorphic to G/N together with the natural epimorphism.
// N must be normal in G. For N = 1 this returns G with the identity map.
std::pair<PermGroup, Homomorphism> quotient(const PermGroup& G, const PermGroup& N,
                                            std::uint64_t cap = PermGroup::kTableCap);

}  // namespace ppbase
