#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "ppbase/bitset.hpp"
#include "ppbase/group.hpp"
#include "ppbase/table.hpp"

namespace ppbase {

inline constexpr std::uint64_t kLatticeCapDefault = 2016;

// Complete subgroup lattice of a small group. Entries are sorted by
// (order, element set); conjugate subgroups share a class id.
struct SubgroupLattice {
    PermGroup group;
    std::shared_ptr<const GroupTable> table;

    struct Entry {
        TSub sub;
        unsigned class_id = 0;
        bool maximal = false;
        bool normal = false;
    };
    std::vector<Entry> entries;
    std::vector<unsigned> class_reps;  // entry index of each class representative

    std::size_t size() const { return entries.size(); }
    PermGroup subgroup(std::size_t i) const;
    std::vector<std::size_t> maximal_indices() const;
    // Indices of maximal subgroups whose element set contains the given element.
    std::vector<std::size_t> maximal_containing(EIdx e) const;
};

SubgroupLattice subgroup_lattice(const PermGroup& G,
                                 std::uint64_t order_cap = kLatticeCapDefault,
                                 bool parallel = true);

// Cached variant: the lattice is computed once per PermGroup and shared.
std::shared_ptr<const SubgroupLattice> subgroup_lattice_cached(
    const PermGroup& G, std::uint64_t order_cap = kLatticeCapDefault, bool parallel = true);

// Intersection of all maximal subgroups of G.
PermGroup frattini(const PermGroup& G, std::uint64_t order_cap = kLatticeCapDefault);

// All normal subgroups, ascending by (order, element set). Computed from
// conjugacy-class joins; does not need the full lattice.
std::vector<PermGroup> normal_subgroups(const PermGroup& G,
                                        std::uint64_t order_cap = kLatticeCapDefault);

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& G,
                                                std::uint64_t order_cap = kLatticeCapDefault);

PermGroup socle(const PermGroup& G, std::uint64_t order_cap = kLatticeCapDefault);

bool is_monolithic(const PermGroup& G, std::uint64_t order_cap = kLatticeCapDefault);

// Derived series reaches the trivial group. Chain-based; no enumeration cap.
bool is_solvable(const PermGroup& G);

// Lower central series reaches the trivial group.
bool is_nilpotent(const PermGroup& G, std::uint64_t order_cap = kLatticeCapDefault);

// Which end of the candidate order the chief-series builder prefers; both give
// the same factor multiset (Jordan-Hoelder), exercised in tests.
enum class ChiefSelection { SmallestFirst, LargestFirst };

struct ChiefSeries {
    std::vector<PermGroup> terms;  // descending: terms[0] = G, back() = 1
    struct Factor {
        std::uint64_t order = 0;
        bool abelian = false;
        bool frattini = false;
    };
    std::vector<Factor> factors;  // factors[i] = terms[i] / terms[i+1]
};

ChiefSeries chief_series(const PermGroup& G, std::uint64_t order_cap = kLatticeCapDefault,
                         ChiefSelection selection = ChiefSelection::SmallestFirst);

// (a, b): number of non-Frattini and non-abelian chief factors.
std::pair<unsigned, unsigned> chief_counts(const PermGroup& G,
                                           std::uint64_t order_cap = kLatticeCapDefault);

}  // namespace ppbase
