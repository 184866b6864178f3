#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ppbase/genset.hpp"
#include "ppbase/group.hpp"
#include "ppbase/structure.hpp"

namespace ppbase {

// All ratios in this module are exact rationals; no floating point.
using Rational = mpq_class;

// Fixed point ratio of g on the right cosets of M in H, computed both as
// fixed cosets over the index and as |g^H meet M| / |g^H|; the two routes
// must agree exactly (a mismatch is an engine bug and throws).
Rational fixed_point_ratio(const PermGroup& H, const Permutation& g, const PermGroup& M,
                           std::uint64_t order_cap = kLatticeCapDefault);

// P(g, s): fraction of conjugates t of s with <g, t> not covering S, by full
// enumeration of the class of s.
Rational spread_P(const PermGroup& H, const PermGroup& S, const Permutation& g,
                  const Permutation& s, std::uint64_t order_cap = kLatticeCapDefault,
                  bool parallel = true);

// Maximal subgroups of H containing g.
std::vector<PermGroup> maximal_overgroups(const PermGroup& H, const Permutation& g,
                                          std::uint64_t order_cap = kLatticeCapDefault);

struct SpreadReport {
    Permutation g;
    Permutation s;
    Rational P_value;
    Rational bound_value;  // sum of fixed point ratios over maximals containing s
    std::size_t maximal_overgroups_of_s = 0;
    bool holds = false;    // P_value <= bound_value (always; checked)
};

// Verifies P(g,s) <= sum over maximal M containing s of the fixed point ratio
// of g on M\H; throws when the inequality fails (engine bug).
SpreadReport spread_bound_check(const PermGroup& H, const PermGroup& S, const Permutation& g,
                                const Permutation& s,
                                std::uint64_t order_cap = kLatticeCapDefault,
                                bool parallel = true);

// Smallest number of pp-elements of S that generate H together with K.
// Requires H = KS; iterative deepening capped at 3.
unsigned t_HK(const PermGroup& H, const PermGroup& S, const PermGroup& K,
              std::uint64_t order_cap = kLatticeCapDefault);

// max of t_HK over subgroup-class representatives K with KS = H.
unsigned t_H(const PermGroup& H, const PermGroup& S,
             std::uint64_t order_cap = kLatticeCapDefault, bool parallel = true);

// Largest K-independent K-generating set size; requires H = KS.
unsigned m_K(const PermGroup& H, const PermGroup& S, const PermGroup& K,
             const SearchBudget& budget = {}, bool parallel = true);

// Y is K-generating (<K, Y> = H) and no proper subset generates with K.
bool is_k_independent_generating(const PermGroup& H, const PermGroup& K,
                                 const std::vector<Permutation>& Y,
                                 std::uint64_t order_cap = kLatticeCapDefault);

}  // namespace ppbase
