#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "ppbase/group.hpp"
#include "ppbase/structure.hpp"

namespace ppbase {

struct SearchBudget {
    std::chrono::milliseconds time{std::chrono::milliseconds(600'000)};
    std::uint64_t order_cap = PermGroup::kTableCap;
    std::uint64_t lattice_cap = kLatticeCapDefault;
};

// Deterministic work counters; wall time never appears in reports.
struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t closures = 0;

    SearchStats& operator+=(const SearchStats& o) {
        nodes += o.nodes;
        closures += o.closures;
        return *this;
    }
};

// X independent in G: no x with x in <(X \ {x}) union Phi(G)>.
bool is_independent(const PermGroup& G, const std::vector<Permutation>& X,
                    std::uint64_t lattice_cap = kLatticeCapDefault);

struct MaxIndependentResult {
    unsigned m = 0;
    std::vector<Permutation> witness;
    SearchStats stats;
};

// Largest independent generating set. The search runs in G/Phi(G) with
// class-representative roots; the witness is lifted back to G.
MaxIndependentResult max_independent_generating(const PermGroup& G,
                                                const SearchBudget& budget = {},
                                                bool parallel = true);

// Same search restricted to prime-power-order candidates; the witness consists
// of pp-elements of G (lifted via primary parts).
MaxIndependentResult max_pp_independent_generating(const PermGroup& G,
                                                   const SearchBudget& budget = {},
                                                   bool parallel = true);

// Largest Y with <B, Y> = G and no proper subset of Y generating G together
// with the fixed subgroup B. Backtracking over plain ascending subsets (no
// conjugacy reduction; B is not normal in general).
MaxIndependentResult max_independent_over(const PermGroup& G, const PermGroup& B,
                                          const SearchBudget& budget = {}, bool parallel = true);

struct MinPpResult {
    unsigned k = 0;
    std::vector<Permutation> witness;
    SearchStats stats;
};

// Smallest pp generating set, iterative deepening k = 1, 2, ...
MinPpResult min_pp_generating(const PermGroup& G, const SearchBudget& budget = {},
                              bool parallel = true);

// min_pp == m_pp decision; the max search stops early once any pp-independent
// generating set larger than the minimum shows up.
bool is_bpp_bruteforce(const PermGroup& G, const SearchBudget& budget = {}, bool parallel = true);

struct GenSetReport {
    unsigned m = 0;
    unsigned m_pp = 0;
    unsigned min_pp = 0;
    bool is_bpp = false;
    std::vector<Permutation> witness_max;
    std::vector<Permutation> witness_max_pp;
    std::vector<Permutation> witness_min;
    SearchStats stats;
};

GenSetReport genset_report(const PermGroup& G, const SearchBudget& budget = {},
                           bool parallel = true);

// Extracts a pp-base from the primary parts of an independent generating set,
// greedily removing redundant parts. The result keeps at least one part of
// every input element and is never smaller than the input.
std::vector<Permutation> pp_base_convert(const PermGroup& G, const std::vector<Permutation>& X,
                                         const SearchBudget& budget = {});

// m(G) - m(G/soc(G)) for monolithic G.
int monolithic_delta(const PermGroup& G, const SearchBudget& budget = {}, bool parallel = true);

// Per-chief-factor deltas m(G/G_{i+1}) - m(G/G_i), aligned with
// chief_series(G).factors (top factor first).
std::vector<int> chief_deltas(const PermGroup& G, const SearchBudget& budget = {},
                              bool parallel = true);

}  // namespace ppbase
