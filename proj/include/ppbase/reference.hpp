#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ppbase/group.hpp"

namespace ppbase::ref {

// Serial, deliberately simple reference implementations. They share no search
// machinery with the production kernels and exist so tests can compare the
// optimized OpenMP paths against an independent route, and so the benchmark
// can report the speedup.

// Every subgroup, found by closing the set of <=2-generated subgroups under
// pairwise joins. Exponential-ish; intended for order <= 48.
std::vector<PermGroup> all_subgroups_bruteforce(const PermGroup& G);

// Largest independent generating set by plain depth-first enumeration over
// all elements (no conjugacy reduction, no incremental closure reuse).
unsigned max_independent_bruteforce(const PermGroup& G);

// Same brute-force search restricted to prime-power-order candidates.
unsigned max_pp_independent_bruteforce(const PermGroup& G);

// Smallest number of pp-elements generating G, by subset deepening.
unsigned min_pp_generating_bruteforce(const PermGroup& G);

// (x, n) pairs without a large primitive prime divisor, decided by fully
// factoring x^n - 1 (keep the ranges small).
std::vector<std::pair<std::uint64_t, unsigned>> feit_scan_serial(std::uint64_t x_max,
                                                                 unsigned n_max);

}  // namespace ppbase::ref
