#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppbase/fpmat.hpp"
#include "ppbase/group.hpp"
#include "ppbase/structure.hpp"

namespace ppbase {

// Action of a fixed generator of a cyclic group Q on an elementary abelian
// p-group P, written additively over a chosen basis.
struct ModuleAction {
    unsigned p = 2;
    unsigned dim = 0;
    FpMatrix matrix;                  // columns are the images of the basis
    std::vector<Permutation> basis;   // deterministic basis of P, as elements of G
};

// Monic least-degree f with f(matrix) = 0; rejects singular matrices.
FpPoly minimal_polynomial(const ModuleAction& action);

struct ScalarExtensionInfo {
    unsigned p = 0;           // prime of P
    unsigned q = 0;           // prime of Q
    std::uint64_t q_order = 0;  // |Q| = q^b
    unsigned dim = 0;         // dim_{F_p} P
    unsigned module_degree = 0;  // degree of the irreducible minimal polynomial
    unsigned multiplicity = 0;   // dim / module_degree
    FpPoly min_poly;
    ModuleAction action;
    PermGroup P, Q;
};

// Recognizes G = P x| Q with P a normal elementary abelian Sylow p-subgroup,
// Q a nontrivial cyclic Sylow q-subgroup acting faithfully, and the module P
// semisimple homogeneous (minimal polynomial irreducible). Requires
// Phi(G) = 1.
std::optional<ScalarExtensionInfo> recognize_scalar_extension(
    const PermGroup& G, std::uint64_t order_cap = kLatticeCapDefault);

// Finest decomposition of G into direct factors of pairwise coprime orders;
// {G} when no coprime split exists. Requires Phi(G) = 1.
std::vector<PermGroup> coprime_factorize(const PermGroup& G,
                                         std::uint64_t order_cap = kLatticeCapDefault);

struct BppDescriptor {
    enum class Kind { ElementaryAbelian, ScalarExtension, CoprimeProduct, NotBpp };
    Kind kind = Kind::NotBpp;
    unsigned prime = 0;  // ElementaryAbelian (0 for the degenerate trivial group)
    std::optional<ScalarExtensionInfo> scalar;
    std::vector<BppDescriptor> factors;
    std::vector<PermGroup> factor_groups;
    std::string reason;  // NotBpp

    bool is_bpp() const { return kind != Kind::NotBpp; }
    std::string kind_name() const;
};

// Structural B_pp decision per the Frattini-free classification. Requires
// Phi(G) = 1; callers with Phi(G) != 1 must pass G/Phi(G).
BppDescriptor is_bpp_structural(const PermGroup& G,
                                std::uint64_t order_cap = kLatticeCapDefault);

}  // namespace ppbase
