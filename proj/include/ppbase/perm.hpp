#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ppbase/error.hpp"

namespace ppbase {

// A bijection of {0..degree-1}. Immutable after construction; composition is
// left-to-right: (a * b)(p) = b(a(p)), matching right actions p^(ab) = (p^a)^b.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<unsigned> images);

    static Permutation identity(unsigned degree);

    unsigned degree() const { return static_cast<unsigned>(images_.size()); }
    unsigned operator()(unsigned point) const { return images_[point]; }
    const std::vector<unsigned>& images() const { return images_; }

    bool is_identity() const;

    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    Permutation power(long long exponent) const;
    Permutation conjugated_by(const Permutation& g) const;  // g^-1 * (*this) * g

    // Smallest moved point, or degree() if identity.
    unsigned first_moved_point() const;

    auto operator<=>(const Permutation& other) const = default;

private:
    std::vector<unsigned> images_;
};

struct PermHash {
    std::size_t operator()(const Permutation& p) const;
};

// Least k >= 1 with g^k = identity (lcm of cycle lengths).
std::uint64_t element_order(const Permutation& g);

// True iff element_order(g) is p^k, k >= 1. The identity is not a pp-element.
bool is_pp_element(const Permutation& g);

// Commuting prime-power parts of a non-identity element: parts[i] = g^{e_i}
// where e_i = 1 mod p_i^{a_i} and 0 mod the complement. The parts pairwise
// commute, have pairwise coprime prime-power orders, multiply to g in list
// order and generate <g>.
struct PrimaryDecomposition {
    std::vector<Permutation> parts;
    Permutation source;
};

PrimaryDecomposition pp_decompose(const Permutation& g);

// p-primary part of g for the prime p (p must divide the order of g).
Permutation primary_part(const Permutation& g, std::uint64_t p);

// Cycle-notation text I/O. Points are 1-based in text, e.g. "(1,2)(3,4,5)";
// "()" denotes the identity. Whitespace is not permitted.
std::string format_cycles(const Permutation& g);
Permutation parse_cycles(const std::string& text, unsigned degree);

}  // namespace ppbase
