#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppbase/error.hpp"

namespace ppbase {

// Dense polynomial over F_p, coefficients ascending, no trailing zeros.
struct FpPoly {
    unsigned p = 2;
    std::vector<unsigned> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const FpPoly& o) const = default;
};

FpPoly poly_from(unsigned p, std::vector<unsigned> coeffs);
FpPoly poly_x_power(unsigned p, unsigned k);
FpPoly poly_add(const FpPoly& a, const FpPoly& b);
FpPoly poly_sub(const FpPoly& a, const FpPoly& b);
FpPoly poly_scale(const FpPoly& a, unsigned s);
FpPoly poly_mul(const FpPoly& a, const FpPoly& b);
FpPoly poly_mod(const FpPoly& a, const FpPoly& m);
FpPoly poly_divexact(const FpPoly& a, const FpPoly& b);
FpPoly poly_gcd(FpPoly a, FpPoly b);  // monic
FpPoly poly_lcm(const FpPoly& a, const FpPoly& b);
FpPoly poly_pow(const FpPoly& a, unsigned e);
FpPoly poly_monic(const FpPoly& a);
bool poly_is_irreducible(const FpPoly& f);
std::string poly_to_string(const FpPoly& f);  // e.g. "x^2+2x+1"

// Lexicographically least monic irreducible of the given degree (coefficients
// compared from the constant term up); the deterministic field polynomial.
FpPoly least_irreducible(unsigned p, unsigned degree);

// Row-major matrix over F_p.
struct FpMatrix {
    unsigned p = 2;
    unsigned n = 0;
    std::vector<unsigned> a;

    static FpMatrix identity(unsigned p, unsigned n);
    unsigned at(unsigned i, unsigned j) const { return a[i * n + j]; }
    unsigned& at(unsigned i, unsigned j) { return a[i * n + j]; }
    bool operator==(const FpMatrix& o) const = default;
};

FpMatrix mat_mul(const FpMatrix& x, const FpMatrix& y);
std::vector<unsigned> mat_vec(const FpMatrix& m, const std::vector<unsigned>& v);
unsigned mat_rank(FpMatrix m);
bool mat_invertible(const FpMatrix& m);
std::uint64_t mat_order(const FpMatrix& m);  // multiplicative order

// Minimal polynomial via Krylov spans (least common annihilator over the
// standard basis vectors).
FpPoly min_poly(const FpMatrix& m);

// Characteristic polynomial det(xI - A), cofactor expansion (small n).
FpPoly char_poly(const FpMatrix& m);

}  // namespace ppbase
