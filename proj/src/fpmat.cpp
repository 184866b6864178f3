#include "ppbase/fpmat.hpp"

#include <algorithm>

namespace ppbase {

namespace {

unsigned inv_mod(unsigned a, unsigned p) {
    // p prime, a != 0
    long long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw Error("inv_mod: not invertible");
    return static_cast<unsigned>((t % p + p) % p);
}

void trim(FpPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

}  // namespace

FpPoly poly_from(unsigned p, std::vector<unsigned> coeffs) {
    FpPoly f{p, std::move(coeffs)};
    for (auto& x : f.c) x %= p;
    trim(f);
    return f;
}

FpPoly poly_x_power(unsigned p, unsigned k) {
    FpPoly f{p, std::vector<unsigned>(k + 1, 0)};
    f.c[k] = 1;
    return f;
}

FpPoly poly_add(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        unsigned v = 0;
        if (i < a.c.size()) v += a.c[i];
        if (i < b.c.size()) v += b.c[i];
        r.c[i] = v % a.p;
    }
    trim(r);
    return r;
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b) { return poly_add(a, poly_scale(b, a.p - 1)); }

FpPoly poly_scale(const FpPoly& a, unsigned s) {
    FpPoly r = a;
    s %= a.p;
    for (auto& x : r.c) x = x * s % a.p;
    trim(r);
    return r;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly{a.p, {}};
    FpPoly r{a.p, std::vector<unsigned>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.p;
    trim(r);
    return r;
}

FpPoly poly_mod(const FpPoly& a, const FpPoly& m) {
    if (m.is_zero()) throw Error("poly_mod by zero");
    FpPoly r = a;
    unsigned p = a.p;
    unsigned lead_inv = inv_mod(m.c.back(), p);
    while (!r.is_zero() && r.c.size() >= m.c.size()) {
        unsigned coef = r.c.back() * lead_inv % p;
        std::size_t shift = r.c.size() - m.c.size();
        for (std::size_t i = 0; i < m.c.size(); ++i)
            r.c[shift + i] = (r.c[shift + i] + p * p - coef * m.c[i] % p) % p;
        trim(r);
    }
    return r;
}

FpPoly poly_divexact(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw Error("poly_divexact by zero");
    FpPoly r = a, q{a.p, std::vector<unsigned>(a.c.size(), 0)};
    unsigned p = a.p;
    unsigned lead_inv = inv_mod(b.c.back(), p);
    while (!r.is_zero() && r.c.size() >= b.c.size()) {
        unsigned coef = r.c.back() * lead_inv % p;
        std::size_t shift = r.c.size() - b.c.size();
        q.c[shift] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] = (r.c[shift + i] + p * p - coef * b.c[i] % p) % p;
        trim(r);
    }
    if (!r.is_zero()) throw Error("poly_divexact: not divisible");
    trim(q);
    return q;
}

FpPoly poly_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

FpPoly poly_lcm(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly{a.p, {}};
    return poly_monic(poly_divexact(poly_mul(a, b), poly_gcd(a, b)));
}

FpPoly poly_pow(const FpPoly& a, unsigned e) {
    FpPoly r = poly_from(a.p, {1});
    for (unsigned i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

FpPoly poly_monic(const FpPoly& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, inv_mod(a.c.back(), a.p));
}

bool poly_is_irreducible(const FpPoly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    // trial division by all monic polynomials of degree 1..d/2
    unsigned p = f.p;
    for (int deg = 1; deg <= d / 2; ++deg) {
        std::vector<unsigned> coeffs(static_cast<std::size_t>(deg) + 1, 0);
        coeffs[static_cast<std::size_t>(deg)] = 1;
        std::uint64_t total = 1;
        for (int i = 0; i < deg; ++i) total *= p;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (int i = 0; i < deg; ++i) {
                coeffs[static_cast<std::size_t>(i)] = static_cast<unsigned>(c % p);
                c /= p;
            }
            FpPoly g = poly_from(p, coeffs);
            if (poly_mod(f, g).is_zero()) return false;
        }
    }
    return true;
}

std::string poly_to_string(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        unsigned coef = f.c[static_cast<std::size_t>(i)];
        if (coef == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(coef);
        } else {
            if (coef != 1) out += std::to_string(coef);
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

FpPoly least_irreducible(unsigned p, unsigned degree) {
    std::vector<unsigned> coeffs(degree + 1, 0);
    coeffs[degree] = 1;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < degree; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < degree; ++i) {
            coeffs[i] = static_cast<unsigned>(c % p);
            c /= p;
        }
        FpPoly f = poly_from(p, coeffs);
        if (f.degree() == static_cast<int>(degree) && poly_is_irreducible(f)) return f;
    }
    throw Error("no irreducible polynomial found (impossible)");
}

FpMatrix FpMatrix::identity(unsigned p, unsigned n) {
    FpMatrix m{p, n, std::vector<unsigned>(std::size_t(n) * n, 0)};
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix mat_mul(const FpMatrix& x, const FpMatrix& y) {
    FpMatrix r{x.p, x.n, std::vector<unsigned>(std::size_t(x.n) * x.n, 0)};
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned k = 0; k < x.n; ++k) {
            unsigned v = x.at(i, k);
            if (!v) continue;
            for (unsigned j = 0; j < x.n; ++j)
                r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.p;
        }
    return r;
}

std::vector<unsigned> mat_vec(const FpMatrix& m, const std::vector<unsigned>& v) {
    std::vector<unsigned> r(m.n, 0);
    for (unsigned i = 0; i < m.n; ++i) {
        unsigned acc = 0;
        for (unsigned j = 0; j < m.n; ++j) acc += m.at(i, j) * v[j];
        r[i] = acc % m.p;
    }
    return r;
}

unsigned mat_rank(FpMatrix m) {
    unsigned rank = 0;
    for (unsigned col = 0; col < m.n && rank < m.n; ++col) {
        unsigned pivot = m.n;
        for (unsigned r = rank; r < m.n; ++r)
            if (m.at(r, col)) {
                pivot = r;
                break;
            }
        if (pivot == m.n) continue;
        for (unsigned j = 0; j < m.n; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        unsigned inv = inv_mod(m.at(rank, col), m.p);
        for (unsigned j = 0; j < m.n; ++j) m.at(rank, j) = m.at(rank, j) * inv % m.p;
        for (unsigned r = 0; r < m.n; ++r) {
            if (r == rank || !m.at(r, col)) continue;
            unsigned f = m.at(r, col);
            for (unsigned j = 0; j < m.n; ++j)
                m.at(r, j) = (m.at(r, j) + m.p * m.p - f * m.at(rank, j) % m.p) % m.p;
        }
        ++rank;
    }
    return rank;
}

bool mat_invertible(const FpMatrix& m) { return mat_rank(m) == m.n; }

std::uint64_t mat_order(const FpMatrix& m) {
    FpMatrix id = FpMatrix::identity(m.p, m.n);
    FpMatrix acc = m;
    std::uint64_t ord = 1;
    while (!(acc == id)) {
        acc = mat_mul(acc, m);
        ++ord;
        if (ord > 1'000'000) throw Error("mat_order: runaway (matrix not invertible?)");
    }
    return ord;
}

FpPoly min_poly(const FpMatrix& m) {
    const unsigned n = m.n, p = m.p;
    FpPoly mp = poly_from(p, {1});
    // global span of already-processed Krylov vectors
    std::vector<std::vector<unsigned>> global;  // echelonized rows
    std::vector<int> global_pivot;

    auto reduce_global = [&](std::vector<unsigned> v) {
        for (std::size_t r = 0; r < global.size(); ++r) {
            unsigned lead = v[static_cast<unsigned>(global_pivot[r])];
            if (lead)
                for (unsigned j = 0; j < n; ++j)
                    v[j] = (v[j] + p * p - lead * global[r][j] % p) % p;
        }
        return v;
    };

    for (unsigned s = 0; s < n; ++s) {
        std::vector<unsigned> seed(n, 0);
        seed[s] = 1;
        std::vector<unsigned> reduced = reduce_global(seed);
        if (std::all_of(reduced.begin(), reduced.end(), [](unsigned x) { return x == 0; }))
            continue;
        // local Krylov echelon with expressions in powers of m
        std::vector<std::vector<unsigned>> rows;
        std::vector<int> pivots;
        std::vector<FpPoly> exprs;
        std::vector<unsigned> v = seed;
        unsigned k = 0;
        FpPoly ann{p, {}};
        while (true) {
            std::vector<unsigned> r = v;
            FpPoly expr = poly_x_power(p, k);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                unsigned lead = r[static_cast<unsigned>(pivots[i])];
                if (!lead) continue;
                for (unsigned j = 0; j < n; ++j)
                    r[j] = (r[j] + p * p - lead * rows[i][j] % p) % p;
                expr = poly_sub(expr, poly_scale(exprs[i], lead));
            }
            int piv = -1;
            for (unsigned j = 0; j < n; ++j)
                if (r[j]) {
                    piv = static_cast<int>(j);
                    break;
                }
            if (piv < 0) {
                ann = poly_monic(expr);
                break;
            }
            unsigned inv = inv_mod(r[static_cast<unsigned>(piv)], p);
            FpPoly norm_expr = poly_scale(expr, inv);
            for (unsigned j = 0; j < n; ++j) r[j] = r[j] * inv % p;
            rows.push_back(r);
            pivots.push_back(piv);
            exprs.push_back(norm_expr);
            v = mat_vec(m, v);
            ++k;
        }
        mp = poly_lcm(mp, ann);
        // fold the local span into the global one
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto r = reduce_global(rows[i]);
            int piv = -1;
            for (unsigned j = 0; j < n; ++j)
                if (r[j]) {
                    piv = static_cast<int>(j);
                    break;
                }
            if (piv < 0) continue;
            unsigned inv = inv_mod(r[static_cast<unsigned>(piv)], p);
            for (unsigned j = 0; j < n; ++j) r[j] = r[j] * inv % p;
            global.push_back(std::move(r));
            global_pivot.push_back(piv);
        }
    }
    return mp;
}

FpPoly char_poly(const FpMatrix& m) {
    // polynomial-entry cofactor expansion of det(xI - A); fine for small n
    const unsigned n = m.n, p = m.p;
    std::vector<std::vector<FpPoly>> mat(n, std::vector<FpPoly>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            FpPoly e = poly_from(p, {(p - m.at(i, j) % p) % p});
            if (i == j) e = poly_add(e, poly_x_power(p, 1));
            mat[i][j] = e;
        }
    std::vector<unsigned> cols(n);
    for (unsigned j = 0; j < n; ++j) cols[j] = j;
    auto det = [&](auto&& self, unsigned row, std::vector<unsigned>& cc) -> FpPoly {
        if (cc.empty()) return poly_from(p, {1});
        FpPoly acc{p, {}};
        for (std::size_t k = 0; k < cc.size(); ++k) {
            unsigned col = cc[k];
            if (mat[row][col].is_zero()) continue;
            std::vector<unsigned> rest;
            for (std::size_t t = 0; t < cc.size(); ++t)
                if (t != k) rest.push_back(cc[t]);
            FpPoly sub = self(self, row + 1, rest);
            FpPoly term = poly_mul(mat[row][col], sub);
            if (k % 2 == 1) term = poly_scale(term, p - 1);
            acc = poly_add(acc, term);
        }
        return acc;
    };
    return det(det, 0, cols);
}

}  // namespace ppbase
