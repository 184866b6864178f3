#include "ppbase/perm.hpp"

#include <algorithm>
#include <numeric>

#include "ppbase/numeric.hpp"

namespace ppbase {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (unsigned v : images_) {
        if (v >= images_.size() || seen[v]) throw Error("permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(unsigned degree) {
    std::vector<unsigned> im(degree);
    std::iota(im.begin(), im.end(), 0u);
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

bool Permutation::is_identity() const {
    for (unsigned i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (degree() != other.degree()) throw Error("composing permutations of different degrees");
    Permutation r;
    r.images_.resize(degree());
    for (unsigned i = 0; i < degree(); ++i) r.images_[i] = other.images_[images_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(degree());
    for (unsigned i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
    return r;
}

Permutation Permutation::power(long long exponent) const {
    std::uint64_t ord = element_order(*this);
    long long e = exponent % static_cast<long long>(ord);
    if (e < 0) e += static_cast<long long>(ord);
    Permutation acc = identity(degree());
    Permutation base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    return g.inverse() * (*this) * g;
}

unsigned Permutation::first_moved_point() const {
    for (unsigned i = 0; i < degree(); ++i)
        if (images_[i] != i) return i;
    return degree();
}

std::size_t PermHash::operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned v : p.images()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::uint64_t element_order(const Permutation& g) {
    std::vector<bool> seen(g.degree(), false);
    std::uint64_t ord = 1;
    for (unsigned i = 0; i < g.degree(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        unsigned j = i;
        do {
            seen[j] = true;
            j = g(j);
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

bool is_pp_element(const Permutation& g) { return is_prime_power(element_order(g)); }

PrimaryDecomposition pp_decompose(const Permutation& g) {
    if (g.is_identity()) throw Error("pp_decompose: no primary parts for the identity");
    std::uint64_t ord = element_order(g);
    PrimaryDecomposition d;
    d.source = g;
    for (const auto& [p, e] : factorize(ord)) {
        d.parts.push_back(primary_part(g, p));
        (void)e;
    }
    return d;
}

Permutation primary_part(const Permutation& g, std::uint64_t p) {
    std::uint64_t ord = element_order(g);
    std::uint64_t pp = 1;
    while (ord % p == 0) {
        ord /= p;
        pp *= p;
    }
    if (pp == 1) throw Error("primary_part: prime does not divide the element order");
    // ord is now the p'-part m. Want exponent e with e = 1 mod pp, e = 0 mod m:
    // e = m * (m^-1 mod pp).
    std::uint64_t m = ord;
    std::uint64_t minv = 1;
    if (pp > 1) {
        // p^k is a prime power; m is coprime to it, so m^(phi-1) inverts m.
        std::uint64_t phi = pp / p * (p - 1);
        minv = pow_mod(m % pp, phi - 1, pp);
    }
    std::uint64_t e = m * minv;
    return g.power(static_cast<long long>(e));
}

std::string format_cycles(const Permutation& g) {
    std::string out;
    std::vector<bool> seen(g.degree(), false);
    for (unsigned i = 0; i < g.degree(); ++i) {
        if (seen[i] || g(i) == i) {
            seen[i] = true;
            continue;
        }
        out += '(';
        unsigned j = i;
        bool first = true;
        do {
            if (!first) out += ',';
            out += std::to_string(j + 1);
            seen[j] = true;
            j = g(j);
            first = false;
        } while (j != i);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Permutation parse_cycles(const std::string& text, unsigned degree) {
    std::vector<unsigned> im(degree);
    std::iota(im.begin(), im.end(), 0u);
    std::vector<bool> used(degree, false);
    std::size_t pos = 0;
    if (text.empty()) throw ParseError("empty cycle string", 0);
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '('", pos);
        ++pos;
        std::vector<unsigned> cycle;
        if (pos < text.size() && text[pos] == ')') {
            ++pos;  // "()" = identity factor
            continue;
        }
        while (true) {
            std::size_t start = pos;
            unsigned long v = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
                ++pos;
            }
            if (pos == start) throw ParseError("expected a point number", pos);
            if (v == 0 || v > degree) throw ParseError("point out of range 1.." + std::to_string(degree), start);
            cycle.push_back(static_cast<unsigned>(v - 1));
            if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            throw ParseError("expected ',' or ')'", pos);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            unsigned from = cycle[k], to = cycle[(k + 1) % cycle.size()];
            if (used[from]) throw ParseError("point repeated across cycles", pos);
            used[from] = true;
            im[from] = to;
        }
    }
    return Permutation(std::move(im));
}

}  // namespace ppbase
