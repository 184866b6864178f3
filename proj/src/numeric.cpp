#include "ppbase/numeric.hpp"

#include "ppbase/error.hpp"

namespace ppbase {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    return factorize(n).size() == 1;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in group order");
    return r;
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, b = x % m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t m) {
    std::uint64_t v = x % m, acc = v, ord = 1;
    while (acc != 1) {
        acc = static_cast<std::uint64_t>((unsigned __int128)acc * v % m);
        ++ord;
        if (ord > m) throw Error("multiplicative_order: x not invertible mod m");
    }
    return ord;
}

}  // namespace ppbase
