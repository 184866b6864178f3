#include "ppbase/zsigmondy.hpp"

#include <algorithm>
#include <map>

#include "ppbase/error.hpp"
#include "ppbase/numeric.hpp"

namespace ppbase {

namespace {

void check_args(std::uint64_t x, unsigned n) {
    if (x < 2 || n < 2) throw Error("x and n must both be at least 2");
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// Primitive part of x^n - 1: the cyclotomic value with every prime dividing n
// stripped. Its prime divisors are exactly the primitive prime divisors, with
// the same multiplicities they have in x^n - 1.
mpz_class primitive_part(std::uint64_t x, unsigned n) {
    mpz_class c = cyclotomic_value(n, x);
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        mpz_class pz = static_cast<unsigned long>(p);
        while (mpz_divisible_p(c.get_mpz_t(), pz.get_mpz_t())) c /= pz;
    }
    return c;
}

void rho_factor(const mpz_class& value, std::map<mpz_class, unsigned>& out);

void emit_factor(const mpz_class& f, unsigned count, std::map<mpz_class, unsigned>& out) {
    if (mpz_probab_prime_p(f.get_mpz_t(), 40)) {
        out[f] += count;
        return;
    }
    for (unsigned i = 0; i < count; ++i) rho_factor(f, out);
}

// Pollard rho (Brent variant) on odd composite input.
void rho_factor(const mpz_class& value, std::map<mpz_class, unsigned>& out) {
    mpz_class n = value;
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out[n] += 1;
        return;
    }
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;  // cycle; retry with another constant
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) {
            emit_factor(d, 1, out);
            emit_factor(n / d, 1, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_mpz(const mpz_class& value) {
    if (value <= 0) throw Error("factor_mpz: positive input required");
    std::map<mpz_class, unsigned> acc;
    mpz_class m = value;
    for (std::uint64_t d = 2; d < 1'000'000 && mpz_cmp_ui(m.get_mpz_t(), 1) > 0;
         d += (d == 2 ? 1 : 2)) {
        if (d * d > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d))) {
            acc[mpz_class(static_cast<unsigned long>(d))] += 1;
            m /= static_cast<unsigned long>(d);
        }
    }
    if (m > 1) emit_factor(m, 1, acc);
    std::vector<std::pair<mpz_class, unsigned>> out(acc.begin(), acc.end());
    return out;
}

mpz_class cyclotomic_value(unsigned n, std::uint64_t x) {
    // Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x)
    std::map<unsigned, mpz_class> memo;
    auto rec = [&](auto&& self, unsigned k) -> mpz_class {
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(x), k);
        v -= 1;
        for (unsigned d : divisors(k))
            if (d < k) {
                mpz_class phi = self(self, d);
                if (!mpz_divisible_p(v.get_mpz_t(), phi.get_mpz_t()))
                    throw Error("cyclotomic division failed (impossible)");
                v /= phi;
            }
        memo.emplace(k, v);
        return v;
    };
    return rec(rec, n);
}

std::vector<mpz_class> primitive_prime_divisors(std::uint64_t x, unsigned n) {
    check_args(x, n);
    mpz_class c = primitive_part(x, n);
    std::vector<mpz_class> out;
    if (c == 1) return out;
    for (const auto& [r, e] : factor_mpz(c)) {
        (void)e;
        out.push_back(r);
    }
    return out;
}

std::optional<mpz_class> large_ppd(std::uint64_t x, unsigned n) {
    check_args(x, n);
    mpz_class c = primitive_part(x, n);
    if (c == 1) return std::nullopt;
    for (const auto& [r, e] : factor_mpz(c))
        if (r > n + 1 || e >= 2) return r;
    return std::nullopt;
}

bool has_primitive_ppd(std::uint64_t x, unsigned n) {
    check_args(x, n);
    return primitive_part(x, n) > 1;
}

bool has_large_ppd(std::uint64_t x, unsigned n) {
    check_args(x, n);
    mpz_class c = primitive_part(x, n);
    if (c == 1) return false;
    // Primitive primes are = 1 mod n, so no large one exists exactly when the
    // whole primitive part is the single prime n + 1.
    return c != n + 1;
}

std::optional<int> feit_case(std::uint64_t x, unsigned n) {
    if (n == 2) {
        std::uint64_t y = x + 1;  // = 2^s 3^t
        unsigned s = 0, t = 0;
        while (y % 2 == 0) {
            y /= 2;
            ++s;
        }
        if (y % 3 == 0) {
            y /= 3;
            t = 1;
        }
        if (y == 1 && (t == 1 || s >= 2)) return 1;
    }
    if (x == 2 && (n == 4 || n == 6 || n == 10 || n == 12 || n == 18)) return 2;
    if (x == 3 && (n == 4 || n == 6)) return 3;
    if (x == 5 && n == 6) return 4;
    return std::nullopt;
}

PpdReport ppd_report(std::uint64_t x, unsigned n) {
    check_args(x, n);
    PpdReport rep;
    rep.x = x;
    rep.n = n;
    rep.ppds = primitive_prime_divisors(x, n);
    rep.large = large_ppd(x, n);
    if (rep.ppds.empty()) {
        if (x == 2 && n == 6)
            rep.exception_class = "Zsigmondy-26";
        else if (n == 2)
            rep.exception_class = "Zsigmondy-n2";
        else
            throw Error("primitive prime divisors missing outside the known exceptions");
    } else if (!rep.large) {
        auto c = feit_case(x, n);
        if (!c) throw Error("no large ppd outside the known exception list");
        rep.exception_class = "Feit-" + std::to_string(*c);
    }
    return rep;
}

std::vector<std::pair<std::uint64_t, unsigned>> feit_scan(std::uint64_t x_max, unsigned n_max,
                                                          bool parallel) {
    if (x_max < 2 || n_max < 2) throw Error("scan bounds must be at least 2");
    std::vector<std::pair<std::uint64_t, unsigned>> grid;
    for (std::uint64_t x = 2; x <= x_max; ++x)
        for (unsigned n = 2; n <= n_max; ++n) grid.emplace_back(x, n);
    std::vector<char> hit(grid.size(), 0);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long long i = 0; i < static_cast<long long>(grid.size()); ++i) {
        const auto& [x, n] = grid[static_cast<std::size_t>(i)];
        hit[static_cast<std::size_t>(i)] = !has_large_ppd(x, n);
    }
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (hit[i]) out.push_back(grid[i]);
    return out;
}

}  // namespace ppbase
