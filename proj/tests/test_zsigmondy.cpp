#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ppbase/reference.hpp"
#include "ppbase/zsigmondy.hpp"

using namespace ppbase;

namespace {

// Independent primitivity check: ord_r(x) == n via mpz powering.
bool order_is_n(std::uint64_t x, unsigned n, const mpz_class& r) {
    mpz_class acc = mpz_class(static_cast<unsigned long>(x)) % r;
    mpz_class base = acc;
    unsigned ord = 1;
    while (acc != 1) {
        acc = acc * base % r;
        ++ord;
        if (ord > n) return false;
    }
    return ord == n;
}

}  // namespace

TEST_CASE("cyclotomic values") {
    CHECK(cyclotomic_value(1, 2) == 1);
    CHECK(cyclotomic_value(2, 2) == 3);
    CHECK(cyclotomic_value(6, 2) == 3);
    CHECK(cyclotomic_value(4, 2) == 5);
    CHECK(cyclotomic_value(5, 2) == 31);
    CHECK(cyclotomic_value(2, 17) == 18);
    // product of cyclotomic values over divisors reconstructs x^n - 1
    for (std::uint64_t x : {2ull, 3ull, 10ull})
        for (unsigned n : {6u, 12u, 9u}) {
            mpz_class prod = 1, target;
            for (unsigned d = 1; d <= n; ++d)
                if (n % d == 0) prod *= cyclotomic_value(d, x);
            mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(x), n);
            target -= 1;
            CHECK(prod == target);
        }
}

TEST_CASE("primitive prime divisor examples") {
    CHECK(primitive_prime_divisors(2, 6).empty());
    CHECK(primitive_prime_divisors(2, 4) == std::vector<mpz_class>{5});
    CHECK(primitive_prime_divisors(2, 5) == std::vector<mpz_class>{31});
    CHECK(primitive_prime_divisors(17, 2) == std::vector<mpz_class>{3});
    CHECK(primitive_prime_divisors(2, 11) == std::vector<mpz_class>{23, 89});
    CHECK_THROWS_AS(primitive_prime_divisors(1, 4), Error);
    CHECK_THROWS_AS(primitive_prime_divisors(4, 1), Error);
}

TEST_CASE("large ppd examples") {
    CHECK(!large_ppd(2, 4).has_value());
    CHECK(!large_ppd(5, 2).has_value());
    CHECK(large_ppd(17, 2) == mpz_class(3));  // 3^2 divides 288
    CHECK(large_ppd(2, 5) == mpz_class(31));
    CHECK(!large_ppd(2, 6).has_value());
    CHECK(large_ppd(4, 2) == mpz_class(5));
}

TEST_CASE("every returned prime is primitive") {
    for (std::uint64_t x = 2; x <= 12; ++x)
        for (unsigned n = 2; n <= 10; ++n)
            for (const auto& r : primitive_prime_divisors(x, n)) {
                CAPTURE(x);
                CAPTURE(n);
                CHECK(order_is_n(x, n, r));
            }
}

TEST_CASE("factorization-free decisions match the factoring route") {
    for (std::uint64_t x = 2; x <= 14; ++x)
        for (unsigned n = 2; n <= 10; ++n) {
            CAPTURE(x);
            CAPTURE(n);
            CHECK(has_primitive_ppd(x, n) == !primitive_prime_divisors(x, n).empty());
            CHECK(has_large_ppd(x, n) == large_ppd(x, n).has_value());
        }
}

TEST_CASE("zsigmondy exceptions over a grid") {
    for (std::uint64_t x = 2; x <= 40; ++x)
        for (unsigned n = 2; n <= 16; ++n) {
            bool empty = !has_primitive_ppd(x, n);
            bool known = (n == 6 && x == 2) || (n == 2 && ((x + 1) & x) == 0);
            CAPTURE(x);
            CAPTURE(n);
            CHECK(empty == known);
        }
}

TEST_CASE("feit scan matches the reference implementation on a small range") {
    auto fast = feit_scan(16, 9, true);
    auto slow = ref::feit_scan_serial(16, 9);
    CHECK(fast == slow);
    auto serial = feit_scan(16, 9, false);
    CHECK(fast == serial);
}

TEST_CASE("feit scan contains the documented exceptions") {
    auto scan = feit_scan(10, 20);
    std::set<std::pair<std::uint64_t, unsigned>> got(scan.begin(), scan.end());
    for (auto [x, n] : {std::pair<std::uint64_t, unsigned>{2, 6}, {2, 10}, {2, 12}, {2, 18},
                        {3, 4}, {3, 6}, {5, 6}, {2, 4}})
        CHECK(got.count({x, n}) == 1);
    CHECK(got.count({3, 2}) == 1);  // 3 = 2^2 * 3^0 - 1
    CHECK(got.count({2, 5}) == 0);  // 31 is large
    CHECK(got.count({2, 2}) == 1);  // 2 = 2^0 * 3 - 1 (s=0, t=1)
}

TEST_CASE("ppd_report tags") {
    CHECK(*ppd_report(2, 6).exception_class == "Zsigmondy-26");
    CHECK(*ppd_report(7, 2).exception_class == "Zsigmondy-n2");
    CHECK(*ppd_report(2, 4).exception_class == "Feit-2");
    CHECK(*ppd_report(5, 2).exception_class == "Feit-1");
    CHECK(*ppd_report(3, 6).exception_class == "Feit-3");
    CHECK(*ppd_report(5, 6).exception_class == "Feit-4");
    CHECK(!ppd_report(2, 5).exception_class.has_value());
    CHECK(ppd_report(2, 5).large == mpz_class(31));
}

TEST_CASE("factor_mpz") {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, 64);
    big += 1;  // 2^64+1 = 274177 * 67280421310721
    auto f = factor_mpz(big);
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == 274177);
    CHECK(f[0].second == 1);
    CHECK(f[1].first == mpz_class("67280421310721"));
    auto g = factor_mpz(mpz_class(720));
    REQUIRE(g.size() == 3);
    CHECK(g[0] == std::pair<mpz_class, unsigned>{2, 4});
    CHECK(g[1] == std::pair<mpz_class, unsigned>{3, 2});
    CHECK(g[2] == std::pair<mpz_class, unsigned>{5, 1});
}
