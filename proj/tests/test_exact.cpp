#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <vector>

#include "turanham/exact.hpp"

using namespace turanham;

TEST_CASE("binomials follow the zero convention") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, -1) == 0);
    CHECK(binom(-1, 0) == 0);
    CHECK(binom(-3, 2) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(4, 7) == 0);
    CHECK(binom(60, 30) == ExactInt("118264581564861424"));
}

TEST_CASE("Pascal rule holds across the table") {
    for (long long a = 1; a <= 60; ++a) {
        for (long long b = 0; b <= a; ++b) {
            CHECK(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b));
        }
    }
}

TEST_CASE("multichoose matches its binomial forms") {
    for (int d = 2; d <= 12; ++d) {
        for (int k = 0; k <= d - 1; ++k) {
            CHECK(multichoose(d - k, k) == binom(d - 1, k));
        }
        for (int r = 1; r <= d - 1; ++r) {
            CHECK(multichoose(r, d - r) == binom(d - 1, r - 1));
        }
    }
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("exact division is loud") {
    CHECK(exact_div(ExactInt(84), ExactInt(7)) == 12);
    CHECK(exact_div(ExactInt(-84), ExactInt(7)) == -12);
    CHECK_THROWS_AS(exact_div(ExactInt(85), ExactInt(7)), std::domain_error);
    CHECK_THROWS_AS(exact_div(ExactInt(1), ExactInt(0)), std::domain_error);
}

TEST_CASE("totient and divisors") {
    CHECK(totient(1) == 1);
    CHECK(totient(6) == 2);
    CHECK(totient(12) == 4);
    CHECK_THROWS_AS(totient(0), std::invalid_argument);

    CHECK(divisors(1) == std::vector<long long>{1});
    CHECK(divisors(6) == std::vector<long long>{1, 2, 3, 6});
    CHECK(divisors(9) == std::vector<long long>{1, 3, 9});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("totient and divisors agree with direct checks up to 10^4") {
    // smallest-prime-factor sieve as the independent reference
    const int limit = 10000;
    std::vector<int> spf(limit + 1, 0);
    for (int i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (int j = i; j <= limit; j += i) {
                if (spf[j] == 0) spf[j] = i;
            }
        }
    }
    for (int m = 1; m <= limit; ++m) {
        long long phi = 1;
        int rest = m;
        while (rest > 1) {
            const int p = spf[rest];
            long long pk = 1;
            while (rest % p == 0) {
                rest /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        CHECK(totient(m) == phi);

        const auto divs = divisors(m);
        CHECK(std::is_sorted(divs.begin(), divs.end()));
        long long count = 0;
        for (int q = 1; q <= m; ++q) {
            count += m % q == 0;
        }
        CHECK(static_cast<long long>(divs.size()) == count);
        for (long long q : divs) {
            CHECK(m % q == 0);
        }
    }
    // spot-check the totient against a gcd count on a smaller range
    for (int m = 1; m <= 500; ++m) {
        long long coprime = 0;
        for (int i = 1; i <= m; ++i) {
            coprime += std::gcd(i, m) == 1;
        }
        CHECK(totient(m) == coprime);
    }
}

TEST_CASE("loop partitions: worked cases") {
    const auto single = loop_partitions(2, 3, 2);
    REQUIRE(single.size() == 1);
    CHECK(single[0].r == std::vector<int>{2, 2});

    CHECK(loop_partitions(1, 4, 2).empty());

    const auto pair = loop_partitions(3, 5, 2);
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].r == std::vector<int>{3, 4});
    CHECK(pair[1].r == std::vector<int>{4, 4, 4});
}

TEST_CASE("loop partitions: complete, duplicate-free and well-formed") {
    for (int d = 2; d <= 6; ++d) {
        for (int k = 1; k <= 8; ++k) {
            const auto parts = loop_partitions(k, d, 1);
            std::set<std::vector<int>> seen;
            for (const auto& part : parts) {
                CHECK(std::is_sorted(part.r.begin(), part.r.end()));
                int sum = 0;
                for (int r : part.r) {
                    CHECK(r >= 1);
                    CHECK(r <= d - 1);
                    sum += d - r;
                }
                CHECK(sum == k);
                CHECK(seen.insert(part.r).second);
            }
            // independent reference: odometer over ordered tuples, collected
            // as sorted multisets
            std::set<std::vector<int>> expected;
            for (int l = 1; l <= k; ++l) {
                std::vector<int> tuple(static_cast<std::size_t>(l), 1);
                while (true) {
                    int sum = 0;
                    for (int r : tuple) sum += d - r;
                    if (sum == k) {
                        std::vector<int> sorted = tuple;
                        std::sort(sorted.begin(), sorted.end());
                        expected.insert(sorted);
                    }
                    int pos = l - 1;
                    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == d - 1) {
                        tuple[static_cast<std::size_t>(pos)] = 1;
                        --pos;
                    }
                    if (pos < 0) break;
                    ++tuple[static_cast<std::size_t>(pos)];
                }
            }
            CHECK(seen == expected);
        }
    }
}

TEST_CASE("loop partitions stay tractable at the largest supported sizes") {
    for (int d = 2; d <= 12; ++d) {
        for (int k = 1; k <= 11; ++k) {
            const auto parts = loop_partitions(k, d, 1);
            for (const auto& part : parts) {
                int sum = 0;
                for (int r : part.r) sum += d - r;
                CHECK(sum == k);
            }
        }
    }
}
