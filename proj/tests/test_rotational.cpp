#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "turanham/labelled.hpp"
#include "turanham/oracle.hpp"
#include "turanham/rotational.hpp"

using namespace turanham;
namespace orc = turanham::oracle;

TEST_CASE("insertion tables start at one") {
    for (long long cliques : {1, 2, 3}) {
        for (long long base : {0, 3, 7}) {
            QTable q(QContext{cliques, base, 0, 0}, 4);
            CHECK(q.at(0, 0) == 1);
            CHECK(q.at(1, 0) == 0);
            CHECK(q.at(-1, 2) == 0);
            CHECK(q.at(3, 2) == 0);
        }
    }
}

TEST_CASE("one-point insertion into an empty sector pair") {
    QTable q(QContext{2, 0, 0, 0}, 1);
    CHECK(q.at(0, 1) == 2);
}

TEST_CASE("single-clique insertions reduce to falling factorials") {
    // with one clique nothing can remove a loop, and the loop-free row
    // becomes (base+1-k)(base-k)... step by step
    for (long long base : {4, 7}) {
        for (long long loops : {0, 2}) {
            QTable q(QContext{1, base, loops, 0}, 5);
            ExactInt expected = 1;
            for (long long j = 1; j <= 5; ++j) {
                expected *= base + 2 - j - loops;
                CHECK(q.at(0, j) == expected);
            }
        }
    }
}

TEST_CASE("end-point corrections expand as stated") {
    QTable q(QContext{2, 3, 1, 0}, 3);
    const auto q0 = q.zero_loop_row();
    CHECK(p_tilde(0, q0) == q0[0]);
    CHECK(p_tilde(1, q0) == q0[1] - 2 * q0[0]);
    CHECK(p_hat(0, q0) == 1);
    CHECK(p_hat(1, q0) == q0[1] - q0[0]);
}

TEST_CASE("sector tables match exhaustive enumeration everywhere they can") {
    SectorTableCache cache;
    for (int m = 1; m <= 12; ++m) {
        for (int v = 0; m * v <= 12; ++v) {
            for (int d = 2; d <= 6; ++d) {
                if ((m * v) % d != 0) {
                    continue;
                }
                SectorTable& table = cache.get(m, d);
                for (int k = 0; k <= v; ++k) {
                    CAPTURE(m);
                    CAPTURE(d);
                    CAPTURE(v);
                    CAPTURE(k);
                    CHECK(table.get(v, k) == orc::enumerate_m_linear(m, d, v, k));
                }
            }
        }
    }
}

TEST_CASE("sector table spot values") {
    SectorTableCache cache;
    CHECK(cache.get(1, 2).get(6, 0) == 5);
    CHECK(cache.get(2, 2).get(2, 0) == 2);
    CHECK(cache.get(2, 2).get(4, 0) == 17);
    CHECK(cache.get(2, 3).get(3, 0) == 1);
    CHECK(cache.get(4, 2).get(0, 0) == 1);
    CHECK(cache.get(2, 2).get(-1, 0) == 0);
    CHECK(cache.get(2, 2).get(3, 5) == 0);
}

TEST_CASE("one-sector tables reduce to the linear triangle") {
    SectorTableCache cache;
    for (int d = 2; d <= 4; ++d) {
        const LabelledTriangle tri = build_triangle(d, 5);
        SectorTable& table = cache.get(1, d);
        for (int n = 0; n <= 5; ++n) {
            for (long long k = 0; k <= static_cast<long long>(n) * (d - 1); ++k) {
                CHECK(table.get(static_cast<long long>(n) * d, k) == tri.at(n, k));
            }
        }
        // lengths that cannot be tiled by cliques carry no diagrams
        CHECK(table.get(d + 1, 0) == 0);
    }
}

TEST_CASE("rotation fixed points: worked six-point cases") {
    SectorTableCache cache;
    CHECK(fixed_points(2, 3, 1, cache.get(1, 2)) == 4);
    CHECK(fixed_points(2, 3, 2, cache.get(2, 2)) == 4);
    CHECK(fixed_points(2, 3, 3, cache.get(3, 2)) == 1);
    CHECK(fixed_points(2, 3, 6, cache.get(6, 2)) == 1);
    CHECK_THROWS_AS(fixed_points(2, 3, 4, cache.get(4, 2)), std::invalid_argument);
    CHECK_THROWS_AS(fixed_points(2, 3, 2, cache.get(2, 3)), std::invalid_argument);
}

TEST_CASE("rotation fixed points match the exhaustive count") {
    SectorTableCache cache;
    for (int d = 2; d <= 6; ++d) {
        for (int n = 1; n * d <= 12; ++n) {
            for (long long m : divisors(static_cast<long long>(d) * n)) {
                CAPTURE(d);
                CAPTURE(n);
                CAPTURE(m);
                CHECK(fixed_points(d, n, m, cache.get(static_cast<int>(m), d)) ==
                      orc::fixed_under_rotation(d, n, m));
            }
        }
    }
}

TEST_CASE("the identity rotation fixes every loopless chord diagram") {
    SectorTableCache cache;
    for (int d = 2; d <= 6; ++d) {
        const LabelledTriangle tri = build_triangle(d, 8);
        for (int n = 1; n <= 8; ++n) {
            CHECK(fixed_points(d, n, 1, cache.get(1, d)) == b_labelled(d, n, tri));
        }
    }
}

TEST_CASE("class counts under rotation") {
    SectorTableCache cache;
    CHECK(b_rotational(2, 1, cache) == 0);
    CHECK(b_rotational(2, 5, cache) == 36);
    CHECK(b_rotational(3, 4, cache) == 126);
    CHECK(b_rotational(6, 3, cache) == 335);
}

TEST_CASE("class counts match exhaustive orbit counting") {
    SectorTableCache cache;
    for (int d = 2; d <= 5; ++d) {
        for (int n = 1; n * d <= 10; ++n) {
            CHECK(b_rotational(d, n, cache) == orc::orbit_count(d, n, orc::Group::cyclic));
        }
    }
}

TEST_CASE("fix sums divide by the group order and counts are ordered") {
    SectorTableCache cache;
    for (int d = 2; d <= 6; ++d) {
        const LabelledTriangle tri = build_triangle(d, 8);
        for (int n = 1; n <= 8; ++n) {
            const ExactInt sum = rotation_fix_sum(d, n, cache);
            CHECK(sum % (static_cast<long long>(d) * n) == 0);
            const ExactInt rotations = b_rotational(d, n, cache);
            const ExactInt labelled = b_labelled(d, n, tri);
            CHECK(rotations <= labelled);
            CHECK(labelled <= static_cast<long long>(d) * n * rotations);
        }
    }
}
