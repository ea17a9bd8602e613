#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "turanham/exact.hpp"
#include "turanham/oracle.hpp"

using namespace turanham;
namespace orc = turanham::oracle;

TEST_CASE("linear loop histograms for tiny diagrams") {
    const std::map<int, ExactInt> two_pairs{{0, 1}, {1, 1}, {2, 1}};
    CHECK(orc::enumerate_linear(2, 2) == two_pairs);

    // the ten ways to split six points into two triples, by loop count
    const std::map<int, ExactInt> two_triples{{0, 1}, {1, 2}, {2, 4}, {3, 2}, {4, 1}};
    CHECK(orc::enumerate_linear(3, 2) == two_triples);

    const std::map<int, ExactInt> empty{{0, 1}};
    CHECK(orc::enumerate_linear(2, 0) == empty);
}

TEST_CASE("histogram totals count every partition") {
    ExactInt total = 0;
    for (const auto& [k, count] : orc::enumerate_linear(2, 5)) {
        total += count;
    }
    CHECK(total == 945);  // 9!! pairings of 10 points
}

TEST_CASE("loopless chord diagrams") {
    CHECK(orc::enumerate_chord_loopless(2, 3) == 4);
    CHECK(orc::enumerate_chord_loopless(3, 3) == 22);
    CHECK(orc::enumerate_chord_loopless(2, 1) == 0);
    CHECK(orc::enumerate_chord_loopless(5, 1) == 0);
    CHECK(orc::enumerate_chord_loopless(2, 2) == 1);
}

TEST_CASE("rotation fixed points") {
    CHECK(orc::fixed_under_rotation(2, 3, 1) == 4);
    CHECK(orc::fixed_under_rotation(2, 3, 2) == 4);
    CHECK(orc::fixed_under_rotation(2, 3, 3) == 1);
    CHECK(orc::fixed_under_rotation(2, 3, 6) == 1);
    CHECK(orc::fixed_under_rotation(2, 2, 2) == 1);
    CHECK_THROWS_AS(orc::fixed_under_rotation(2, 3, 4), std::invalid_argument);
}

TEST_CASE("reflection fixed points") {
    CHECK(orc::fixed_under_reflection(2, 3, orc::Axis::edge) == 2);
    CHECK(orc::fixed_under_reflection(2, 3, orc::Axis::vertex) == 2);
    CHECK(orc::fixed_under_reflection(2, 2, orc::Axis::vertex) == 1);
    CHECK(orc::fixed_under_reflection(2, 2, orc::Axis::edge) == 1);
    CHECK(orc::fixed_under_reflection(3, 3, orc::Axis::vertex) == 4);
    CHECK_THROWS_AS(orc::fixed_under_reflection(3, 3, orc::Axis::edge), std::invalid_argument);
}

TEST_CASE("orbit counts") {
    CHECK(orc::orbit_count(2, 3, orc::Group::cyclic) == 2);
    CHECK(orc::orbit_count(2, 4, orc::Group::dihedral) == 7);
    CHECK(orc::orbit_count(3, 3, orc::Group::dihedral) == 4);
    CHECK(orc::orbit_count(2, 2, orc::Group::cyclic) == 1);
}

TEST_CASE("orbit counts agree with averaged fixed points") {
    for (int d = 2; d <= 5; ++d) {
        for (int n = 1; n * d <= 10; ++n) {
            const int points = n * d;
            ExactInt rotation_sum = 0;
            for (long long m : divisors(points)) {
                rotation_sum += totient(m) * orc::fixed_under_rotation(d, n, m);
            }
            CHECK(exact_div(rotation_sum, points) == orc::orbit_count(d, n, orc::Group::cyclic));

            ExactInt reflection_sum = 0;
            if (points % 2 == 0) {
                reflection_sum =
                    ExactInt(points / 2) * (orc::fixed_under_reflection(d, n, orc::Axis::edge) +
                                            orc::fixed_under_reflection(d, n, orc::Axis::vertex));
            } else {
                reflection_sum =
                    ExactInt(points) * orc::fixed_under_reflection(d, n, orc::Axis::vertex);
            }
            CHECK(exact_div(rotation_sum + reflection_sum, 2 * points) ==
                  orc::orbit_count(d, n, orc::Group::dihedral));
        }
    }
}

TEST_CASE("sector diagram counts for small parameters") {
    CHECK(orc::enumerate_m_linear(1, 2, 6, 0) == 5);
    CHECK(orc::enumerate_m_linear(3, 2, 0, 0) == 1);
    CHECK(orc::enumerate_m_linear(2, 2, 1, 0) == 1);

    // four points, two sectors: both {02,13} and {03,12} keep each sector
    // free of adjacent same-block pairs
    CHECK(orc::enumerate_m_linear(2, 2, 2, 0) == 2);
    CHECK(orc::enumerate_m_linear(2, 2, 2, 1) == 1);

    CHECK(orc::enumerate_m_linear(2, 2, 4, 0) == 17);
    CHECK(orc::enumerate_m_linear(2, 3, 3, 0) == 1);
    CHECK(orc::enumerate_m_linear(2, 3, 3, 1) == 2);
    CHECK(orc::enumerate_m_linear(2, 3, 3, 2) == 1);
    CHECK(orc::enumerate_m_linear(3, 2, 2, 0) == 2);

    // point count not divisible by the clique size: nothing to count
    CHECK(orc::enumerate_m_linear(2, 3, 2, 0) == 0);
}

TEST_CASE("Hamiltonian cycle backtracking") {
    CHECK(orc::hamiltonian_cycles_direct(2, 2) == 1);   // the 4-cycle
    CHECK(orc::hamiltonian_cycles_direct(2, 3) == 16);  // octahedron
    CHECK(orc::hamiltonian_cycles_direct(3, 2) == 6);
    CHECK(orc::hamiltonian_cycles_direct(1, 3) == 1);   // triangle
    CHECK(orc::hamiltonian_cycles_direct(2, 1) == 0);
}

TEST_CASE("cycle counts tie to loopless chord diagrams") {
    for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {2, 5}, {5, 2}, {3, 3}}) {
        const ExactInt cycles = orc::hamiltonian_cycles_direct(d, n);
        const ExactInt decorated =
            orc::enumerate_chord_loopless(d, n) * pow_int(factorial(d), n) * factorial(n);
        CHECK(cycles * 2 * n * d == decorated);
    }
}

TEST_CASE("size bounds are enforced") {
    CHECK_THROWS_AS(orc::enumerate_linear(2, 8), std::invalid_argument);
    CHECK_THROWS_AS(orc::orbit_count(2, 7, orc::Group::cyclic), std::invalid_argument);
    CHECK_THROWS_AS(orc::hamiltonian_cycles_direct(2, 6), std::invalid_argument);
    CHECK_THROWS_AS(orc::enumerate_m_linear(1, 2, 14, 0), std::invalid_argument);
}

TEST_CASE("the environment switch overrides the size bounds") {
    REQUIRE(setenv("TURANHAM_ORACLE_MAX_POINTS", "8", 1) == 0);
    CHECK_THROWS_AS(orc::enumerate_linear(2, 5), std::invalid_argument);
    CHECK(orc::enumerate_chord_loopless(2, 4) == 31);
    REQUIRE(setenv("TURANHAM_ORACLE_MAX_POINTS", "16", 1) == 0);
    CHECK(orc::enumerate_linear(2, 8).at(0) == 721315);
    REQUIRE(unsetenv("TURANHAM_ORACLE_MAX_POINTS") == 0);
    CHECK_THROWS_AS(orc::enumerate_linear(2, 8), std::invalid_argument);
}
