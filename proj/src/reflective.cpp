#include "turanham/reflective.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace turanham {

namespace {

void require_args(int d, int n, const SectorTable& two_sector) {
    if (d < 2 || n < 1) {
        throw std::invalid_argument("reflection counts need d >= 2 and n >= 1");
    }
    if (two_sector.sectors() != 2 || two_sector.part_size() != d) {
        throw std::invalid_argument("reflection counts need the (2, d) sector table");
    }
}

// Ways to re-insert two cliques that each hold one constrained point (a cut
// edge for the no-point axis, an axis point for the two-point axis), summed
// over loops created (j) and destroyed (s) by the first clique. half is the
// per-sector interior size of one clique: d/2-1 for even d, (d-1)/2 for odd.
ExactInt paired_insertion(int d, int n, long long k, long long half) {
    ExactInt sum = 0;
    for (long long j = 0; j <= half; ++j) {
        for (long long s = 0; s <= std::min(k, half - j); ++s) {
            const long long kappa = k + j - s;
            sum += binom(half, j) * binom(k, s) *
                   binom(static_cast<long long>(d) * (n - 2) / 2 - k, half - j - s) *
                   binom((static_cast<long long>(d) * (n - 1) - 1) / 2 - kappa, half - kappa);
        }
    }
    return sum;
}

}  // namespace

ExactInt h0(int d, int n, SectorTable& two_sector) {
    require_args(d, n, two_sector);
    const long long points = static_cast<long long>(d) * n;
    if (points % 2 != 0) {
        return 0;
    }
    if (n == 1) {
        return 0;  // a lone clique always carries loops
    }
    if (d % 2 != 0) {
        // no clique maps to itself under a point-free axis when d is odd, so
        // halving the diagram is a clean bijection
        return two_sector.get(points / 2, 0);
    }
    const long long half = d / 2 - 1;
    ExactInt result = two_sector.get(points / 2, 0);
    for (long long k = 0; k <= half; ++k) {
        // one cut edge inside a clique, either end of the sector
        const ExactInt alpha1 =
            binom(static_cast<long long>(d) * (n - 1) / 2 - 1 - k, half - k);
        result -= 2 * alpha1 * two_sector.get(static_cast<long long>(d) * (n - 1) / 2, k);
    }
    for (long long k = 0; k <= d - 2; ++k) {
        // both cut edges present, in two different cliques
        result += paired_insertion(d, n, k, half) *
                  two_sector.get(static_cast<long long>(d) * (n - 2) / 2, k);
    }
    for (long long k = 0; k <= half - 1; ++k) {
        // both cut edges inside one clique
        const ExactInt alpha3 =
            binom(static_cast<long long>(d) * (n - 1) / 2 - 1 - k, half - 1 - k);
        result -= alpha3 * two_sector.get(static_cast<long long>(d) * (n - 1) / 2, k);
    }
    if (result < 0) {
        throw std::domain_error("h0 negative at d=" + std::to_string(d) +
                                ", n=" + std::to_string(n));
    }
    return result;
}

ExactInt h1(int d, int n, SectorTable& two_sector) {
    require_args(d, n, two_sector);
    if (d % 2 == 0 || n % 2 == 0) {
        return 0;  // a single on-axis point needs d and n both odd
    }
    const long long half = (d - 1) / 2;
    ExactInt sum = 0;
    for (long long k = 0; k <= half; ++k) {
        sum += binom(static_cast<long long>(d) * (n - 1) / 2 - 1 - k, half - k) *
               two_sector.get(static_cast<long long>(d) * (n - 1) / 2, k);
    }
    return sum;
}

ExactInt h2(int d, int n, SectorTable& two_sector) {
    require_args(d, n, two_sector);
    const long long points = static_cast<long long>(d) * n;
    if (points % 2 != 0) {
        return 0;
    }
    if (n == 1) {
        return 0;
    }
    ExactInt sum = 0;
    if (d % 2 == 0) {
        // both axis points lie in the same clique
        const long long half = d / 2 - 1;
        for (long long k = 0; k <= half; ++k) {
            sum += binom(static_cast<long long>(d) * (n - 1) / 2 - 1 - k, half - k) *
                   two_sector.get(static_cast<long long>(d) * (n - 1) / 2, k);
        }
    } else {
        // odd d: each axis point sits in its own clique, n must be even
        if (n % 2 != 0) {
            return 0;
        }
        for (long long k = 0; k <= d - 1; ++k) {
            sum += paired_insertion(d, n, k, (d - 1) / 2) *
                   two_sector.get(static_cast<long long>(d) * (n - 2) / 2, k);
        }
    }
    return sum;
}

ExactInt b_dihedral(int d, int n, SectorTableCache& cache, DihedralWeights weights) {
    if (d < 2 || n < 1) {
        throw std::invalid_argument("b_dihedral: need n >= 1 and d >= 2");
    }
    const long long points = static_cast<long long>(d) * n;
    SectorTable& two_sector = cache.get(2, d);
    const ExactInt rotations = rotation_fix_sum(d, n, cache);
    ExactInt reflections;
    if (weights == DihedralWeights::printed) {
        reflections = points * (h0(d, n, two_sector) + 2 * h1(d, n, two_sector) +
                                h2(d, n, two_sector));
    } else if (points % 2 == 0) {
        // points/2 axes through two points, points/2 through none
        reflections = (points / 2) * (h0(d, n, two_sector) + h2(d, n, two_sector));
    } else {
        // every axis passes through exactly one point
        reflections = points * h1(d, n, two_sector);
    }
    const ExactInt result = exact_div(rotations + reflections, 2 * points);
    if (result < 0) {
        throw std::domain_error("b_dihedral negative at d=" + std::to_string(d) +
                                ", n=" + std::to_string(n));
    }
    return result;
}

}  // namespace turanham
