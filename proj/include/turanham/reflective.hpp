#pragma once

#include "turanham/exact.hpp"
#include "turanham/rotational.hpp"

namespace turanham {

// How the reflection fixed-point counts enter the dihedral average. The
// naive (h0 + 2*h1 + h2)/2 combination of per-axis counts is wrong — at
// d=2, n=2 it yields 3/2 against a true class count of 1 — and is kept only
// so the verifier can demonstrate that. See docs/errata.md.
enum class DihedralWeights {
    standard,  // (h0+h2)/4 for even point counts, h1/2 for odd
    printed,   // known-bad variant, test use only
};

// Loopless diagrams fixed by one reflection whose axis passes between
// points (0 of them on the axis). Zero when d*n is odd. two_sector must be
// the (2, d) sector table.
ExactInt h0(int d, int n, SectorTable& two_sector);

// Axis through exactly one point; nonzero only when both d and n are odd.
ExactInt h1(int d, int n, SectorTable& two_sector);

// Axis through two antipodal points. Zero when d*n is odd.
ExactInt h2(int d, int n, SectorTable& two_sector);

// Loopless chord diagrams up to rotations and reflections.
ExactInt b_dihedral(int d, int n, SectorTableCache& cache,
                    DihedralWeights weights = DihedralWeights::standard);

}  // namespace turanham
