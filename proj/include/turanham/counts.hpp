#pragma once

#include <map>

#include "turanham/exact.hpp"
#include "turanham/labelled.hpp"
#include "turanham/reflective.hpp"
#include "turanham/rotational.hpp"

namespace turanham {

// One result row: all four counts for a clique size d and clique count n.
struct CountsRecord {
    int d = 0;
    int n = 0;
    ExactInt linear;          // loopless linear diagrams
    ExactInt labelled;        // loopless chord diagrams
    ExactInt rotations;       // classes under the cyclic group
    ExactInt all_symmetries;  // classes under the dihedral group

    friend bool operator==(const CountsRecord&, const CountsRecord&) = default;
};

// Formula variants, defaulting to the corrected forms. The others exist so
// the verifier can show they break; see docs/errata.md.
struct Corrections {
    ChordFormula chord = ChordFormula::general;
    DihedralWeights dihedral = DihedralWeights::standard;
};

// Memoizes the linear triangles and sector tables across queries. One engine
// per command; completed tables are only grown, never mutated.
class CountingEngine {
  public:
    explicit CountingEngine(Corrections corrections = {});

    ExactInt linear(int d, int n);
    ExactInt labelled(int d, int n);
    ExactInt rotations(int d, int n);
    ExactInt all_symmetries(int d, int n);
    CountsRecord record(int d, int n);

    LabelledTriangle& triangle(int d, int rows_needed);
    SectorTableCache& sectors() { return sectors_; }
    std::map<int, LabelledTriangle>& triangles() { return triangles_; }
    const Corrections& corrections() const { return corrections_; }

  private:
    static void validate(int d, int n);

    Corrections corrections_;
    std::map<int, LabelledTriangle> triangles_;
    SectorTableCache sectors_;
};

}  // namespace turanham
