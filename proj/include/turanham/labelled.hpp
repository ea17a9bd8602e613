#pragma once

#include <vector>

#include "turanham/exact.hpp"

namespace turanham {

// Which form of the end-chord correction to use when assembling chord counts
// from the linear triangle. The d=3 shortcut with a plus sign on the second
// correction term is wrong (it yields 26 instead of 22 at d=3, n=3); it is
// kept only so the verifier can demonstrate that. See docs/errata.md.
enum class ChordFormula {
    general,     // correct for every d
    printed_d3,  // known-bad d=3 variant, test use only
};

// Memoized triangle of linear-diagram counts for one clique size d: entry
// (n, k) is the number of diagrams on n*d points in n cliques of d points
// with exactly k adjacent same-clique pairs ("loops"), adjacency on a line.
class LabelledTriangle {
  public:
    explicit LabelledTriangle(int d);

    // Builds rows up to n_max inclusive. Every completed row is checked
    // against the closed-form total of all partitions into d-point cliques;
    // a mismatch throws (internal consistency failure).
    void extend(int n_max);

    int part_size() const { return d_; }
    int max_row() const { return static_cast<int>(rows_.size()) - 1; }

    // a_{n,k}; zero outside 0 <= n <= max_row(), 0 <= k <= n(d-1).
    const ExactInt& at(long long n, long long k) const;

    // Full row n, k = 0..n(d-1).
    const std::vector<ExactInt>& row(int n) const;

    // Restores a precomputed row (cache load); the row-sum check still runs.
    void restore_row(int n, std::vector<ExactInt> row);

  private:
    void append_row();
    void check_row_sum(int n) const;

    int d_;
    std::vector<std::vector<ExactInt>> rows_;
};

// Coefficient of a_{n-1,t} in the row recurrence for a_{n,k}: the number of
// ways to re-attach a clique K_d holding the rightmost point so that i of its
// point pairs become loops, t+i-k old loops are destroyed and the remaining
// points land on free positions, summed over i.
ExactInt c_coeff(long long n, long long k, long long t, int d);

LabelledTriangle build_triangle(int d, int n_max);

// Loopless chord-diagram count b_n: loopless linear diagrams minus those
// whose end points are joined by a clique.
ExactInt b_labelled(int d, int n, const LabelledTriangle& triangle,
                    ChordFormula formula = ChordFormula::general);

// Low-k band (k <= d-1) of the triangle. Built either from the closed per-d
// recurrences (d = 2 and d = 3 only, a verification path) or by mirroring a
// full triangle.
class ClosedSystemState {
  public:
    int part_size() const { return d_; }
    int max_row() const { return static_cast<int>(rows_.size()) - 1; }

    // a_{n,k} for 0 <= k <= d-1; zero outside.
    const ExactInt& at(long long n, long long k) const;

    static ClosedSystemState from_recurrences(int d, int n_max);
    static ClosedSystemState from_triangle(const LabelledTriangle& triangle, int n_max);

  private:
    ClosedSystemState(int d, std::vector<std::vector<ExactInt>> rows);

    int d_;
    std::vector<std::vector<ExactInt>> rows_;
};

ClosedSystemState closed_system_d2_d3(int d, int n_max);

// a_{n,0} from row n-1 of the low-k band.
ExactInt closed_a_n0(int d, int n, const ClosedSystemState& state);

// Count of linear diagrams whose k loops (1 <= k <= d-1) all belong to one
// clique.
ExactInt closed_a_nk_single_owner(int d, int n, int k, const ClosedSystemState& state);

// Count of linear diagrams whose k loops (2 <= k <= d-1) are spread over two
// or more cliques. Values a_{n-l,m} with m >= d come from the triangle.
ExactInt closed_a_nk_multi_owner(int d, int n, int k, const ClosedSystemState& state,
                                 const LabelledTriangle& triangle);

// Recovers a_{n-1,k+d-1} from row n and the lower part of row n-1 by solving
// the row recurrence for its topmost term. Exact division; a zero divisor or
// nonzero remainder throws with the indices involved.
ExactInt eliminate_high_k(int d, int n, int k, const LabelledTriangle& triangle);

}  // namespace turanham
