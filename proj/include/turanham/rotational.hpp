#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "turanham/exact.hpp"
#include "turanham/labelled.hpp"

namespace turanham {

// Parameters of one point-insertion process. Loops of the base diagram split
// two ways: filled loops hold one already-inserted clique point (a point next
// to it with the same clique makes a new loop), kept loops must survive
// intact, so the single position inside each is off limits for every clique
// choice. Each call site builds its own context; contexts are never shared.
struct QContext {
    long long cliques;       // number of cliques being threaded in
    long long base_len;      // points per sector before the insertions
    long long filled_loops;  // base loops destroyed by an inserted point
    long long kept_loops;    // base loops that survive into the result
};

// q_{k~,j}: ways to insert j points one by one so that exactly k~ extra loops
// remain. Entries vanish for k~ < 0 or k~ > j.
class QTable {
  public:
    QTable(const QContext& context, int j_max);

    const ExactInt& at(long long ktilde, long long j) const;
    int max_insertions() const { return static_cast<int>(columns_.size()) - 1; }

    // Row k~ = 0, the loop-free insertion counts feeding the end-point
    // inclusion-exclusion sums.
    std::vector<ExactInt> zero_loop_row() const;

  private:
    QContext context_;
    std::vector<std::vector<ExactInt>> columns_;  // columns_[j][ktilde]
};

// Loopless insertion sequences with both sector ends adjusted by
// inclusion-exclusion over same-clique points stacked at either end. Signed;
// callers divide by v~! exactly.
ExactInt p_tilde(int v_tilde, const std::vector<ExactInt>& q0);

// Single-ended analogue (only the leading end of each sector is constrained).
ExactInt p_hat(int v_hat, const std::vector<ExactInt>& q0);

// Memoized counts of m-sector diagrams for one (m, d): entry (v, k) is the
// number of diagrams on m*v points in cliques of size d, invariant under the
// one-sector rotation, with k loops in every sector. Entries are computed on
// demand; the recursion only touches the cone an entry depends on.
class SectorTable {
  public:
    SectorTable(int m, int d);

    int sectors() const { return m_; }
    int part_size() const { return d_; }

    // a~_{v,k}; zero for v < 0, k < 0, k > v-1 (v >= 1), or when m*v is not
    // a multiple of d (no diagram exists).
    const ExactInt& get(long long v, long long k);

    // Entries computed so far, ordered; used by the cache writer.
    std::vector<std::tuple<long long, long long, ExactInt>> computed_entries() const;
    void restore_entry(long long v, long long k, ExactInt value);

  private:
    ExactInt compute(long long v, long long k);

    int m_;
    int d_;
    std::map<std::pair<long long, long long>, ExactInt> entries_;
};

// Pool of sector tables keyed by (m, d).
class SectorTableCache {
  public:
    SectorTable& get(int m, int d);
    const std::map<std::pair<int, int>, SectorTable>& tables() const { return tables_; }
    std::map<std::pair<int, int>, SectorTable>& tables() { return tables_; }

  private:
    std::map<std::pair<int, int>, SectorTable> tables_;
};

// Loopless chord diagrams fixed by a rotation of order m, for m | d*n:
// sector-loopless m-sector diagrams minus those whose sector boundaries are
// bridged by cliques. table must be the (m, d) sector table.
ExactInt fixed_points(int d, int n, long long m, SectorTable& table);

// Sum over m | d*n of totient(m) * fixed_points(d, n, m).
ExactInt rotation_fix_sum(int d, int n, SectorTableCache& cache);

// Loopless chord diagrams up to rotation: the fix sum divided (exactly) by
// the group order d*n.
ExactInt b_rotational(int d, int n, SectorTableCache& cache);

}  // namespace turanham
