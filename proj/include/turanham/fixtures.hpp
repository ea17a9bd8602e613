#pragma once

#include <vector>

#include "turanham/counts.hpp"

namespace turanham {

// Reference rows shipped with the repository (data/fixtures/*.csv, embedded
// at build time and checksummed on load): d = 2..6 with n up to 20, 13, 10,
// 8 and 7 respectively — 58 rows.
class FixtureSet {
  public:
    const std::vector<CountsRecord>& records() const { return records_; }

    // Largest n covered for a clique size, 0 when the size is not covered.
    int n_max(int d) const;

    static FixtureSet load();

  private:
    std::vector<CountsRecord> records_;
};

}  // namespace turanham
