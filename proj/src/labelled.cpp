#include "turanham/labelled.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace turanham {

namespace {

const ExactInt kZero = 0;

void require_part_size(int d) {
    if (d < 2) {
        throw std::invalid_argument("part size d must be at least 2, got " + std::to_string(d));
    }
}

std::string idx(long long n, long long k) {
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

// Total number of partitions of n*d points into n unordered cliques of size
// d: (nd)! / ((d!)^n n!). All linear diagrams regardless of loop count.
ExactInt all_diagrams(int d, int n) {
    ExactInt total = factorial(static_cast<long long>(n) * d);
    total = exact_div(total, pow_int(factorial(d), n));
    return exact_div(total, factorial(n));
}

}  // namespace

ExactInt c_coeff(long long n, long long k, long long t, int d) {
    require_part_size(d);
    ExactInt sum = 0;
    for (long long i = 0; i <= d - 1; ++i) {
        const ExactInt restore = binom(d - 1, i);
        const ExactInt destroy = binom(t, t + i - k);
        if (destroy == 0) {
            continue;
        }
        const ExactInt place = binom(d * (n - 1) - t, d - 2 * i - t + k - 1);
        sum += restore * destroy * place;
    }
    return sum;
}

LabelledTriangle::LabelledTriangle(int d) : d_(d) {
    require_part_size(d);
    rows_.push_back({ExactInt(1)});  // a_{0,0} = 1
}

const ExactInt& LabelledTriangle::at(long long n, long long k) const {
    if (n < 0 || k < 0 || n >= static_cast<long long>(rows_.size())) {
        return kZero;
    }
    const auto& row = rows_[static_cast<std::size_t>(n)];
    if (k >= static_cast<long long>(row.size())) {
        return kZero;
    }
    return row[static_cast<std::size_t>(k)];
}

const std::vector<ExactInt>& LabelledTriangle::row(int n) const {
    if (n < 0 || n >= static_cast<int>(rows_.size())) {
        throw std::out_of_range("triangle row " + std::to_string(n) + " not built");
    }
    return rows_[static_cast<std::size_t>(n)];
}

void LabelledTriangle::extend(int n_max) {
    while (static_cast<int>(rows_.size()) <= n_max) {
        append_row();
    }
}

void LabelledTriangle::append_row() {
    const int n = static_cast<int>(rows_.size());
    const long long width = static_cast<long long>(n) * (d_ - 1);
    std::vector<ExactInt> row(static_cast<std::size_t>(width) + 1);
    for (long long k = 0; k <= width; ++k) {
        ExactInt value = 0;
        for (long long t = k - d_ + 1; t <= k + d_ - 1; ++t) {
            const ExactInt& prev = at(n - 1, t);
            if (prev == 0) {
                continue;
            }
            value += c_coeff(n, k, t, d_) * prev;
        }
        if (value < 0) {
            throw std::domain_error("triangle entry negative at " + idx(n, k));
        }
        row[static_cast<std::size_t>(k)] = std::move(value);
    }
    rows_.push_back(std::move(row));
    check_row_sum(n);
}

void LabelledTriangle::check_row_sum(int n) const {
    ExactInt sum = 0;
    for (const ExactInt& v : rows_[static_cast<std::size_t>(n)]) {
        sum += v;
    }
    const ExactInt expected = all_diagrams(d_, n);
    if (sum != expected) {
        throw std::domain_error("triangle row " + std::to_string(n) + " (d=" + std::to_string(d_) +
                                ") sums to " + sum.str() + ", expected " + expected.str());
    }
}

void LabelledTriangle::restore_row(int n, std::vector<ExactInt> row) {
    if (n != static_cast<int>(rows_.size())) {
        throw std::invalid_argument("restore_row: rows must arrive in order");
    }
    const std::size_t width = static_cast<std::size_t>(n) * (d_ - 1) + 1;
    if (row.size() != width) {
        throw std::invalid_argument("restore_row: row " + std::to_string(n) + " has " +
                                    std::to_string(row.size()) + " entries, expected " +
                                    std::to_string(width));
    }
    rows_.push_back(std::move(row));
    check_row_sum(n);
}

LabelledTriangle build_triangle(int d, int n_max) {
    LabelledTriangle triangle(d);
    triangle.extend(n_max);
    return triangle;
}

ExactInt b_labelled(int d, int n, const LabelledTriangle& triangle, ChordFormula formula) {
    require_part_size(d);
    if (triangle.part_size() != d) {
        throw std::invalid_argument("b_labelled: triangle built for different part size");
    }
    if (n < 1 || triangle.max_row() < n) {
        throw std::invalid_argument("b_labelled: triangle does not cover row " + std::to_string(n));
    }
    ExactInt result;
    if (formula == ChordFormula::printed_d3) {
        if (d != 3) {
            throw std::invalid_argument("printed_d3 chord formula is only defined for d=3");
        }
        result = triangle.at(n, 0) - (3LL * n - 4) * triangle.at(n - 1, 0) + triangle.at(n - 1, 1);
    } else {
        result = triangle.at(n, 0);
        for (long long k = 0; k <= d - 2; ++k) {
            result -= binom(static_cast<long long>(d) * (n - 1) - k - 1, d - 2 - k) *
                      triangle.at(n - 1, k);
        }
    }
    if (result < 0) {
        throw std::domain_error("chord count negative at d=" + std::to_string(d) +
                                ", n=" + std::to_string(n));
    }
    return result;
}

ClosedSystemState::ClosedSystemState(int d, std::vector<std::vector<ExactInt>> rows)
    : d_(d), rows_(std::move(rows)) {}

ClosedSystemState ClosedSystemState::from_recurrences(int d, int n_max) {
    if (d != 2 && d != 3) {
        throw std::invalid_argument("closed recurrences are available for d=2 and d=3 only");
    }
    // Rows 0 and 1 are seeded directly: a_{0,k} = [k=0], a_{1,k} = [k=d-1]
    // (a single clique of d consecutive points carries exactly d-1 loops).
    // The a_{n,2} line reaches two rows back, so the recurrences start at
    // n = 2.
    ClosedSystemState state(d, {});
    auto& rows = state.rows_;
    rows.push_back(std::vector<ExactInt>(static_cast<std::size_t>(d), 0));
    rows[0][0] = 1;
    if (n_max >= 1) {
        rows.push_back(std::vector<ExactInt>(static_cast<std::size_t>(d), 0));
        rows[1][static_cast<std::size_t>(d - 1)] = 1;
    }
    for (long long n = 2; n <= n_max; ++n) {
        std::vector<ExactInt> row(static_cast<std::size_t>(d));
        if (d == 2) {
            row[0] = (2 * n - 2) * state.at(n - 1, 0) + state.at(n - 1, 1);
            row[1] = (2 * n - 1) * state.at(n - 1, 0) + state.at(n - 1, 1);
        } else {
            row[0] = binom(3 * n - 3, 2) * state.at(n - 1, 0) + (3 * n - 4) * state.at(n - 1, 1) +
                     state.at(n - 1, 2);
            row[1] = 2 * row[0] + 2 * (3 * n - 3) * state.at(n - 1, 0) + 2 * state.at(n - 1, 1);
            row[2] = 2 * row[0] + (9 * n - 10) * state.at(n - 1, 0) + 5 * state.at(n - 1, 1) +
                     2 * state.at(n - 2, 0);
        }
        rows.push_back(std::move(row));
    }
    return state;
}

ClosedSystemState ClosedSystemState::from_triangle(const LabelledTriangle& triangle, int n_max) {
    const int d = triangle.part_size();
    if (triangle.max_row() < n_max) {
        throw std::invalid_argument("from_triangle: triangle too short for n_max=" +
                                    std::to_string(n_max));
    }
    ClosedSystemState state(d, {});
    for (int n = 0; n <= n_max; ++n) {
        std::vector<ExactInt> row(static_cast<std::size_t>(d));
        for (int k = 0; k <= d - 1; ++k) {
            row[static_cast<std::size_t>(k)] = triangle.at(n, k);
        }
        state.rows_.push_back(std::move(row));
    }
    return state;
}

const ExactInt& ClosedSystemState::at(long long n, long long k) const {
    if (n < 0 || k < 0 || n >= static_cast<long long>(rows_.size()) || k >= d_) {
        return kZero;
    }
    if (k > n * (d_ - 1)) {
        return kZero;
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

ClosedSystemState closed_system_d2_d3(int d, int n_max) {
    return ClosedSystemState::from_recurrences(d, n_max);
}

ExactInt closed_a_n0(int d, int n, const ClosedSystemState& state) {
    require_part_size(d);
    ExactInt sum = 0;
    for (long long t = 0; t <= d - 1; ++t) {
        sum += c_coeff(n, 0, t, d) * state.at(n - 1, t);
    }
    return sum;
}

ExactInt closed_a_nk_single_owner(int d, int n, int k, const ClosedSystemState& state) {
    require_part_size(d);
    if (k < 1 || k > d - 1) {
        throw std::invalid_argument("single-owner count needs 1 <= k <= d-1, got k=" +
                                    std::to_string(k));
    }
    ExactInt sum = 0;
    for (long long m = 0; m <= d - k; ++m) {
        sum += binom(static_cast<long long>(d) * (n - 1) + 1 - m, d - k - m) * state.at(n - 1, m);
    }
    return binom(d - 1, k) * sum;
}

namespace {

// Ways to thread the reduced cliques K_{r_1},...,K_{r_l} back into a diagram
// with m loops, summed over how many loops each insertion destroys (s_i) and
// creates (j_i). The last clique must absorb every remaining loop and create
// none.
ExactInt insertion_ways(long long n, const std::vector<int>& r, long long m, int d) {
    const int l = static_cast<int>(r.size());
    const long long v1 = static_cast<long long>(d) * (n - l) + 1;

    // depth-first over (j_i, s_i), i = 1..l-1, tracking the running loop
    // count m_i and position count v_i
    struct Frame {
        int i;
        long long mi;
        long long vi;
        ExactInt weight;
    };
    ExactInt total = 0;
    std::vector<Frame> stack;
    stack.push_back({0, m, v1, ExactInt(1)});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.i == l - 1) {
            // final clique: destroy all m_l loops, create none
            total += f.weight * binom(f.vi - f.mi, r[static_cast<std::size_t>(f.i)] - f.mi);
            continue;
        }
        const int ri = r[static_cast<std::size_t>(f.i)];
        for (int j = 0; j <= ri - 1; ++j) {
            const long long s_max = std::min<long long>(f.mi, ri - j);
            for (long long s = 0; s <= s_max; ++s) {
                ExactInt w = f.weight * binom(f.mi, s) * binom(f.vi - f.mi, ri - j - s) *
                             binom(ri - 1, j);
                if (w == 0) {
                    continue;
                }
                stack.push_back({f.i + 1, f.mi + j - s, f.vi + ri, std::move(w)});
            }
        }
    }
    return total;
}

}  // namespace

ExactInt closed_a_nk_multi_owner(int d, int n, int k, const ClosedSystemState& state,
                                 const LabelledTriangle& triangle) {
    require_part_size(d);
    if (k < 2 || k > d - 1) {
        return 0;  // two owners need at least two loops
    }
    ExactInt total = 0;
    for (const LoopPartition& part : loop_partitions(k, d, 2)) {
        const int l = part.owners();
        ExactInt alpha = 1;
        for (int ri : part.r) {
            alpha *= binom(d - 1, ri - 1);
        }
        // divide by the multiplicity factorials of repeated clique sizes
        ExactInt repeats = 1;
        std::size_t run = 1;
        for (std::size_t i = 1; i <= part.r.size(); ++i) {
            if (i < part.r.size() && part.r[i] == part.r[i - 1]) {
                ++run;
            } else {
                repeats *= factorial(static_cast<long long>(run));
                run = 1;
            }
        }
        ExactInt inner = 0;
        for (long long m = 0; m <= static_cast<long long>(l) * d - k; ++m) {
            const ExactInt& a_prev = m <= d - 1 ? state.at(n - l, m) : triangle.at(n - l, m);
            if (a_prev == 0) {
                continue;
            }
            inner += insertion_ways(n, part.r, m, d) * a_prev;
        }
        total += exact_div(alpha * inner, repeats);
    }
    return total;
}

ExactInt eliminate_high_k(int d, int n, int k, const LabelledTriangle& triangle) {
    require_part_size(d);
    const ExactInt divisor = c_coeff(n, k, k + d - 1, d);
    if (divisor == 0) {
        throw std::domain_error("elimination divisor vanishes at " + idx(n, k) +
                                ", d=" + std::to_string(d));
    }
    ExactInt numerator = triangle.at(n, k);
    for (long long t = k - d + 1; t <= k + d - 2; ++t) {
        numerator -= c_coeff(n, k, t, d) * triangle.at(n - 1, t);
    }
    try {
        return exact_div(numerator, divisor);
    } catch (const std::domain_error&) {
        throw std::domain_error("elimination not exact at " + idx(n, k) + ", d=" + std::to_string(d));
    }
}

}  // namespace turanham
