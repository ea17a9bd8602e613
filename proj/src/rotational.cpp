#include "turanham/rotational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace turanham {

namespace {

const ExactInt kZero = 0;
const ExactInt kOne = 1;

std::string ctx_str(const QContext& c) {
    return "(cliques=" + std::to_string(c.cliques) + ", base_len=" + std::to_string(c.base_len) +
           ", filled_loops=" + std::to_string(c.filled_loops) +
           ", kept_loops=" + std::to_string(c.kept_loops) + ")";
}

}  // namespace

QTable::QTable(const QContext& context, int j_max) : context_(context) {
    if (context.cliques < 1 || j_max < 0) {
        throw std::invalid_argument("QTable: bad context " + ctx_str(context));
    }
    const long long mu = context.cliques;
    const long long filled = context.filled_loops;
    columns_.resize(static_cast<std::size_t>(j_max) + 1);
    columns_[0] = {ExactInt(1)};  // q_{0,0} = 1
    for (long long j = 0; j < j_max; ++j) {
        const auto& prev = columns_[static_cast<std::size_t>(j)];
        std::vector<ExactInt> next(static_cast<std::size_t>(j) + 2);
        auto prev_at = [&](long long kt) -> const ExactInt& {
            if (kt < 0 || kt > j) {
                return kZero;
            }
            return prev[static_cast<std::size_t>(kt)];
        };
        for (long long kt = 0; kt <= j + 1; ++kt) {
            // create one loop, destroy one, or keep the count unchanged;
            // kept base loops block one position for every clique choice
            const ExactInt create = (2 * j + filled - (kt - 1)) * prev_at(kt - 1);
            const ExactInt destroy = (kt + 1) * (mu - 1) * prev_at(kt + 1);
            const ExactInt keep =
                (mu * (context.base_len + j + 1) - (2 * j - kt + filled) - kt * (mu - 1) -
                 mu * context.kept_loops) *
                prev_at(kt);
            ExactInt value = create + destroy + keep;
            if (value < 0) {
                throw std::domain_error("QTable entry negative at (k~=" + std::to_string(kt) +
                                        ", j=" + std::to_string(j + 1) + ") in context " +
                                        ctx_str(context_));
            }
            next[static_cast<std::size_t>(kt)] = std::move(value);
        }
        columns_[static_cast<std::size_t>(j) + 1] = std::move(next);
    }
}

const ExactInt& QTable::at(long long ktilde, long long j) const {
    if (j < 0 || j >= static_cast<long long>(columns_.size()) || ktilde < 0 || ktilde > j) {
        return kZero;
    }
    return columns_[static_cast<std::size_t>(j)][static_cast<std::size_t>(ktilde)];
}

std::vector<ExactInt> QTable::zero_loop_row() const {
    std::vector<ExactInt> row;
    row.reserve(columns_.size());
    for (const auto& column : columns_) {
        row.push_back(column[0]);
    }
    return row;
}

ExactInt p_tilde(int v_tilde, const std::vector<ExactInt>& q0) {
    if (v_tilde < 0) {
        return 0;
    }
    if (static_cast<int>(q0.size()) <= v_tilde) {
        throw std::invalid_argument("p_tilde: q row too short for v~=" + std::to_string(v_tilde));
    }
    ExactInt sum = 0;
    for (int i = 0; i <= v_tilde; ++i) {
        for (int j = 0; j <= v_tilde - i; ++j) {
            ExactInt term = q0[static_cast<std::size_t>(v_tilde - i - j)];
            for (int f = v_tilde - i - j + 1; f <= v_tilde; ++f) {
                term *= f;  // v~! / (v~ - i - j)!
            }
            sum += (i + j) % 2 == 0 ? term : -term;
        }
    }
    return sum;
}

ExactInt p_hat(int v_hat, const std::vector<ExactInt>& q0) {
    if (v_hat < 0) {
        return 0;
    }
    if (static_cast<int>(q0.size()) <= v_hat) {
        throw std::invalid_argument("p_hat: q row too short for v^=" + std::to_string(v_hat));
    }
    ExactInt sum = 0;
    for (int i = 0; i <= v_hat; ++i) {
        ExactInt term = q0[static_cast<std::size_t>(v_hat - i)];
        for (int f = v_hat - i + 1; f <= v_hat; ++f) {
            term *= f;
        }
        sum += i % 2 == 0 ? term : -term;
    }
    return sum;
}

SectorTable::SectorTable(int m, int d) : m_(m), d_(d) {
    if (m < 1) {
        throw std::invalid_argument("SectorTable: sector count must be positive");
    }
    if (d < 2) {
        throw std::invalid_argument("SectorTable: part size d must be at least 2");
    }
    entries_[{0, 0}] = 1;
}

const ExactInt& SectorTable::get(long long v, long long k) {
    if (v < 0 || k < 0) {
        return kZero;
    }
    if (v == 0) {
        return k == 0 ? kOne : kZero;
    }
    if (k > v - 1) {
        return kZero;  // a sector of v points has at most v-1 adjacent pairs
    }
    auto it = entries_.find({v, k});
    if (it == entries_.end()) {
        it = entries_.emplace(std::make_pair(v, k), compute(v, k)).first;
    }
    return it->second;
}

ExactInt SectorTable::compute(long long v, long long k) {
    // Peel off the orbit of cliques holding the leading point of every
    // sector. An orbit of l cliques (l | m, with each clique m/l-fold
    // symmetric, so m/l | d) removes dl/m points from each sector.
    ExactInt total = 0;
    for (long long l : divisors(m_)) {
        if (d_ % (m_ / l) != 0) {
            continue;
        }
        const long long dt = l * d_ / m_;  // points removed per sector
        for (long long t = std::max<long long>(0, k - dt + 1); t <= k + dt - 1; ++t) {
            const ExactInt& tail = get(v - dt, t);
            if (tail == 0) {
                continue;
            }
            // ways to thread the orbit back in: i loops restored inside the
            // cliques, t+i-k old loops destroyed, k-i kept, the rest of the
            // points inserted one by one without touching the loop count
            ExactInt coeff = 0;
            for (long long i = 0; i <= dt - 1; ++i) {
                const ExactInt destroy = binom(t, t + i - k);
                if (destroy == 0) {
                    continue;
                }
                const long long inserted = dt - 2 * i - t + k - 1;
                if (inserted < 0) {
                    continue;
                }
                QTable q(QContext{l, v - dt, t + i - k, k - i}, static_cast<int>(inserted));
                const ExactInt loose = exact_div(p_hat(static_cast<int>(inserted), q.zero_loop_row()),
                                                 factorial(inserted));
                coeff += binom(dt - 1, i) * destroy * pow_int(l, t + i - k) * loose;
            }
            total += coeff * tail;
        }
    }
    if (total < 0) {
        throw std::domain_error("sector count negative at (m=" + std::to_string(m_) +
                                ", d=" + std::to_string(d_) + ", v=" + std::to_string(v) +
                                ", k=" + std::to_string(k) + ")");
    }
    return total;
}

std::vector<std::tuple<long long, long long, ExactInt>> SectorTable::computed_entries() const {
    std::vector<std::tuple<long long, long long, ExactInt>> out;
    out.reserve(entries_.size());
    for (const auto& [key, value] : entries_) {
        out.emplace_back(key.first, key.second, value);
    }
    return out;
}

void SectorTable::restore_entry(long long v, long long k, ExactInt value) {
    if (v < 0 || k < 0 || value < 0) {
        throw std::invalid_argument("SectorTable::restore_entry: invalid entry");
    }
    entries_[{v, k}] = std::move(value);
}

SectorTable& SectorTableCache::get(int m, int d) {
    auto it = tables_.find({m, d});
    if (it == tables_.end()) {
        it = tables_.emplace(std::make_pair(m, d), SectorTable(m, d)).first;
    }
    return it->second;
}

ExactInt fixed_points(int d, int n, long long m, SectorTable& table) {
    if (n < 1 || d < 2) {
        throw std::invalid_argument("fixed_points: need n >= 1 and d >= 2");
    }
    const long long points = static_cast<long long>(d) * n;
    if (m < 1 || points % m != 0) {
        throw std::invalid_argument("fixed_points: m=" + std::to_string(m) +
                                    " does not divide " + std::to_string(points));
    }
    if (table.sectors() != m || table.part_size() != d) {
        throw std::invalid_argument("fixed_points: sector table keyed for different (m, d)");
    }
    if (n == 1) {
        // A lone clique makes every cyclically adjacent pair a loop; the
        // end-insertion counting below assumes at least two cliques.
        return 0;
    }
    const long long v = points / m;
    ExactInt result = table.get(v, 0);
    for (long long l : divisors(m)) {
        if (d % (m / l) != 0) {
            continue;
        }
        const long long dt = l * d / m;
        for (long long k = 0; k <= dt - 2; ++k) {
            const ExactInt& tail = table.get(v - dt, k);
            if (tail == 0) {
                continue;
            }
            const long long inserted = dt - 2 - k;
            QTable q(QContext{l, v - dt, k, 0}, static_cast<int>(inserted));
            const ExactInt bridged =
                exact_div(p_tilde(static_cast<int>(inserted), q.zero_loop_row()),
                          factorial(inserted));
            result -= pow_int(l, k) * bridged * tail;
        }
    }
    if (result < 0) {
        throw std::domain_error("fixed-point count negative at (d=" + std::to_string(d) +
                                ", n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
    return result;
}

ExactInt rotation_fix_sum(int d, int n, SectorTableCache& cache) {
    const long long points = static_cast<long long>(d) * n;
    ExactInt sum = 0;
    for (long long m : divisors(points)) {
        sum += totient(m) * fixed_points(d, n, m, cache.get(static_cast<int>(m), d));
    }
    return sum;
}

ExactInt b_rotational(int d, int n, SectorTableCache& cache) {
    if (n < 1 || d < 2) {
        throw std::invalid_argument("b_rotational: need n >= 1 and d >= 2");
    }
    const long long points = static_cast<long long>(d) * n;
    return exact_div(rotation_fix_sum(d, n, cache), points);
}

}  // namespace turanham
