#include "turanham/exact.hpp"

#include <stdexcept>

namespace turanham {

ExactInt exact_div(const ExactInt& num, const ExactInt& den) {
    if (den == 0) {
        throw std::domain_error("exact_div: zero divisor");
    }
    ExactInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw std::domain_error("exact_div: " + num.str() + " is not divisible by " + den.str());
    }
    return q;
}

ExactInt binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) {
        return 0;
    }
    if (b > a - b) {
        b = a - b;
    }
    ExactInt result = 1;
    for (long long i = 0; i < b; ++i) {
        result *= a - i;
        result /= i + 1;  // exact at every step: result is C(a, i+1)
    }
    return result;
}

ExactInt multichoose(long long a, long long b) {
    return binom(a + b - 1, b);
}

ExactInt factorial(long long a) {
    if (a < 0) {
        throw std::invalid_argument("factorial: negative argument " + std::to_string(a));
    }
    ExactInt result = 1;
    for (long long i = 2; i <= a; ++i) {
        result *= i;
    }
    return result;
}

ExactInt pow_int(const ExactInt& base, long long exp) {
    if (exp < 0) {
        throw std::invalid_argument("pow_int: negative exponent " + std::to_string(exp));
    }
    ExactInt result = 1;
    for (long long i = 0; i < exp; ++i) {
        result *= base;
    }
    return result;
}

long long totient(long long m) {
    if (m < 1) {
        throw std::invalid_argument("totient: argument must be positive, got " + std::to_string(m));
    }
    long long result = m;
    long long rest = m;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            result -= result / p;
            while (rest % p == 0) {
                rest /= p;
            }
        }
    }
    if (rest > 1) {
        result -= result / rest;
    }
    return result;
}

std::vector<long long> divisors(long long m) {
    if (m < 1) {
        throw std::invalid_argument("divisors: argument must be positive, got " + std::to_string(m));
    }
    std::vector<long long> small, large;
    for (long long q = 1; q * q <= m; ++q) {
        if (m % q == 0) {
            small.push_back(q);
            if (q != m / q) {
                large.push_back(m / q);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

void extend_partition(int remaining, int min_r, int d, std::vector<int>& prefix,
                      int l_target, std::vector<LoopPartition>& out) {
    const int slots_left = l_target - static_cast<int>(prefix.size());
    if (slots_left == 0) {
        if (remaining == 0) {
            out.push_back(LoopPartition{prefix});
        }
        return;
    }
    // each remaining clique must contract at least one loop: d - r >= 1
    if (remaining < slots_left) {
        return;
    }
    for (int r = min_r; r <= d - 1; ++r) {
        const int used = d - r;
        if (used < 1 || used > remaining) {
            continue;
        }
        prefix.push_back(r);
        extend_partition(remaining - used, r, d, prefix, l_target, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<LoopPartition> loop_partitions(int k, int d, int l_min) {
    std::vector<LoopPartition> out;
    if (k < 1 || l_min < 1 || d < 2) {
        return out;
    }
    for (int l = l_min; l <= k; ++l) {
        std::vector<int> prefix;
        extend_partition(k, 1, d, prefix, l, out);
    }
    return out;
}

}  // namespace turanham
