#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace turanham {

// Universal count type. All counting in this library is exact; intermediate
// differences may be negative, final counts never are.
using ExactInt = boost::multiprecision::cpp_int;

// Quotient of num/den when den divides num exactly; throws std::domain_error
// on a zero divisor or a nonzero remainder.
ExactInt exact_div(const ExactInt& num, const ExactInt& den);

// Binomial coefficient under the zero convention: C(a,b) = 0 whenever
// b < 0, a < 0 or b > a. Never the signed generalized binomial.
ExactInt binom(long long a, long long b);

// Multichoose <<a,b>> = C(a+b-1, b), same zero convention.
ExactInt multichoose(long long a, long long b);

// a! for a >= 0; negative input throws std::invalid_argument.
ExactInt factorial(long long a);

// base^exp for exp >= 0.
ExactInt pow_int(const ExactInt& base, long long exp);

// Euler totient of m >= 1.
long long totient(long long m);

// All divisors of m >= 1 in increasing order.
std::vector<long long> divisors(long long m);

// Multiset of clique sizes {r_1 <= ... <= r_l} left after contracting loops:
// l cliques of original size d, the i-th keeping r_i points, such that the
// contracted loops add up to k: sum(d - r_i) = k with 1 <= r_i <= d-1.
struct LoopPartition {
    std::vector<int> r;  // nondecreasing

    int owners() const { return static_cast<int>(r.size()); }
};

// Every LoopPartition with l in [l_min, k], duplicate-free, ordered by l and
// then lexicographically. Empty when no valid multiset exists.
std::vector<LoopPartition> loop_partitions(int k, int d, int l_min);

}  // namespace turanham
