#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "sbb/exact.hpp"

/// Arbitrary-precision combinatorial primitives: binomials, multinomials,
/// integer partitions, partition-pair counts, the profile-difference map, and
/// per-subblock sphere counts.
namespace sbb {

/// n-choose-k. Returns 0 when k < 0 or k > n; rejects n < 0.
inline ExactInteger binom(long n, long k) {
    if (n < 0)
        throw domain_error("binom: n must be nonnegative");
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    ExactInteger result = 1;
    for (long i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1); // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

inline ExactInteger factorial(long n) {
    if (n < 0)
        throw domain_error("factorial: n must be nonnegative");
    ExactInteger result = 1;
    for (long i = 2; i <= n; ++i)
        result *= i;
    return result;
}

/// m!/(mu_1! mu_2! ... mu_k!). The parts must sum to m.
inline ExactInteger multinomial(long m, const std::vector<int> &mu) {
    long total = 0;
    for (int part : mu) {
        if (part < 0)
            throw domain_error("multinomial: parts must be nonnegative");
        total += part;
    }
    if (total != m)
        throw domain_error("multinomial: parts must sum to m");
    ExactInteger result = factorial(m);
    for (int part : mu)
        result /= factorial(part);
    return result;
}

/// A partition: non-increasing list of positive parts.
using Partition = std::vector<int>;

/// All partitions of n with parts bounded by max_part, in lexicographically
/// descending order (recursive descent; the first entry is {n} when
/// max_part >= n, the last is all ones).
inline std::vector<Partition> partitions_of(int n, int max_part) {
    if (n < 0)
        throw domain_error("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    Partition current;
    auto rec = [&](auto &&self, int remaining, int bound) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int first = std::min(remaining, bound); first >= 1; --first) {
            current.push_back(first);
            self(self, remaining - first, first);
            current.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

/// The partition function p(i); p(0) = 1.
inline ExactInteger partition_number(int i) {
    if (i < 0)
        throw domain_error("partition_number: i must be nonnegative");
    // Count via the same recursive descent used for enumeration, memoized on
    // (remaining, max part).
    static thread_local std::map<std::pair<int, int>, ExactInteger> memo;
    auto count = [&](auto &&self, int remaining, int bound) -> ExactInteger {
        if (remaining == 0)
            return 1;
        if (bound == 0)
            return 0;
        auto key = std::make_pair(remaining, bound);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        ExactInteger total = 0;
        for (int first = std::min(remaining, bound); first >= 1; --first)
            total += self(self, remaining - first, first);
        memo.emplace(key, total);
        return total;
    };
    return count(count, i, i);
}

/// |Lambda(t)| = sum_i p(i) p(t-i): partitions of t into parts of two kinds.
inline ExactInteger count_partition_pairs(int t) {
    if (t < 0)
        throw domain_error("count_partition_pairs: t must be nonnegative");
    ExactInteger total = 0;
    for (int i = 0; i <= t; ++i)
        total += partition_number(i) * partition_number(t - i);
    return total;
}

/// N(t) = sum_{r <= t} |Lambda(r)|: upper bound on the number of profile
/// orbits within radius t of a constant-weight center.
inline ExactInteger orbit_count_bound(int t) {
    if (t < 0)
        throw domain_error("orbit_count_bound: t must be nonnegative");
    ExactInteger total = 0;
    for (int r = 0; r <= t; ++r)
        total += count_partition_pairs(r);
    return total;
}

/// A pair of partitions (positive-side, negative-side) with their joint total.
struct PartitionPair {
    Partition lambda1;
    Partition lambda2;
    int total = 0;

    friend bool operator==(const PartitionPair &a, const PartitionPair &b) {
        return a.lambda1 == b.lambda1 && a.lambda2 == b.lambda2;
    }
};

/// Map a profile pair (u, v) of equal length to the partition pair formed by
/// the positive entries of u - v (descending) and the negated negative
/// entries (descending). Injective on profile balls around a fixed center;
/// the pad-and-subtract round trip reconstructs u only when u - v is
/// sign-sorted (positives before negatives), which holds for sorted u around
/// a constant-weight v.
inline PartitionPair phi_map(const std::vector<int> &u, const std::vector<int> &v) {
    if (u.size() != v.size())
        throw domain_error("phi_map: profiles must have equal length");
    PartitionPair pair;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const int diff = u[i] - v[i];
        if (diff > 0)
            pair.lambda1.push_back(diff);
        else if (diff < 0)
            pair.lambda2.push_back(-diff);
        pair.total += std::abs(diff);
    }
    std::sort(pair.lambda1.rbegin(), pair.lambda1.rend());
    std::sort(pair.lambda2.rbegin(), pair.lambda2.rend());
    return pair;
}

/// Number of length-L binary words of weight u at Hamming distance exactly r
/// from a fixed word of weight w_ref. Zero when the distance/weight
/// combination is infeasible (parity or range).
inline ExactInteger subblock_sphere_count(int L, int w_ref, int u, int r) {
    if (L < 0 || w_ref < 0 || w_ref > L || u < 0 || u > L)
        throw domain_error("subblock_sphere_count: weights must lie in [0, L]");
    if (r < 0)
        throw domain_error("subblock_sphere_count: distance must be nonnegative");
    const int diff = u - w_ref;
    if (r < std::abs(diff) || (r - std::abs(diff)) % 2 != 0)
        return 0;
    const int down = (r - diff) / 2; // ones of the reference word flipped to zero
    const int up = (r + diff) / 2;   // zeros flipped to one
    return binom(w_ref, down) * binom(L - w_ref, up);
}

} // namespace sbb
