#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "sbb/combinatorics.hpp"

/// Weight-profile orbits of the subblock automorphism group (subblock
/// permutations composed with coordinate permutations inside each subblock):
/// enumeration of the index sets behind the reduced programs, orbit sizes,
/// and the constrained-ball sizes that fill the reduced constraint matrix.
namespace sbb {

/// Non-increasing tuple of per-subblock weights indexing one orbit.
using WeightProfile = std::vector<int>;

/// Which defining inequality an index set satisfies.
enum class IndexKind {
    cscc_ball, ///< profiles u with sum |u_i - w| <= t
    secc_rows, ///< profiles with entries in [w, L]
    secc_cols, ///< union of balls around the rows, rows listed first
};

/// An ordered, duplicate-free list of profiles over a fixed (m, L).
struct OrbitIndexSet {
    int m = 0;
    int L = 0;
    IndexKind kind = IndexKind::cscc_ball;
    std::vector<WeightProfile> profiles;

    std::size_t size() const { return profiles.size(); }
};

inline bool is_valid_profile(const WeightProfile &u, int L) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] > L)
            return false;
        if (i > 0 && u[i - 1] < u[i])
            return false;
    }
    return true;
}

inline void require_profile(const WeightProfile &u, int L, const char *who) {
    if (u.empty() || !is_valid_profile(u, L))
        throw domain_error(std::string(who) +
                           ": profile must be non-increasing with entries in [0, L]");
}

/// |O_u|: multinomial over the weight multiplicities times the product of
/// per-subblock binomials.
inline ExactInteger orbit_size(const WeightProfile &u, int L) {
    require_profile(u, L, "orbit_size");
    std::vector<int> multiplicities;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i == 0 || u[i] != u[i - 1])
            multiplicities.push_back(1);
        else
            ++multiplicities.back();
    }
    ExactInteger result = multinomial(static_cast<long>(u.size()), multiplicities);
    for (int weight : u)
        result *= binom(L, weight);
    return result;
}

/// All non-increasing m-tuples over [0, L], lexicographically descending.
inline std::vector<WeightProfile> all_profiles(int m, int L) {
    if (m < 1 || L < 0)
        throw domain_error("all_profiles: need m >= 1 and L >= 0");
    std::vector<WeightProfile> out;
    WeightProfile current;
    auto rec = [&](auto &&self, int index, int hi) -> void {
        if (index == m) {
            out.push_back(current);
            return;
        }
        for (int v = hi; v >= 0; --v) {
            current.push_back(v);
            self(self, index + 1, v);
            current.pop_back();
        }
    };
    rec(rec, 0, L);
    return out;
}

/// All profiles u with sum |u_i - v_i| <= t, lexicographically descending.
inline std::vector<WeightProfile> enumerate_profile_ball(const WeightProfile &v,
                                                         int L, int t) {
    require_profile(v, L, "enumerate_profile_ball");
    if (t < 0)
        throw domain_error("enumerate_profile_ball: t must be nonnegative");
    std::vector<WeightProfile> out;
    for (const WeightProfile &u : all_profiles(static_cast<int>(v.size()), L)) {
        int dist = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            dist += std::abs(u[i] - v[i]);
        if (dist <= t)
            out.push_back(u);
    }
    return out;
}

/// The profiles within distance t of the constant profile (w, ..., w), in the
/// canonical printed order: by total distance r ascending; within a distance
/// class, by the upward mass t1 descending; positive partitions
/// lexicographically descending; negative partitions lexicographically
/// ascending. This order is pinned by golden tests.
inline OrbitIndexSet enumerate_cscc_profiles(int m, int L, int w, int t) {
    if (m < 1)
        throw domain_error("enumerate_cscc_profiles: need m >= 1");
    if (w < 0 || w > L)
        throw domain_error("enumerate_cscc_profiles: need 0 <= w <= L");
    if (t < 0)
        throw domain_error("enumerate_cscc_profiles: need t >= 0");
    OrbitIndexSet set;
    set.m = m;
    set.L = L;
    set.kind = IndexKind::cscc_ball;
    for (int r = 0; r <= t; ++r) {
        for (int t1 = r; t1 >= 0; --t1) {
            const int t2 = r - t1;
            const std::vector<Partition> ups = partitions_of(t1);
            std::vector<Partition> downs = partitions_of(t2);
            std::reverse(downs.begin(), downs.end()); // ascending
            for (const Partition &lambda1 : ups) {
                for (const Partition &lambda2 : downs) {
                    if (static_cast<int>(lambda1.size() + lambda2.size()) > m)
                        continue;
                    WeightProfile u(m, w);
                    for (std::size_t i = 0; i < lambda1.size(); ++i)
                        u[i] = w + lambda1[i];
                    for (std::size_t i = 0; i < lambda2.size(); ++i)
                        u[m - 1 - i] = w - lambda2[i];
                    if (u.front() > L || u.back() < 0)
                        continue;
                    set.profiles.push_back(std::move(u));
                }
            }
        }
    }
    return set;
}

/// All non-increasing m-tuples with entries in [w, L], lexicographically
/// descending.
inline OrbitIndexSet enumerate_secc_rows(int m, int L, int w) {
    if (m < 1)
        throw domain_error("enumerate_secc_rows: need m >= 1");
    if (w < 0 || w > L)
        throw domain_error("enumerate_secc_rows: need 0 <= w <= L");
    OrbitIndexSet set;
    set.m = m;
    set.L = L;
    set.kind = IndexKind::secc_rows;
    for (WeightProfile &u : all_profiles(m, L))
        if (u.back() >= w)
            set.profiles.push_back(std::move(u));
    return set;
}

/// Union of the profile balls around every row profile: the rows first (in
/// row order), then the remaining profiles lexicographically descending.
inline OrbitIndexSet enumerate_secc_cols(int m, int L, int w, int t) {
    if (t < 0)
        throw domain_error("enumerate_secc_cols: need t >= 0");
    OrbitIndexSet rows = enumerate_secc_rows(m, L, w);
    OrbitIndexSet set;
    set.m = m;
    set.L = L;
    set.kind = IndexKind::secc_cols;
    set.profiles = rows.profiles;
    std::set<WeightProfile> row_set(rows.profiles.begin(), rows.profiles.end());
    std::set<WeightProfile, std::greater<>> extras;
    for (const WeightProfile &v : rows.profiles)
        for (WeightProfile &u : enumerate_profile_ball(v, L, t))
            if (row_set.find(u) == row_set.end())
                extras.insert(std::move(u));
    set.profiles.insert(set.profiles.end(), extras.begin(), extras.end());
    return set;
}

/// |{y in O_u : d(x, y) <= t}| for a fixed representative x of O_v (the word
/// whose i-th subblock is 0^{L-v_i} 1^{v_i}); the count is independent of the
/// representative. Dynamic program over x's subblocks: state = (subblock
/// index, multiset of u's weights still to place, remaining distance budget);
/// transitions weighted by per-subblock sphere counts.
inline ExactInteger constrained_ball_size(const WeightProfile &v,
                                          const WeightProfile &u, int L, int t) {
    require_profile(v, L, "constrained_ball_size");
    require_profile(u, L, "constrained_ball_size");
    if (u.size() != v.size())
        throw domain_error("constrained_ball_size: profiles must share (m, L)");
    if (t < 0)
        throw domain_error("constrained_ball_size: t must be nonnegative");
    const int m = static_cast<int>(v.size());

    // Remaining weights kept sorted ascending so equal multisets share a key.
    using State = std::tuple<int, std::vector<int>, int>;
    std::map<State, ExactInteger> memo;
    std::vector<int> initial(u.rbegin(), u.rend());

    auto rec = [&](auto &&self, int index, const std::vector<int> &remaining,
                   int budget) -> ExactInteger {
        if (index == m)
            return remaining.empty() ? 1 : 0;
        State key{index, remaining, budget};
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        ExactInteger total = 0;
        for (std::size_t j = 0; j < remaining.size(); ++j) {
            if (j > 0 && remaining[j] == remaining[j - 1])
                continue; // identical weight already tried at this subblock
            std::vector<int> rest;
            rest.reserve(remaining.size() - 1);
            rest.insert(rest.end(), remaining.begin(), remaining.begin() + j);
            rest.insert(rest.end(), remaining.begin() + j + 1, remaining.end());
            for (int r = 0; r <= budget; ++r) {
                ExactInteger count = subblock_sphere_count(L, v[index], remaining[j], r);
                if (count != 0)
                    total += count * self(self, index + 1, rest, budget - r);
            }
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(rec, 0, initial, t);
}

} // namespace sbb
