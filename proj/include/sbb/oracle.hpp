#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "sbb/lp.hpp"

/// Brute-force ground truth at desk scale: full-space covering programs,
/// exhaustive ball counts, and exact maximum-code search. Everything here is
/// deliberately independent of the orbit-reduced code paths it validates.
namespace sbb {

/// A word of m subblocks of length L, packed into bits [i*L, (i+1)*L) per
/// subblock, most significant subblock last.
using Word = std::uint64_t;

namespace oracle_detail {

/// Desk-scale guard: default per-operation bit budget, overridable through
/// SUBBLOCK_BOUNDS_MAX_DESK (a single global cap, at most 62).
inline int desk_cap(int default_cap) {
    if (const char *text = std::getenv("SUBBLOCK_BOUNDS_MAX_DESK")) {
        char *end = nullptr;
        const long value = std::strtol(text, &end, 10);
        if (end != text && *end == '\0' && value >= 1 && value <= 62)
            return static_cast<int>(value);
    }
    return default_cap;
}

inline void require_bits(int m, int L, int default_cap, const char *who) {
    if (m < 1 || L < 1 || L > 62)
        throw domain_error(std::string(who) + ": need m >= 1 and 1 <= L <= 62");
    const int cap = desk_cap(default_cap);
    if (m * L > cap)
        throw cap_error(std::string(who) + ": m*L = " + std::to_string(m * L) +
                        " exceeds the desk-scale cap " + std::to_string(cap));
}

/// All L-bit masks of the admissible per-subblock weights, ascending.
inline std::vector<std::uint64_t> subblock_masks(Family family, int L, int w) {
    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
        const int weight = std::popcount(mask);
        if (family == Family::cscc ? weight == w : weight >= w)
            masks.push_back(mask);
    }
    return masks;
}

} // namespace oracle_detail

/// Every word of the constrained space, in ascending numeric order.
inline std::vector<Word> enumerate_space(Family family, int m, int L, int w) {
    oracle_detail::require_bits(m, L, 24, "enumerate_space");
    if (w < 0 || w > L)
        throw domain_error("enumerate_space: weight must lie in [0, L]");
    const std::vector<std::uint64_t> masks =
        oracle_detail::subblock_masks(family, L, w);
    std::vector<Word> space;
    std::vector<Word> prefixes{0};
    for (int block = m - 1; block >= 0; --block) {
        std::vector<Word> next;
        next.reserve(prefixes.size() * masks.size());
        for (Word prefix : prefixes)
            for (std::uint64_t mask : masks)
                next.push_back(prefix | (mask << (block * L)));
        prefixes = std::move(next);
    }
    space = std::move(prefixes);
    return space;
}

/// Full-space covering program: one constraint per word of the space, one
/// variable per word reachable within the radius, 0/1 incidence by Hamming
/// distance. Bit-packed; to_covering() materializes the exact-matrix form.
struct FullLp {
    Family family = Family::cscc;
    int m = 0;
    int L = 0;
    int w = 0;
    int t = 0;
    std::vector<Word> space;   ///< rows
    std::vector<Word> targets; ///< columns, ascending
    std::vector<std::vector<std::uint64_t>> incidence; ///< row-major bit rows

    bool covers(std::size_t row, std::size_t col) const {
        return (incidence[row][col / 64] >> (col % 64)) & 1u;
    }

    CoveringProblem to_covering() const {
        CoveringProblem lp;
        lp.matrix.assign(space.size(),
                         std::vector<ExactInteger>(targets.size()));
        for (std::size_t i = 0; i < space.size(); ++i)
            for (std::size_t j = 0; j < targets.size(); ++j)
                if (covers(i, j))
                    lp.matrix[i][j] = 1;
        lp.objective.assign(targets.size(), ExactInteger(1));
        return lp;
    }
};

inline FullLp full_lp(Family family, int m, int L, int w, int t) {
    oracle_detail::require_bits(m, L, 14, "full_lp");
    if (w < 0 || w > L)
        throw domain_error("full_lp: weight must lie in [0, L]");
    if (t < 0)
        throw domain_error("full_lp: radius must be non-negative");
    FullLp lp;
    lp.family = family;
    lp.m = m;
    lp.L = L;
    lp.w = w;
    lp.t = t;
    lp.space = enumerate_space(family, m, L, w);

    const int n = m * L;
    std::vector<Word> errors;
    for (Word e = 0; e < (Word{1} << n); ++e)
        if (std::popcount(e) <= t)
            errors.push_back(e);

    std::vector<Word> targets;
    targets.reserve(lp.space.size() * errors.size());
    for (Word x : lp.space)
        for (Word e : errors)
            targets.push_back(x ^ e);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    lp.targets = std::move(targets);

    const std::size_t stripe = (lp.targets.size() + 63) / 64;
    lp.incidence.assign(lp.space.size(), std::vector<std::uint64_t>(stripe));
    for (std::size_t i = 0; i < lp.space.size(); ++i) {
        for (std::size_t j = 0; j < lp.targets.size(); ++j) {
            if (std::popcount(lp.space[i] ^ lp.targets[j]) <= t)
                lp.incidence[i][j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    return lp;
}

namespace oracle_detail {

/// Branch-and-bound maximum clique (greedy-coloring bound, deterministic
/// numeric vertex order) over an adjacency matrix in packed rows.
class CliqueSearch {
  public:
    CliqueSearch(const std::vector<std::vector<std::uint64_t>> &adj,
                 std::size_t n)
        : adj_(adj), n_(n) {}

    std::size_t run() {
        std::vector<std::uint32_t> all(n_);
        for (std::size_t v = 0; v < n_; ++v)
            all[v] = static_cast<std::uint32_t>(v);
        best_ = 0;
        depth_ = 0;
        expand(all);
        return best_;
    }

  private:
    bool connected(std::uint32_t a, std::uint32_t b) const {
        return (adj_[a][b / 64] >> (b % 64)) & 1u;
    }

    void expand(const std::vector<std::uint32_t> &candidates) {
        // Greedy coloring in numeric order; processing vertices by
        // non-decreasing color count makes the count a clique-size bound.
        std::vector<std::vector<std::uint32_t>> classes;
        for (std::uint32_t v : candidates) {
            std::size_t slot = 0;
            for (; slot < classes.size(); ++slot) {
                bool clash = false;
                for (std::uint32_t other : classes[slot]) {
                    if (connected(v, other)) {
                        clash = true;
                        break;
                    }
                }
                if (!clash)
                    break;
            }
            if (slot == classes.size())
                classes.emplace_back();
            classes[slot].push_back(v);
        }
        std::vector<std::uint32_t> order;
        std::vector<std::size_t> bound;
        order.reserve(candidates.size());
        bound.reserve(candidates.size());
        for (std::size_t color = 0; color < classes.size(); ++color) {
            for (std::uint32_t v : classes[color]) {
                order.push_back(v);
                bound.push_back(color + 1);
            }
        }

        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (depth_ + bound[idx] <= best_)
                return;
            const std::uint32_t v = order[idx];
            std::vector<std::uint32_t> next;
            next.reserve(idx);
            for (std::size_t k = 0; k < idx; ++k)
                if (connected(v, order[k]))
                    next.push_back(order[k]);
            ++depth_;
            if (next.empty())
                best_ = std::max(best_, depth_);
            else
                expand(next);
            --depth_;
        }
    }

    const std::vector<std::vector<std::uint64_t>> &adj_;
    std::size_t n_;
    std::size_t best_ = 0;
    std::size_t depth_ = 0;
};

} // namespace oracle_detail

/// Exact maximum code size by branch-and-bound over the distance-at-least-d
/// compatibility graph of the constrained space.
inline std::size_t exhaustive_code_size(Family family, int m, int L, int w,
                                        int d) {
    if (d < 1)
        throw domain_error("exhaustive_code_size: distance must be positive");
    if (d > m * L)
        throw domain_error("exhaustive_code_size: distance exceeds the code "
                           "length");
    const std::vector<Word> space = enumerate_space(family, m, L, w);
    if (space.size() > (std::size_t{1} << 14))
        throw cap_error("exhaustive_code_size: space larger than 2^14 words");
    if (d == 1)
        return space.size(); // distinct words always differ somewhere
    const std::size_t n = space.size();
    const std::size_t stripe = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> adj(
        n, std::vector<std::uint64_t>(stripe));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::popcount(space[i] ^ space[j]) >= d) {
                adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
                adj[j][i / 64] |= std::uint64_t{1} << (i % 64);
            }
        }
    }
    return oracle_detail::CliqueSearch(adj, n).run();
}

/// Sorted block-weight profile of a word.
inline WeightProfile word_profile(Word x, int m, int L) {
    const std::uint64_t block_mask = (L == 64) ? ~std::uint64_t{0}
                                               : ((std::uint64_t{1} << L) - 1);
    WeightProfile weights(static_cast<std::size_t>(m));
    for (int block = 0; block < m; ++block)
        weights[static_cast<std::size_t>(block)] =
            std::popcount((x >> (block * L)) & block_mask);
    std::sort(weights.begin(), weights.end(), std::greater<int>());
    return weights;
}

/// Prove that the brute-force program attains exactly the reduced optimum.
/// The reduced optimal pair is lifted to word space (each target inherits its
/// profile's covering value; each constraint word takes its profile's dual
/// mass split evenly across the orbit) and both feasibilities plus the
/// objective match are checked exactly against the brute-force incidence
/// matrix. Weak duality then pins the full optimum to the reduced value, so a
/// true result certifies equality without re-solving the large program; any
/// defect in the index sets, counts, or orbit sizes fails the inequalities.
inline bool reduction_is_lossless(const FullLp &full, const ReducedLP &reduced) {
    const LpSolution sol = solve_min(reduced);

    std::map<WeightProfile, std::size_t> row_index, col_index;
    for (std::size_t i = 0; i < reduced.rows.profiles.size(); ++i)
        row_index.emplace(reduced.rows.profiles[i], i);
    for (std::size_t j = 0; j < reduced.cols.profiles.size(); ++j)
        col_index.emplace(reduced.cols.profiles[j], j);

    std::vector<ExactRational> y(full.targets.size());
    for (std::size_t j = 0; j < full.targets.size(); ++j) {
        const auto it = col_index.find(word_profile(full.targets[j], full.m,
                                                    full.L));
        if (it != col_index.end())
            y[j] = sol.primal[it->second];
    }
    std::vector<ExactRational> x(full.space.size());
    for (std::size_t i = 0; i < full.space.size(); ++i) {
        const WeightProfile profile =
            word_profile(full.space[i], full.m, full.L);
        const auto it = row_index.find(profile);
        if (it == row_index.end())
            return false; // a space word outside the constraint index set
        x[i] = sol.dual[it->second] / ExactRational(orbit_size(profile, full.L));
    }

    ExactRational primal_total, dual_total;
    for (const ExactRational &yj : y)
        primal_total += yj;
    for (const ExactRational &xi : x)
        dual_total += xi;
    if (primal_total != sol.value || dual_total != sol.value)
        return false;

    for (std::size_t i = 0; i < full.space.size(); ++i) {
        ExactRational cover;
        for (std::size_t j = 0; j < full.targets.size(); ++j)
            if (full.covers(i, j))
                cover += y[j];
        if (cover < 1)
            return false;
    }
    for (std::size_t j = 0; j < full.targets.size(); ++j) {
        ExactRational load;
        for (std::size_t i = 0; i < full.space.size(); ++i)
            if (full.covers(i, j))
                load += x[i];
        if (load > 1)
            return false;
    }
    return true;
}

/// Direct count of the words of one weight-profile orbit within Hamming
/// radius t of a fixed word: the ground truth for constrained_ball_size.
inline ExactInteger exhaustive_ball_size(Word x, int m, int L,
                                         const WeightProfile &u, int t) {
    oracle_detail::require_bits(m, L, 20, "exhaustive_ball_size");
    require_profile(u, L, "exhaustive_ball_size");
    if (static_cast<int>(u.size()) != m)
        throw domain_error("exhaustive_ball_size: profile length must equal m");
    if (t < 0)
        throw domain_error("exhaustive_ball_size: radius must be non-negative");
    const int n = m * L;
    if (n < 64 && x >= (Word{1} << n))
        throw domain_error("exhaustive_ball_size: word wider than m*L bits");
    const std::uint64_t block_mask = (L == 64) ? ~std::uint64_t{0}
                                               : ((std::uint64_t{1} << L) - 1);
    ExactInteger count = 0;
    WeightProfile weights(static_cast<std::size_t>(m));
    for (Word y = 0; y < (Word{1} << n); ++y) {
        if (std::popcount(x ^ y) > t)
            continue;
        for (int block = 0; block < m; ++block)
            weights[static_cast<std::size_t>(block)] =
                std::popcount((y >> (block * L)) & block_mask);
        std::sort(weights.begin(), weights.end(), std::greater<int>());
        if (weights == u)
            ++count;
    }
    return count;
}

} // namespace sbb
