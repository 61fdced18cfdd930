#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sbb/combinatorics.hpp"
#include "sbb/core.hpp"
#include "sbb/exact.hpp"

/// Asymptotic rate bounds (bits per channel use, base-2 logs throughout) and
/// the tabulation plumbing behind the rate-comparison figures.
namespace sbb {

/// Binary entropy in bits, with h(0) = h(1) = 0 by continuity.
inline double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw domain_error("binary_entropy: argument must lie in [0, 1]");
    if (x == 0.0 || x == 1.0)
        return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Largest relative distance with nonempty admissible profiles, 2w(1-w).
inline double delta_star(double omega) {
    if (!(omega >= 0.0 && omega <= 1.0))
        throw domain_error("delta_star: relative weight must lie in [0, 1]");
    return 2.0 * omega * (1.0 - omega);
}

/// log2 of binom(n, k) via log-gamma; stable for n in the thousands.
inline double log2_binom(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        throw domain_error("log2_binom: need 0 <= k <= n");
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
            std::lgamma(n - k + 1.0)) /
           std::log(2.0);
}

/// Asymptotic sphere-packing exponent for the constant-composition family.
/// With us = delta*L/4, interpolates between the floor and ceiling integer
/// radii (weights 1+us-ceil(us) and ceil(us)-us) and subtracts the entropy of
/// the fractional part. Defined for 0 < delta < delta_star(w/L).
inline double gamma_sp(int L, int w, double delta) {
    if (L < 1 || w < 0 || w > L)
        throw domain_error("gamma_sp: need L >= 1 and 0 <= w <= L");
    const double ds = delta_star(static_cast<double>(w) / L);
    if (!(delta > 0.0 && delta < ds))
        throw domain_error("gamma_sp: relative distance outside (0, delta*)");
    const double us = delta * L / 4.0;
    const int lo = static_cast<int>(std::floor(us));
    const int hi = static_cast<int>(std::ceil(us));
    const double frac = hi - us; // weight attached to the floor radius
    return log2_binom(L, w) / L -
           (1.0 - frac) / L * log2_binom(w, hi) -
           frac / L * log2_binom(w, lo) -
           frac / L * log2_binom(L - w, lo) -
           (1.0 - frac) / L * log2_binom(L - w, hi) -
           binary_entropy(frac) / L;
}

/// Sharper exponent from the two-radius refinement, defined on the window
/// 2/L < delta < 6/L with L >= w+2 and w >= 1.
inline double gamma_sp_acute(int L, int w, double delta) {
    if (L < 1 || w < 1 || L < w + 2)
        throw domain_error("gamma_sp_acute: need 1 <= w <= L-2");
    if (!(delta > 2.0 / L && delta < 6.0 / L))
        throw domain_error("gamma_sp_acute: relative distance outside "
                           "(2/L, 6/L)");
    const double pair_choices =
        std::log2(static_cast<double>(binom(L - w, 2)) * w);
    return log2_binom(L, w + 1) / L -
           (delta / 4.0 - 1.0 / (2.0 * L)) * pair_choices -
           binary_entropy(L * delta / 4.0 - 0.5) / L -
           (3.0 / (2.0 * L) - delta / 4.0) * std::log2(static_cast<double>(L - w));
}

namespace detail {

/// Exact tail sum  sum_{j=w}^{L} binom(L, j).
inline ExactInteger binom_tail(int L, int w) {
    ExactInteger total = 0;
    for (int j = std::max(w, 0); j <= L; ++j)
        total += binom(L, j);
    return total;
}

} // namespace detail

/// All rate quantities for the at-least-w family at one grid point. Fields
/// are absent exactly where the defining expression leaves its domain.
struct SeccRateBounds {
    std::optional<double> r1;        ///< first-moment bound, needs delta < 2/L, w < L
    std::optional<double> nu;        ///< improvement term, needs 0 < w < L as well
    std::optional<int> alpha_hat;    ///< 1 iff nu > 0
    std::optional<double> bound;     ///< min(r1, r1 - nu)
    std::optional<double> sigma_sp;  ///< alternate exponent, needs delta <= 4/L, w < L
};

inline SeccRateBounds secc_rate_bounds(int L, int w, double delta) {
    if (L < 1 || w < 0 || w > L)
        throw domain_error("secc_rate_bounds: need L >= 1 and 0 <= w <= L");
    if (!(delta > 0.0 && delta < 1.0))
        throw domain_error("secc_rate_bounds: relative distance outside (0, 1)");
    SeccRateBounds out;
    const double log_tail_w = (w <= L) ? log2_value(detail::binom_tail(L, w)) : 0.0;
    if (delta < 2.0 / L && w < L) {
        out.r1 = log_tail_w / L - binary_entropy(delta * L / 2.0) / L -
                 (delta / 2.0) * std::log2(static_cast<double>(L - w));
        if (w > 0) {
            const double log_ratio =
                log2_value(ratio(detail::binom_tail(L, w - 1),
                                 detail::binom_tail(L, w)));
            out.nu = (delta / 2.0) *
                         std::log2(static_cast<double>(L) / (L - w)) -
                     log_ratio / L;
            out.alpha_hat = (*out.nu > 0.0) ? 1 : 0;
            out.bound = *out.r1 - (*out.alpha_hat ? *out.nu : 0.0);
        } else {
            out.bound = out.r1;
        }
    }
    if (delta <= 4.0 / L && w < L) {
        out.sigma_sp = log_tail_w / L - binary_entropy(delta * L / 4.0) / L -
                       (delta / 4.0) *
                           std::log2(static_cast<double>(L - w) * (w + 1));
    }
    return out;
}

/// Relative distance where the improvement term changes sign: below it the
/// first-moment bound stands alone, above it the subtracted variant wins.
inline double secc_crossover_delta(int L, int w) {
    if (L < 1 || w <= 0 || w >= L)
        throw domain_error("secc_crossover_delta: need 0 < w < L");
    const double log_ratio = log2_value(
        ratio(detail::binom_tail(L, w - 1), detail::binom_tail(L, w)));
    return 2.0 * log_ratio /
           (L * std::log2(static_cast<double>(L) / (L - w)));
}

/// Inclusive arithmetic grid of relative distances held in exact micro-units
/// (1e-6) so that grids are reproducible and never drift.
struct DeltaGrid {
    long long start_micro = 0;
    long long stop_micro = 0;
    long long step_micro = 0;

    std::vector<long long> values() const {
        std::vector<long long> out;
        if (step_micro <= 0)
            return out;
        for (long long v = start_micro; v <= stop_micro; v += step_micro)
            out.push_back(v);
        return out;
    }
};

namespace detail {

/// Parse a non-negative decimal literal with at most six fractional digits
/// into micro-units.
inline long long parse_micro(const std::string &text) {
    if (text.empty())
        throw domain_error("delta grid: empty number");
    std::size_t dot = text.find('.');
    const std::string whole = (dot == std::string::npos) ? text : text.substr(0, dot);
    std::string frac = (dot == std::string::npos) ? "" : text.substr(dot + 1);
    if (frac.size() > 6)
        throw domain_error("delta grid: more than six decimal places in '" +
                           text + "'");
    for (char ch : whole)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw domain_error("delta grid: malformed number '" + text + "'");
    for (char ch : frac)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw domain_error("delta grid: malformed number '" + text + "'");
    frac.resize(6, '0');
    long long value = 0;
    for (char ch : whole)
        value = value * 10 + (ch - '0');
    for (char ch : frac)
        value = value * 10 + (ch - '0');
    return value;
}

} // namespace detail

/// Parse "start:stop:step" (decimal relative distances) into a grid.
inline DeltaGrid parse_delta_range(const std::string &text) {
    const std::size_t first = text.find(':');
    const std::size_t second =
        (first == std::string::npos) ? std::string::npos
                                     : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw domain_error("delta grid: expected start:stop:step, got '" +
                           text + "'");
    DeltaGrid grid;
    grid.start_micro = detail::parse_micro(text.substr(0, first));
    grid.stop_micro = detail::parse_micro(text.substr(first + 1,
                                                      second - first - 1));
    grid.step_micro = detail::parse_micro(text.substr(second + 1));
    if (grid.step_micro <= 0)
        throw domain_error("delta grid: step must be positive");
    return grid;
}

/// One tabulated grid point; cells align with RateTable::columns and are
/// absent where the corresponding formula is out of domain.
struct RateRow {
    long long delta_micro = 0;
    std::vector<std::optional<double>> cells;
};

struct RateTable {
    Family family = Family::cscc;
    int L = 0;
    int w = 0;
    std::vector<std::string> columns;
    std::vector<RateRow> rows;
};

/// Evaluate every family formula over the grid; out-of-domain points become
/// absent cells rather than errors.
inline RateTable make_rate_table(Family family, int L, int w,
                                 const DeltaGrid &grid) {
    if (L < 1 || w < 0 || w > L)
        throw domain_error("rate_table: need L >= 1 and 0 <= w <= L");
    RateTable table;
    table.family = family;
    table.L = L;
    table.w = w;
    table.columns = (family == Family::cscc)
                        ? std::vector<std::string>{"gamma_sp", "gamma_sp_acute"}
                        : std::vector<std::string>{"r1", "r1_minus_nu",
                                                   "sigma_sp"};
    for (long long micro : grid.values()) {
        RateRow row;
        row.delta_micro = micro;
        const double delta = static_cast<double>(micro) * 1e-6;
        if (family == Family::cscc) {
            std::optional<double> plain, acute;
            try {
                plain = gamma_sp(L, w, delta);
            } catch (const domain_error &) {
            }
            try {
                acute = gamma_sp_acute(L, w, delta);
            } catch (const domain_error &) {
            }
            row.cells = {plain, acute};
        } else {
            SeccRateBounds b = secc_rate_bounds(L, w, delta);
            std::optional<double> diff;
            if (b.r1 && b.nu)
                diff = *b.r1 - *b.nu;
            row.cells = {b.r1, diff, b.sigma_sp};
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// Render one or more tables (same family and grid, varying w) as CSV. With
/// several tables a leading w column is added; absent cells print as NA.
inline std::string render_csv(const std::vector<RateTable> &tables) {
    if (tables.empty())
        throw domain_error("render_csv: no tables");
    std::ostringstream out;
    const bool multi = tables.size() > 1;
    if (multi)
        out << "w,";
    out << "delta";
    for (const std::string &name : tables.front().columns)
        out << ',' << name;
    out << '\n';
    char buffer[64];
    for (const RateTable &table : tables) {
        for (const RateRow &row : table.rows) {
            if (multi)
                out << table.w << ',';
            out << decimal_string(ratio(ExactInteger(row.delta_micro),
                                        ExactInteger(1000000)),
                                  6);
            for (const std::optional<double> &cell : row.cells) {
                if (cell) {
                    std::snprintf(buffer, sizeof(buffer), "%.6f", *cell);
                    out << ',' << buffer;
                } else {
                    out << ",NA";
                }
            }
            out << '\n';
        }
    }
    return out.str();
}

} // namespace sbb
