#pragma once

#include <string>

#include "sbb/lp.hpp"

/// Sphere-packing style upper bounds for subblock-energy-constrained codes:
/// binary words of m subblocks of length L, every subblock of weight >= w.
namespace sbb {

struct SeccInstance {
    int m = 0;
    int L = 0;
    int w = 0;
    int d = 0;

    int t() const { return (d - 1) / 2; }
};

inline void validate(const SeccInstance &inst) {
    if (inst.m < 1)
        throw domain_error("secc: need at least one subblock (m >= 1)");
    if (inst.L < 1)
        throw domain_error("secc: subblock length must be positive");
    if (inst.w < 0 || inst.w > inst.L)
        throw domain_error("secc: weight threshold must lie in [0, L]");
    if (inst.d < 1)
        throw domain_error("secc: minimum distance must be positive");
    if (inst.d > inst.m * inst.L)
        throw domain_error("secc: minimum distance exceeds the code length");
}

/// Orbit-reduced covering program for the at-least-w family, by correction
/// radius: one constraint per admissible profile, one variable per profile
/// reachable within radius t.
inline ReducedLP secc_reduced_lp(int m, int L, int w, int t) {
    if (m < 1 || L < 1 || w < 0 || w > L || t < 0)
        throw domain_error("secc_reduced_lp: need m, L >= 1, 0 <= w <= L, "
                           "t >= 0");
    ReducedLP lp;
    lp.rows = enumerate_secc_rows(m, L, w);
    lp.cols = enumerate_secc_cols(m, L, w, t);
    lp.matrix.reserve(lp.rows.profiles.size());
    for (const WeightProfile &v : lp.rows.profiles) {
        std::vector<ExactInteger> row;
        row.reserve(lp.cols.profiles.size());
        for (const WeightProfile &u : lp.cols.profiles)
            row.push_back(constrained_ball_size(v, u, L, t));
        lp.matrix.push_back(std::move(row));
    }
    lp.objective.reserve(lp.cols.profiles.size());
    for (const WeightProfile &u : lp.cols.profiles)
        lp.objective.push_back(orbit_size(u, L));
    return lp;
}

inline ReducedLP secc_reduced_lp(const SeccInstance &inst) {
    validate(inst);
    return secc_reduced_lp(inst.m, inst.L, inst.w, inst.t());
}

inline ExactRational secc_gsp_bound(const SeccInstance &inst) {
    return solve_min(secc_reduced_lp(inst)).value;
}

/// Bound plus the optimal covering vector (used when a certificate or the
/// dual is wanted alongside the value).
inline LpSolution secc_gsp_solution(const SeccInstance &inst) {
    return solve_min(secc_reduced_lp(inst));
}

/// Closed form for w = L-1, single-error correction, split on m mod 4.
/// Valid for L >= m/2.
inline ExactRational secc_closed_form_wL1(int m, int L) {
    if (m < 1)
        throw domain_error("secc_closed_form_wL1: need m >= 1");
    if (L < 1 || 2 * L < m)
        throw domain_error("secc_closed_form_wL1: requires L >= m/2");
    const ExactInteger base(L);
    ExactRational total;
    auto term = [&](int k_low, int k_high, int denom) {
        return ratio(binom(m, k_low) * pow(base, static_cast<unsigned>(k_low)) +
                         binom(m, k_high) * pow(base, static_cast<unsigned>(k_high)),
                     ExactInteger(denom));
    };
    switch (m % 4) {
    case 0:
        total = 1;
        for (int i = 0; i < m / 4; ++i)
            total += term(4 * i + 2, 4 * i + 3, 4 * i + 4);
        return total;
    case 1:
        total = 1;
        for (int i = 0; i < m / 4; ++i)
            total += term(4 * i + 3, 4 * i + 4, 4 * i + 5);
        return total;
    case 2:
        for (int i = 0; i <= m / 4; ++i)
            total += term(4 * i, 4 * i + 1, 4 * i + 2);
        return total;
    default:
        for (int i = 0; i <= m / 4; ++i)
            total += term(4 * i + 1, 4 * i + 2, 4 * i + 3);
        return total;
    }
}

/// Closed form for m = 1, single-error correction, split on (L-w) mod 4.
/// Valid for w >= L/2. The residue-1 branch sums up to floor((L-w)/4)
/// exclusive; the last increment the printed series suggests would overshoot
/// the exact program value, and dropping it restores equality with the LP on
/// every instance (see README notes on closed-form edge cases).
inline ExactRational secc_closed_form_m1(int L, int w) {
    if (L < 1)
        throw domain_error("secc_closed_form_m1: subblock length must be positive");
    if (w < 0 || w > L)
        throw domain_error("secc_closed_form_m1: weight must lie in [0, L]");
    if (2 * w < L)
        throw domain_error("secc_closed_form_m1: requires w >= L/2");
    const int q = L - w;
    ExactRational total;
    auto term = [&](int k_low, int k_high, int denom) {
        return ratio(binom(L, k_low) + binom(L, k_high), ExactInteger(denom));
    };
    switch (q % 4) {
    case 0:
        total = 1;
        for (int i = 0; i < q / 4; ++i)
            total += term(4 * i + 2, 4 * i + 3, 4 * i + 4);
        return total;
    case 1:
        total = 1;
        for (int i = 0; i < q / 4; ++i)
            total += term(4 * i + 3, 4 * i + 4, 4 * i + 5);
        return total;
    case 2:
        for (int i = 0; i <= q / 4; ++i)
            total += term(4 * i, 4 * i + 1, 4 * i + 2);
        return total;
    default:
        for (int i = 0; i <= q / 4; ++i)
            total += term(4 * i + 1, 4 * i + 2, 4 * i + 3);
        return total;
    }
}

namespace detail {

/// Profile with i leading entries L and m-i trailing entries L-1.
inline WeightProfile top_heavy_profile(int i, int m, int L) {
    WeightProfile u(static_cast<std::size_t>(m), L - 1);
    for (int k = 0; k < i; ++k)
        u[static_cast<std::size_t>(k)] = L;
    return u;
}

} // namespace detail

/// Sparse optimality certificate for the w = L-1, t = 1 program, split on
/// m mod 4. Pairs with secc_reduced_lp({m, L, L-1, 3}).
inline Certificate build_certificate_table1(int m, int L) {
    if (m < 1)
        throw domain_error("build_certificate_table1: need m >= 1");
    if (L < 1 || 2 * L < m)
        throw domain_error("build_certificate_table1: requires L >= m/2");
    auto prof = [&](int i) { return detail::top_heavy_profile(i, m, L); };
    const ExactInteger base(L);
    auto power_count = [&](int k) {
        return binom(m, k) * pow(base, static_cast<unsigned>(k));
    };
    Certificate cert;
    switch (m % 4) {
    case 0: {
        cert.primal[prof(m - 1)] = ratio(ExactInteger(1), ExactInteger(m) * L);
        for (int i = 0; i < m / 4; ++i) {
            cert.primal[prof(m - 4 * i - 2)] = ratio(1, 4 * i + 4);
            cert.primal[prof(m - 4 * i - 3)] = ratio(1, 4 * i + 4);
        }
        cert.dual[prof(m)] = 1;
        for (int i = 0; i < m / 4; ++i) {
            const ExactRational a = ratio(power_count(4 * i + 2),
                                          ExactInteger(4 * i + 3));
            cert.dual[prof(m - 4 * i - 3)] = a;
            cert.dual[prof(m - 4 * i - 4)] =
                (ExactRational(power_count(4 * i + 3)) - a) / (4 * i + 4);
        }
        break;
    }
    case 1: {
        cert.primal[prof(m)] = 1;
        for (int i = 0; i < m / 4; ++i) {
            cert.primal[prof(m - 4 * i - 3)] = ratio(1, 4 * i + 5);
            cert.primal[prof(m - 4 * i - 4)] = ratio(1, 4 * i + 5);
        }
        cert.dual[prof(m)] = 1;
        for (int i = 0; i < m / 4; ++i) {
            const ExactRational a = ratio(power_count(4 * i + 3),
                                          ExactInteger(4 * i + 4));
            cert.dual[prof(m - 4 * i - 4)] = a;
            cert.dual[prof(m - 4 * i - 5)] =
                (ExactRational(power_count(4 * i + 4)) - a) / (4 * i + 5);
        }
        break;
    }
    case 2: {
        for (int i = 0; i <= m / 4; ++i) {
            cert.primal[prof(m - 4 * i)] = ratio(1, 4 * i + 2);
            cert.primal[prof(m - 4 * i - 1)] = ratio(1, 4 * i + 2);
        }
        for (int i = 0; i <= m / 4; ++i) {
            const ExactRational a = ratio(power_count(4 * i),
                                          ExactInteger(4 * i + 1));
            cert.dual[prof(m - 4 * i - 1)] = a;
            cert.dual[prof(m - 4 * i - 2)] =
                (ExactRational(power_count(4 * i + 1)) - a) / (4 * i + 2);
        }
        break;
    }
    default: {
        for (int i = 0; i <= m / 4; ++i) {
            cert.primal[prof(m - 4 * i - 1)] = ratio(1, 4 * i + 3);
            cert.primal[prof(m - 4 * i - 2)] = ratio(1, 4 * i + 3);
        }
        for (int i = 0; i <= m / 4; ++i) {
            const ExactRational a = ratio(power_count(4 * i + 1),
                                          ExactInteger(4 * i + 2));
            cert.dual[prof(m - 4 * i - 2)] = a;
            cert.dual[prof(m - 4 * i - 3)] =
                (ExactRational(power_count(4 * i + 2)) - a) / (4 * i + 3);
        }
        break;
    }
    }
    return cert;
}

/// Sparse optimality certificate for the m = 1, t = 1 program, split on
/// (L-w) mod 4. Profiles are singletons. Pairs with
/// secc_reduced_lp({1, L, w, 3}).
inline Certificate build_certificate_table2(int L, int w) {
    if (L < 1)
        throw domain_error("build_certificate_table2: subblock length must be "
                           "positive");
    if (w < 0 || w > L)
        throw domain_error("build_certificate_table2: weight must lie in [0, L]");
    if (2 * w < L)
        throw domain_error("build_certificate_table2: requires w >= L/2");
    auto prof = [](int k) { return WeightProfile{k}; };
    const int q = L - w;
    Certificate cert;
    switch (q % 4) {
    case 0: {
        cert.primal[prof(L)] = 1;
        for (int i = 0; i < q / 4; ++i) {
            cert.primal[prof(L - 4 * i - 2)] = ratio(1, 4 * i + 4);
            cert.primal[prof(L - 4 * i - 3)] = ratio(1, 4 * i + 4);
        }
        cert.dual[prof(L)] = 1;
        for (int i = 0; i < q / 4; ++i) {
            const ExactRational a = ratio(binom(L, 4 * i + 2),
                                          ExactInteger(4 * i + 3));
            cert.dual[prof(L - 4 * i - 3)] = a;
            cert.dual[prof(L - 4 * i - 4)] =
                (ExactRational(binom(L, 4 * i + 3)) - a) / (4 * i + 4);
        }
        break;
    }
    case 1: {
        cert.primal[prof(L)] = 1;
        for (int i = 0; i < q / 4; ++i) {
            cert.primal[prof(L - 4 * i - 3)] = ratio(1, 4 * i + 5);
            cert.primal[prof(L - 4 * i - 4)] = ratio(1, 4 * i + 5);
        }
        cert.dual[prof(L)] = 1;
        for (int i = 0; i < q / 4; ++i) {
            const ExactRational a = ratio(binom(L, 4 * i + 3),
                                          ExactInteger(4 * i + 4));
            cert.dual[prof(L - 4 * i - 4)] = a;
            cert.dual[prof(L - 4 * i - 5)] =
                (ExactRational(binom(L, 4 * i + 4)) - a) / (4 * i + 5);
        }
        break;
    }
    case 2: {
        for (int i = 0; i <= q / 4; ++i) {
            cert.primal[prof(L - 4 * i)] = ratio(1, 4 * i + 2);
            cert.primal[prof(L - 4 * i - 1)] = ratio(1, 4 * i + 2);
        }
        for (int i = 0; i <= q / 4; ++i) {
            const ExactRational a = ratio(binom(L, 4 * i),
                                          ExactInteger(4 * i + 1));
            cert.dual[prof(L - 4 * i - 1)] = a;
            cert.dual[prof(L - 4 * i - 2)] =
                (ExactRational(binom(L, 4 * i + 1)) - a) / (4 * i + 2);
        }
        break;
    }
    default: {
        for (int i = 0; i <= q / 4; ++i) {
            cert.primal[prof(L - 4 * i - 1)] = ratio(1, 4 * i + 3);
            cert.primal[prof(L - 4 * i - 2)] = ratio(1, 4 * i + 3);
        }
        for (int i = 0; i <= q / 4; ++i) {
            const ExactRational a = ratio(binom(L, 4 * i + 1),
                                          ExactInteger(4 * i + 2));
            cert.dual[prof(L - 4 * i - 2)] = a;
            cert.dual[prof(L - 4 * i - 3)] =
                (ExactRational(binom(L, 4 * i + 2)) - a) / (4 * i + 3);
        }
        break;
    }
    }
    return cert;
}

} // namespace sbb
