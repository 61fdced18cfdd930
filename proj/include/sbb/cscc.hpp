#pragma once

#include <string>

#include "sbb/lp.hpp"

/// Sphere-packing style upper bounds for constant-subblock-composition codes:
/// binary words of m subblocks of length L, every subblock of weight exactly w.
namespace sbb {

struct CsccInstance {
    int m = 0;
    int L = 0;
    int w = 0;
    int d = 0;

    /// Correctable-error radius for minimum distance d.
    int t() const { return (d - 1) / 2; }
};

inline void validate(const CsccInstance &inst) {
    if (inst.m < 1)
        throw domain_error("cscc: need at least one subblock (m >= 1)");
    if (inst.L < 1)
        throw domain_error("cscc: subblock length must be positive");
    if (inst.w < 0 || inst.w > inst.L)
        throw domain_error("cscc: subblock weight must lie in [0, L]");
    if (inst.d < 1)
        throw domain_error("cscc: minimum distance must be positive");
    if (inst.d > inst.m * inst.L)
        throw domain_error("cscc: minimum distance exceeds the code length");
}

/// Orbit-reduced covering program for the constant-composition family, by
/// correction radius. The constraint space collapses to the single profile
/// (w,...,w); the columns are the profiles reachable from it within radius t,
/// in canonical order.
inline ReducedLP cscc_reduced_lp(int m, int L, int w, int t) {
    if (m < 1 || L < 1 || w < 0 || w > L || t < 0)
        throw domain_error("cscc_reduced_lp: need m, L >= 1, 0 <= w <= L, "
                           "t >= 0");
    ReducedLP lp;
    lp.rows = OrbitIndexSet{m, L, IndexKind::cscc_ball,
                            {WeightProfile(static_cast<std::size_t>(m), w)}};
    lp.cols = enumerate_cscc_profiles(m, L, w, t);
    const WeightProfile &center = lp.rows.profiles.front();
    lp.matrix.assign(1, {});
    lp.matrix.front().reserve(lp.cols.profiles.size());
    lp.objective.reserve(lp.cols.profiles.size());
    for (const WeightProfile &u : lp.cols.profiles) {
        lp.matrix.front().push_back(constrained_ball_size(center, u, L, t));
        lp.objective.push_back(orbit_size(u, L));
    }
    return lp;
}

inline ReducedLP cscc_reduced_lp(const CsccInstance &inst) {
    validate(inst);
    return cscc_reduced_lp(inst.m, inst.L, inst.w, inst.t());
}

/// Generalized sphere-packing upper bound, computed exactly. With a single
/// constraint the optimum is a plain minimum ratio; the full simplex route is
/// kept available for cross-checks via solve_min(cscc_reduced_lp(...)).
inline ExactRational cscc_gsp_bound(const CsccInstance &inst) {
    return min_ratio(cscc_reduced_lp(inst));
}

/// Closed form of the bound for single-error correction (d in {3,4}):
///     binom(L,w-1) binom(L,w)^{m-1} / w          if 2w <= L,
///     binom(L,w+1) binom(L,w)^{m-1} / (L-w)      otherwise.
/// Requires 1 <= w <= L-1 so both neighbour weights exist.
inline ExactRational cscc_closed_form_t1(int m, int L, int w) {
    CsccInstance inst{m, L, w, 3};
    validate(inst);
    if (w < 1 || w > L - 1)
        throw domain_error("cscc_closed_form_t1: weight must satisfy "
                           "1 <= w <= L-1");
    const ExactInteger common = pow(ExactInteger(binom(L, w)), m - 1);
    if (2 * w <= L)
        return ratio(binom(L, w - 1) * common, ExactInteger(w));
    return ratio(binom(L, w + 1) * common, ExactInteger(L - w));
}

/// Closed form of the bound for double-error correction (d in {5,6}):
/// a three-way split by how (m+1)w compares with L+2 and mL-2. Requires
/// m >= 2 and 2 <= w <= L-2 so every weight referenced below exists.
inline ExactRational cscc_closed_form_t2(int m, int L, int w) {
    CsccInstance inst{m, L, w, 5};
    validate(inst);
    if (m < 2)
        throw domain_error("cscc_closed_form_t2: need at least two subblocks");
    if (w < 2 || w > L - 2)
        throw domain_error("cscc_closed_form_t2: weight must satisfy "
                           "2 <= w <= L-2");
    const ExactInteger common = pow(ExactInteger(binom(L, w)), m - 2);
    if ((m + 1) * w <= L + 2) {
        const ExactInteger low = binom(L, w - 1);
        return ratio(low * low * common, ExactInteger(w) * w);
    }
    if ((m + 1) * w >= m * L - 2) {
        const ExactInteger high = binom(L, w + 1);
        return ratio(high * high * common,
                     ExactInteger(L - w) * (L - w));
    }
    return ratio(pow(ExactInteger(binom(L, w)), m),
                 ExactInteger(1) + ExactInteger(m) * w * (L - w));
}

/// Closed-form generalized bound for larger distances 2m < d <= 6m (radius
/// budget spread across subblocks): with te = floor((t - m) / 2),
///   binom(L,w+1)^m / [ binom(m,te) (binom(L-w,2) w)^te (L-w)^{m-te} ].
inline ExactRational cscc_gen_codesize_bound(const CsccInstance &inst) {
    validate(inst);
    if (inst.d <= 2 * inst.m || inst.d > 6 * inst.m)
        throw domain_error("cscc_gen_codesize_bound: distance must satisfy "
                           "2m < d <= 6m");
    if (inst.L < inst.w + 2)
        throw domain_error("cscc_gen_codesize_bound: need L >= w + 2");
    const int te = (inst.t() - inst.m) / 2;
    if (inst.w == 0 && te > 0)
        throw domain_error("cscc_gen_codesize_bound: zero subblock weight "
                           "leaves no room for the doubled-error budget");
    const ExactInteger numerator = pow(ExactInteger(binom(inst.L, inst.w + 1)),
                                       inst.m);
    ExactInteger denominator = binom(inst.m, te);
    denominator *= pow(ExactInteger(binom(inst.L - inst.w, 2)) * inst.w, te);
    denominator *= pow(ExactInteger(inst.L - inst.w), inst.m - te);
    return ratio(numerator, denominator);
}

} // namespace sbb
