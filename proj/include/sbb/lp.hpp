#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sbb/orbits.hpp"

/// Exact rational solving of covering linear programs
///     min c.y   s.t.  M y >= 1,  y >= 0,
/// plus verification of primal-dual optimality certificates.
namespace sbb {

/// A bare covering program: constraint matrix (rows x cols) and positive
/// objective coefficients, right-hand side implicitly all-ones.
struct CoveringProblem {
    std::vector<std::vector<ExactInteger>> matrix;
    std::vector<ExactInteger> objective;
};

/// The orbit-reduced program: a covering program whose rows and columns are
/// indexed by weight profiles and whose objective is the orbit sizes.
struct ReducedLP {
    OrbitIndexSet rows;
    OrbitIndexSet cols;
    std::vector<std::vector<ExactInteger>> matrix;
    std::vector<ExactInteger> objective;
};

/// Optimal value together with certified optimal primal and dual vectors.
struct LpSolution {
    ExactRational value;
    std::vector<ExactRational> primal; ///< per column of M
    std::vector<ExactRational> dual;   ///< per row of M
};

/// Sparse optimality certificate: primal (Y*) and dual (X*) entries keyed by
/// weight profile; unlisted entries are zero.
struct Certificate {
    std::map<WeightProfile, ExactRational> primal;
    std::map<WeightProfile, ExactRational> dual;
};

enum class Verdict { valid, primal_infeasible, dual_infeasible, gap };

inline const char *to_string(Verdict v) {
    switch (v) {
    case Verdict::valid:
        return "valid";
    case Verdict::primal_infeasible:
        return "primal-infeasible";
    case Verdict::dual_infeasible:
        return "dual-infeasible";
    default:
        return "gap";
    }
}

struct VerifyResult {
    Verdict verdict = Verdict::gap;
    ExactRational primal_value;
    ExactRational dual_value;
};

namespace detail {

/// Exact primal simplex on the dual program  max 1.x  s.t.  M^T x <= c,
/// x >= 0, starting from the (always feasible, c >= 0) all-slack basis with
/// Bland's anti-cycling rule. The tableau is kept integral with one common
/// denominator (fraction-free pivoting); every division below is exact.
///
/// At optimality the slack reduced costs are an optimal covering vector y and
/// the basic rows carry an optimal dual x, so strong duality is obtained in
/// one solve. Throws solver_error on structural impossibilities (a row of M
/// with no positive entry makes the covering constraint unsatisfiable).
inline LpSolution solve_covering(const std::vector<std::vector<ExactInteger>> &M,
                                 const std::vector<ExactInteger> &c) {
    const std::size_t R = M.size();    // covering constraints = dual variables
    const std::size_t C = c.size();    // covering variables = dual constraints
    if (R == 0 || C == 0)
        throw solver_error("solve_covering: empty program");
    for (const auto &row : M)
        if (row.size() != C)
            throw solver_error("solve_covering: ragged matrix");
    for (const auto &cost : c)
        if (cost < 0)
            throw solver_error("solve_covering: negative objective coefficient");

    // Tableau rows = dual constraints; columns = R structural variables,
    // C slacks, then the right-hand side.
    const std::size_t rhs = R + C;
    std::vector<std::vector<ExactInteger>> T(C, std::vector<ExactInteger>(R + C + 1));
    for (std::size_t j = 0; j < C; ++j) {
        for (std::size_t i = 0; i < R; ++i)
            T[j][i] = M[i][j];
        T[j][R + j] = 1;
        T[j][rhs] = c[j];
    }
    std::vector<ExactInteger> z(R + C + 1);
    for (std::size_t i = 0; i < R; ++i)
        z[i] = -1;
    std::vector<std::size_t> basis(C);
    for (std::size_t j = 0; j < C; ++j)
        basis[j] = R + j;
    ExactInteger den = 1;

    // Entering rule: steepest reduced cost for speed; if the objective stalls
    // for too long (degeneracy), switch permanently to Bland's rule, whose
    // anti-cycling guarantee ensures termination.
    bool bland = false;
    std::size_t stall = 0;
    const std::size_t stall_limit = 2 * (R + C) + 16;
    ExactInteger last_value = 0;
    ExactInteger last_den = 1;

    ExactInteger tmp; // scratch for the fused pivot update
    while (true) {
        std::size_t enter = rhs;
        if (bland) {
            for (std::size_t j = 0; j < R + C; ++j) {
                if (z[j] < 0) {
                    enter = j;
                    break;
                }
            }
        } else {
            // Most negative reduced cost relative to the shared denominator;
            // ties resolved toward the smallest index for determinism.
            const ExactInteger *best = nullptr;
            for (std::size_t j = 0; j < R + C; ++j) {
                if (z[j] < 0 && (!best || z[j] < *best)) {
                    best = &z[j];
                    enter = j;
                }
            }
        }
        if (enter == rhs)
            break; // optimal

        // Ratio test; ties broken toward the smallest basis index (Bland).
        std::size_t leave = C;
        for (std::size_t i = 0; i < C; ++i) {
            if (T[i][enter] <= 0)
                continue;
            if (leave == C) {
                leave = i;
                continue;
            }
            const ExactInteger lhs = T[i][rhs] * T[leave][enter];
            const ExactInteger rhsv = T[leave][rhs] * T[i][enter];
            if (lhs < rhsv || (lhs == rhsv && basis[i] < basis[leave]))
                leave = i;
        }
        if (leave == C)
            throw solver_error("solve_covering: dual unbounded -- some covering "
                               "constraint has no positive coefficient");

        // Fraction-free pivot: the pivot row is left untouched, every other
        // row r' <- (r' * pivot - r'[enter] * pivot_row) / den, and the pivot
        // element becomes the new common denominator.
        const ExactInteger pivot = T[leave][enter];
        const std::vector<ExactInteger> &prow = T[leave];
        auto update_row = [&](std::vector<ExactInteger> &row) {
            const ExactInteger factor = row[enter];
            if (factor == 0) {
                if (pivot == den)
                    return; // row is already scaled correctly
                for (std::size_t j = 0; j <= rhs; ++j) {
                    if (row[j] == 0)
                        continue;
                    row[j] *= pivot;
                    row[j] /= den;
                }
                return;
            }
            for (std::size_t j = 0; j <= rhs; ++j) {
                mpz_mul(tmp.backend().data(), row[j].backend().data(),
                        pivot.backend().data());
                mpz_submul(tmp.backend().data(), factor.backend().data(),
                           prow[j].backend().data());
                mpz_divexact(row[j].backend().data(), tmp.backend().data(),
                             den.backend().data());
            }
        };
        for (std::size_t i = 0; i < C; ++i)
            if (i != leave)
                update_row(T[i]);
        update_row(z);
        den = pivot;
        basis[leave] = enter;

        if (!bland) {
            // Objective progress check (z[rhs]/den vs the previous value).
            if (z[rhs] * last_den == last_value * den) {
                if (++stall > stall_limit)
                    bland = true;
            } else {
                stall = 0;
                last_value = z[rhs];
                last_den = den;
            }
        }
    }

    // Extract y from the slack reduced costs and x from the basic rows; both
    // share the common denominator.
    std::vector<ExactInteger> y_num(C), x_num(R);
    for (std::size_t j = 0; j < C; ++j)
        y_num[j] = z[R + j];
    for (std::size_t i = 0; i < C; ++i)
        if (basis[i] < R)
            x_num[basis[i]] = T[i][rhs];

    // Self-verification in integer arithmetic (common denominator den > 0):
    // primal feasibility, dual feasibility, and equal objectives.
    for (std::size_t j = 0; j < C; ++j)
        if (y_num[j] < 0)
            throw solver_error("solve_covering: negative primal entry");
    for (std::size_t i = 0; i < R; ++i)
        if (x_num[i] < 0)
            throw solver_error("solve_covering: negative dual entry");
    for (std::size_t i = 0; i < R; ++i) {
        ExactInteger lhs = 0;
        for (std::size_t j = 0; j < C; ++j)
            if (M[i][j] != 0)
                lhs += M[i][j] * y_num[j];
        if (lhs < den)
            throw solver_error("solve_covering: covering constraint violated");
    }
    for (std::size_t j = 0; j < C; ++j) {
        ExactInteger lhs = 0;
        for (std::size_t i = 0; i < R; ++i)
            if (M[i][j] != 0)
                lhs += M[i][j] * x_num[i];
        if (lhs > c[j] * den)
            throw solver_error("solve_covering: dual constraint violated");
    }
    ExactInteger primal_obj = 0, dual_obj = 0;
    for (std::size_t j = 0; j < C; ++j)
        primal_obj += c[j] * y_num[j];
    for (std::size_t i = 0; i < R; ++i)
        dual_obj += x_num[i];
    if (primal_obj != dual_obj || primal_obj != z[rhs])
        throw solver_error("solve_covering: objective mismatch at optimum");

    LpSolution solution;
    solution.value = ratio(z[rhs], den);
    solution.primal.reserve(C);
    solution.dual.reserve(R);
    for (std::size_t j = 0; j < C; ++j)
        solution.primal.push_back(ratio(y_num[j], den));
    for (std::size_t i = 0; i < R; ++i)
        solution.dual.push_back(ratio(x_num[i], den));
    return solution;
}

} // namespace detail

inline LpSolution solve_min(const CoveringProblem &lp) {
    return detail::solve_covering(lp.matrix, lp.objective);
}

inline LpSolution solve_min(const ReducedLP &lp) {
    return detail::solve_covering(lp.matrix, lp.objective);
}

/// Single-constraint shortcut: the optimum of a one-row covering program is
/// the least objective/entry ratio over columns with a positive entry.
inline ExactRational min_ratio(const ReducedLP &lp) {
    if (lp.matrix.size() != 1)
        throw domain_error("min_ratio: program must have exactly one row");
    const std::vector<ExactInteger> &row = lp.matrix.front();
    bool found = false;
    ExactRational best;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] <= 0)
            continue;
        ExactRational candidate = ratio(lp.objective[j], row[j]);
        if (!found || candidate < best) {
            best = candidate;
            found = true;
        }
    }
    if (!found)
        throw solver_error("min_ratio: row has no positive entry");
    return best;
}

/// Check a sparse certificate against a reduced program in exact arithmetic.
/// Profiles not present in the program's index sets raise index_error
/// (reported distinctly from mathematical failure). Negative entries count as
/// infeasibility on their side.
inline VerifyResult verify_certificate(const ReducedLP &lp, const Certificate &cert) {
    std::map<WeightProfile, std::size_t> col_index, row_index;
    for (std::size_t j = 0; j < lp.cols.profiles.size(); ++j)
        col_index.emplace(lp.cols.profiles[j], j);
    for (std::size_t i = 0; i < lp.rows.profiles.size(); ++i)
        row_index.emplace(lp.rows.profiles[i], i);

    std::vector<ExactRational> y(lp.cols.profiles.size());
    std::vector<ExactRational> x(lp.rows.profiles.size());
    for (const auto &[profile, value] : cert.primal) {
        auto it = col_index.find(profile);
        if (it == col_index.end())
            throw index_error("verify_certificate: primal entry indexed by a "
                              "profile outside the column set");
        y[it->second] = value;
    }
    for (const auto &[profile, value] : cert.dual) {
        auto it = row_index.find(profile);
        if (it == row_index.end())
            throw index_error("verify_certificate: dual entry indexed by a "
                              "profile outside the row set");
        x[it->second] = value;
    }

    VerifyResult result;
    for (std::size_t j = 0; j < y.size(); ++j)
        result.primal_value += ExactRational(lp.objective[j]) * y[j];
    for (const ExactRational &xi : x)
        result.dual_value += xi;

    for (const ExactRational &yj : y) {
        if (yj < 0) {
            result.verdict = Verdict::primal_infeasible;
            return result;
        }
    }
    for (std::size_t i = 0; i < lp.matrix.size(); ++i) {
        ExactRational lhs;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (lp.matrix[i][j] != 0)
                lhs += ExactRational(lp.matrix[i][j]) * y[j];
        if (lhs < 1) {
            result.verdict = Verdict::primal_infeasible;
            return result;
        }
    }
    for (const ExactRational &xi : x) {
        if (xi < 0) {
            result.verdict = Verdict::dual_infeasible;
            return result;
        }
    }
    for (std::size_t j = 0; j < y.size(); ++j) {
        ExactRational lhs;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (lp.matrix[i][j] != 0)
                lhs += ExactRational(lp.matrix[i][j]) * x[i];
        if (lhs > ExactRational(lp.objective[j])) {
            result.verdict = Verdict::dual_infeasible;
            return result;
        }
    }
    result.verdict = (result.primal_value == result.dual_value) ? Verdict::valid
                                                                : Verdict::gap;
    return result;
}

/// Convenience: wrap a solver solution as a dense certificate over the
/// program's own index sets (used by the round-trip self-checks).
inline Certificate solution_certificate(const ReducedLP &lp, const LpSolution &sol) {
    Certificate cert;
    for (std::size_t j = 0; j < lp.cols.profiles.size(); ++j)
        if (sol.primal[j] != 0)
            cert.primal.emplace(lp.cols.profiles[j], sol.primal[j]);
    for (std::size_t i = 0; i < lp.rows.profiles.size(); ++i)
        if (sol.dual[i] != 0)
            cert.dual.emplace(lp.rows.profiles[i], sol.dual[i]);
    return cert;
}

} // namespace sbb
