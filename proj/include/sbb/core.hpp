#pragma once

#include <stdexcept>
#include <string>

/// Common error taxonomy, version constant, and the code-family tag shared by
/// every module of the subblock-bounds library.
namespace sbb {

/// Library version (kept stable within a release so that CLI output is
/// byte-reproducible).
inline constexpr const char *kVersion = "0.1.0";

/// Which subblock-constrained family a computation refers to.
///  - cscc: every length-L subblock has weight exactly w.
///  - secc: every length-L subblock has weight at least w.
enum class Family { cscc, secc };

inline const char *to_string(Family f) {
    return f == Family::cscc ? "cscc" : "secc";
}

/// Base class of all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters outside an operation's mathematical domain (e.g. a closed form
/// evaluated outside its validity range).
struct domain_error : error {
    using error::error;
};

/// Inputs exceeding a desk-scale safety cap (see oracle module).
struct cap_error : error {
    using error::error;
};

/// A certificate or solution vector indexed inconsistently with the program
/// it is checked against. Kept distinct from mathematical failure verdicts.
struct index_error : error {
    using error::error;
};

/// Internal invariant violation inside the LP solver; signals a construction
/// bug rather than bad user input.
struct solver_error : error {
    using error::error;
};

} // namespace sbb
