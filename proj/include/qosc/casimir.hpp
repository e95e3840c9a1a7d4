#pragma once

#include <utility>
#include <vector>

#include "qosc/deform.hpp"

namespace qosc {

/// The two inequivalent Casimir choices. Cq carries the eigenvalue
/// [l+1/2]_q^2 - 1/4, CqPrime carries [l]_q [l+1]_q; both reduce to l(l+1)
/// in the undeformed limit.
enum class CasimirKind { Cq, CqPrime };

/// Tag for one admissible root of the alpha-equation.
enum class Branch { Plus, Minus, Only, Double };

/// Deadband on the classification thresholds in c-space.
inline constexpr double eps_class = 1e-12;

/// Outcome of alpha(alpha - 1) = c over the positive reals.
struct RootClassification {
    enum class Kind { TwoRoots, OneRoot, DoubleHalf, NoRoot };

    Kind kind;
    double c;           ///< the Casimir eigenvalue the roots solve against
    double alpha_minus; ///< lower root; NaN unless TwoRoots
    double alpha_plus;  ///< upper root; NaN when NoRoot, 1/2 when DoubleHalf

    /// Admissible (branch, alpha) pairs in ascending alpha order.
    std::vector<std::pair<Branch, double>> branches() const;
};

double casimir_eigenvalue(int l, CasimirKind kind, const DeformationParameter& p);

/// gamma_q(l) = 4 sin^2(w) C_q(l); the discriminant governing how many roots
/// survive on the unit circle. UnitCircle regime only.
double gamma_quantity(int l, CasimirKind kind, const DeformationParameter& p);

/// Solves alpha(alpha-1) = c and keeps the strictly positive roots:
///   NoRoot     : 1/4 + c < -eps      (discriminant negative)
///   DoubleHalf : |1/4 + c| <= eps    (double root at 1/2)
///   TwoRoots   : c < -eps            (both roots inside (0,1))
///   OneRoot    : otherwise           (the lower root is <= 0 and discarded)
RootClassification classify_roots(double c, const DeformationParameter& p);

} // namespace qosc
