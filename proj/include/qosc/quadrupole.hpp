#pragma once

#include <vector>

#include "qosc/casimir.hpp"
#include "qosc/deform.hpp"

namespace qosc {

/// Quadrupole moment <n00| (3z^2 - r^2) |n00> of one l = 0 state, factorized
/// into its angular and radial matrix elements.
struct QuadrupoleResult {
    int n;
    Branch branch;
    double angular_factor;
    double radial_factor; ///< 2n + alpha_0 + 1/2
    double q_moment;      ///< angular_factor * radial_factor
    QRegime regime;
    double w;
    CasimirKind kind;
};

/// Angular matrix element <00| (3 cos^2 theta - 1) |00> under the deformed
/// angular measure:
///   (2 cosh^2 w + 1)/sinh^2 w - 3 cosh w / (w sinh w)     (RealPositive)
///   -(2 cos^2 w + 1)/sin^2 w + 3 cos w / (w sin w)        (UnitCircle)
/// Even in w; ~ +-(4/15) w^2 near w = 0. Below |w| = 1e-2 the closed form
/// cancels catastrophically (two ~3/w^2 terms) and the even Taylor series
/// through w^8 is used instead.
double angular_factor(const DeformationParameter& p);

/// Quadrupole moment of the requested l = 0 branch. Throws branch_error when
/// the branch does not exist for this Casimir choice and deformation.
QuadrupoleResult quadrupole_moment(int n, Branch branch, CasimirKind kind,
                                   const DeformationParameter& p);

/// Per-w results over a grid; only branches that exist contribute entries,
/// absent branches are absent rather than zero.
std::vector<QuadrupoleResult> quadrupole_sweep(const std::vector<double>& wgrid, int n,
                                               CasimirKind kind, QRegime regime);

namespace detail {

/// Closed-form/series evaluation at raw w of either sign, for the evenness
/// and small-w property checks.
double angular_factor_raw(double w, QRegime regime);

} // namespace detail

} // namespace qosc
