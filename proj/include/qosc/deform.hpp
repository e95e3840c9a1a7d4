#pragma once

#include <complex>

#include "qosc/errors.hpp"

namespace qosc {

/// Deformation regime: q = e^w on the positive real axis, or q = e^{iw} on
/// the unit circle (roots of unity excluded).
enum class QRegime { RealPositive, UnitCircle };

/// Single source of truth for the deformation. All q-dependent arithmetic is
/// parameterized by the real number w together with the regime; q itself is
/// derived and never stored.
///
/// Admissible:
///   RealPositive : w > 0          (the q -> 1/q symmetry folds w < 0 away)
///   UnitCircle   : 0 < w < pi and |sin w| > eps_denom
class DeformationParameter {
public:
    /// Validates on construction; throws parameter_error outside the domain.
    DeformationParameter(QRegime regime, double w);

    static DeformationParameter real_positive(double w) { return {QRegime::RealPositive, w}; }
    static DeformationParameter unit_circle(double w) { return {QRegime::UnitCircle, w}; }

    QRegime regime() const { return regime_; }
    double w() const { return w_; }

private:
    QRegime regime_;
    double w_;
};

/// Guard on |sin w| in the UnitCircle regime, rejecting near-degenerate
/// denominators deterministically.
inline constexpr double eps_denom = 1e-12;

/// Below this |w| the q-number switches from the closed form to its Taylor
/// expansion; cancellation in sinh(xw)/sinh(w) costs ~|log10 w| digits.
inline constexpr double w_switch = 1e-4;

/// The q-number [x]_q = (q^x - q^{-x}) / (q - q^{-1}).
/// Real-valued in both regimes: sinh(xw)/sinh(w) for q = e^w,
/// sin(xw)/sin(w) for q = e^{iw}.
double q_number(double x, const DeformationParameter& p);

/// q^x as a complex number: e^{xw} (real regime) or e^{ixw} (circle).
std::complex<double> q_power(double x, const DeformationParameter& p);

namespace detail {

/// Closed-form/Taylor evaluation without the domain guard. Accepts any w
/// (sign included); used by the reflection and small-w property checks.
double q_number_raw(double x, double w, QRegime regime);

} // namespace detail

} // namespace qosc
