#pragma once

#include <functional>
#include <vector>

#include "qosc/errors.hpp"

namespace qosc {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Associated Laguerre polynomial L_n^{(a)}(x), a > -1, x >= 0, via the
/// three-term recurrence in n (the explicit sum overflows for n ~ 20 and is
/// kept as a small-n oracle in the verification suite only).
double laguerre(int n, double a, double x);

/// One radial bound state R(r) = norm * e^{-r^2/2} r^{alpha-1} L_n^{alpha-1/2}(r^2)
/// with norm^2 = 2 n! / Gamma(alpha + n + 1/2).
struct RadialState {
    int n;
    double alpha;
    double norm;

    static RadialState make(int n, double alpha);
};

/// Evaluates the radial wave function at r > 0. For alpha < 1 the factor
/// r^{alpha-1} diverges at the origin, so r = 0 is excluded.
double radial_wavefunction(const RadialState& state, double r);

/// <r^2> in the given state: 2n + alpha + 1/2.
double expectation_r2(const RadialState& state);

/// Controls for the semi-infinite quadrature.
struct QuadratureSpec {
    enum class Method { MappedGaussLegendre, TanhSinh };

    Method method = Method::MappedGaussLegendre;
    /// Refinement budget: maximum panel count (MappedGaussLegendre) or
    /// maximum level (TanhSinh). 0 selects the method default.
    int refinement = 0;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
};

struct QuadratureResult {
    double value;
    double error; ///< reported estimate, <= max(abs_tol, rel_tol * |value|) on success
    int evaluations;
};

/// Integrates f over (0, inf) for integrands with Gaussian decay. The
/// substitution x = r^2 is applied first, turning bound-state densities into
/// Gamma-weighted integrands; panels near x = 0 are refined adaptively, so
/// integrable endpoint singularities (alpha < 1/2) are handled. Throws
/// accuracy_error carrying the best estimate if the tolerance cannot be met.
QuadratureResult quadrature(const std::function<double(double)>& f, const QuadratureSpec& spec = {});

/// Max relative residual of the radial equation
///   -1/2 (R'' + (2/r) R' - (c/r^2) R) + 1/2 r^2 R = E R
/// over the grid, using analytic derivatives of the Laguerre form.
/// Vanishes (to roundoff) when E = 2n + alpha + 1/2 and c = alpha(alpha-1).
double ode_residual(const RadialState& state, double energy, double c,
                    const std::vector<double>& grid);

/// 200 log-spaced points on [1e-3, 8]: covers the r^{alpha-1} region and the
/// Gaussian tail.
std::vector<double> default_ode_grid();

} // namespace qosc
