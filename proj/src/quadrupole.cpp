#include "qosc/quadrupole.hpp"

#include <cmath>

#include "qosc/radial.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace detail {

double angular_factor_raw(double w, QRegime regime)
{
    const double aw = std::abs(w);
    if (aw < 1e-2) {
        // A(w) = (4/15) u - (4/105) u^2 + (8/1575) u^3 - (4/6237) u^4 + O(u^5)
        // in u = w^2 (RealPositive); u = -w^2 gives the UnitCircle branch.
        double u = w * w;
        if (regime == QRegime::UnitCircle) {
            u = -u;
        }
        return u * (4.0 / 15.0 +
                    u * (-4.0 / 105.0 + u * (8.0 / 1575.0 + u * (-4.0 / 6237.0))));
    }
    if (regime == QRegime::RealPositive) {
        const double ch = std::cosh(w);
        const double sh = std::sinh(w);
        return (2.0 * ch * ch + 1.0) / (sh * sh) - 3.0 * ch / (w * sh);
    }
    const double cw = std::cos(w);
    const double sw = std::sin(w);
    return -(2.0 * cw * cw + 1.0) / (sw * sw) + 3.0 * cw / (w * sw);
}

} // namespace detail

double angular_factor(const DeformationParameter& p)
{
    return detail::angular_factor_raw(p.w(), p.regime());
}

namespace {

double alpha_for_branch(Branch branch, CasimirKind kind, const DeformationParameter& p)
{
    const auto cls = classify_roots(casimir_eigenvalue(0, kind, p), p);
    for (const auto& [b, alpha] : cls.branches()) {
        if (b == branch) {
            return alpha;
        }
    }
    throw branch_error("requested l=0 branch is not admissible for this deformation");
}

} // namespace

QuadrupoleResult quadrupole_moment(int n, Branch branch, CasimirKind kind,
                                   const DeformationParameter& p)
{
    const double alpha = alpha_for_branch(branch, kind, p);
    const double radial = expectation_r2(RadialState::make(n, alpha));
    const double angular = angular_factor(p);
    return {n, branch, angular, radial, angular * radial, p.regime(), p.w(), kind};
}

std::vector<QuadrupoleResult> quadrupole_sweep(const std::vector<double>& wgrid, int n,
                                               CasimirKind kind, QRegime regime)
{
    std::vector<QuadrupoleResult> out;
    for (double w : wgrid) {
        const DeformationParameter p(regime, w);
        const double angular = angular_factor(p);
        const auto cls = classify_roots(casimir_eigenvalue(0, kind, p), p);
        for (const auto& [branch, alpha] : cls.branches()) {
            const double radial = expectation_r2(RadialState::make(n, alpha));
            out.push_back({n, branch, angular, radial, angular * radial, regime, w, kind});
        }
    }
    return out;
}

} // namespace qosc
