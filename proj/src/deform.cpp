#include "qosc/deform.hpp"

#include <cmath>

namespace qosc {

DeformationParameter::DeformationParameter(QRegime regime, double w) : regime_(regime), w_(w)
{
    if (!std::isfinite(w)) {
        throw parameter_error("deformation parameter w must be finite");
    }
    switch (regime) {
        case QRegime::RealPositive:
            if (w <= 0) {
                throw parameter_error("RealPositive regime requires w > 0");
            }
            break;
        case QRegime::UnitCircle:
            if (w <= 0 || w >= M_PI) {
                throw parameter_error("UnitCircle regime requires 0 < w < pi");
            }
            if (std::abs(std::sin(w)) <= eps_denom) {
                throw parameter_error("UnitCircle regime too close to a root of unity");
            }
            break;
    }
}

namespace detail {

double q_number_raw(double x, double w, QRegime regime)
{
    if (std::abs(w) < w_switch) {
        // sinh(xw)/sinh(w) = x (1 + (x^2-1) w^2/6 + (x^2-1)(3x^2-7) w^4/360 + ...)
        // and sin/sin is the same series in -w^2.
        double u = w * w;
        if (regime == QRegime::UnitCircle) {
            u = -u;
        }
        const double x2 = x * x;
        return x * (1.0 + (x2 - 1.0) * u / 6.0 + (x2 - 1.0) * (3.0 * x2 - 7.0) * u * u / 360.0);
    }
    if (regime == QRegime::RealPositive) {
        const double xw = std::abs(x * w);
        if (xw > 700.0 || std::abs(w) > 700.0) {
            // sinh would overflow; evaluate the ratio in log space.
            const double aw = std::abs(w);
            const double lg = (xw - aw) + std::log1p(-std::exp(-2.0 * xw)) -
                              std::log1p(-std::exp(-2.0 * aw));
            const double v = std::exp(lg);
            return x < 0 ? -v : v;
        }
        return std::sinh(x * w) / std::sinh(w);
    }
    return std::sin(x * w) / std::sin(w);
}

} // namespace detail

double q_number(double x, const DeformationParameter& p)
{
    return detail::q_number_raw(x, p.w(), p.regime());
}

std::complex<double> q_power(double x, const DeformationParameter& p)
{
    if (p.regime() == QRegime::RealPositive) {
        return {std::exp(x * p.w()), 0.0};
    }
    return std::polar(1.0, x * p.w());
}

} // namespace qosc
