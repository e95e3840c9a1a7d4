#include "qosc/casimir.hpp"

#include <cmath>
#include <limits>

namespace qosc {

namespace {
constexpr double nan = std::numeric_limits<double>::quiet_NaN();
}

std::vector<std::pair<Branch, double>> RootClassification::branches() const
{
    switch (kind) {
        case Kind::TwoRoots:
            return {{Branch::Minus, alpha_minus}, {Branch::Plus, alpha_plus}};
        case Kind::OneRoot:
            return {{Branch::Only, alpha_plus}};
        case Kind::DoubleHalf:
            return {{Branch::Double, alpha_plus}};
        case Kind::NoRoot:
            return {};
    }
    return {};
}

double casimir_eigenvalue(int l, CasimirKind kind, const DeformationParameter& p)
{
    if (l < 0) {
        throw parameter_error("angular momentum l must be non-negative");
    }
    if (kind == CasimirKind::Cq) {
        const double h = q_number(l + 0.5, p);
        return h * h - 0.25;
    }
    return q_number(l, p) * q_number(l + 1, p);
}

double gamma_quantity(int l, CasimirKind kind, const DeformationParameter& p)
{
    if (p.regime() != QRegime::UnitCircle) {
        throw parameter_error("gamma_quantity is defined in the UnitCircle regime only");
    }
    const double s = std::sin(p.w());
    return 4.0 * s * s * casimir_eigenvalue(l, kind, p);
}

RootClassification classify_roots(double c, const DeformationParameter& p)
{
    (void)p; // validated at construction; the classification depends on c alone
    if (!std::isfinite(c)) {
        throw parameter_error("Casimir eigenvalue must be finite");
    }
    const double disc = 0.25 + c;
    if (disc < -eps_class) {
        return {RootClassification::Kind::NoRoot, c, nan, nan};
    }
    if (std::abs(disc) <= eps_class) {
        return {RootClassification::Kind::DoubleHalf, c, nan, 0.5};
    }
    const double root = std::sqrt(disc);
    if (c < -eps_class) {
        // alpha_minus = 1/2 - root rewritten as -c / alpha_plus to avoid
        // cancellation as c -> 0-.
        const double alpha_plus = 0.5 + root;
        return {RootClassification::Kind::TwoRoots, c, -c / alpha_plus, alpha_plus};
    }
    // The lower root is <= 0 here; the vanishing root at c = 0 is discarded.
    return {RootClassification::Kind::OneRoot, c, nan, 0.5 + root};
}

} // namespace qosc
