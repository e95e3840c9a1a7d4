#include "qosc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace qosc {

namespace {

std::vector<Level> levels_from_classification(int n, int l, const RootClassification& cls)
{
    std::vector<Level> out;
    for (const auto& [branch, alpha] : cls.branches()) {
        out.push_back({n, l, branch, alpha, 2.0 * n + alpha + 0.5});
    }
    return out; // branches() yields ascending alpha, hence ascending energy
}

/// Closed-form Casimir eigenvalue via the trig/hyperbolic identities printed
/// for each case, as opposed to the q-number ratios of the generic path.
double closed_form_casimir(int l, CasimirKind kind, const DeformationParameter& p)
{
    const double w = p.w();
    if (p.regime() == QRegime::RealPositive) {
        if (kind == CasimirKind::Cq) {
            if (l == 0) {
                const double shift = 1.0 / (2.0 * std::cosh(w / 2.0)); // E = 2n+1 +- shift
                return shift * shift - 0.25;
            }
            const double shift = std::sinh((l + 0.5) * w) / std::sinh(w);
            return shift * shift - 0.25;
        }
        // E' = 2n + 1 + sqrt(4 sinh(lw) sinh((l+1)w) + sinh^2 w) / (2 sinh w)
        const double sw = std::sinh(w);
        return std::sinh(l * w) * std::sinh((l + 1) * w) / (sw * sw);
    }
    if (l >= 2) {
        throw unsupported_case("no closed-form spectrum for UnitCircle l >= 2");
    }
    if (kind == CasimirKind::Cq) {
        if (l == 0) {
            const double shift = 1.0 / (2.0 * std::cos(w / 2.0));
            return shift * shift - 0.25;
        }
        const double c2 = std::cos(w / 2.0);
        const double shift = (4.0 * c2 * c2 - 1.0) / (2.0 * c2);
        return shift * shift - 0.25;
    }
    if (l == 0) {
        return 0.0; // [0]_q [1]_q
    }
    return 2.0 * std::cos(w); // [1]_q [2]_q; two/one/no levels split at cos w = -1/8
}

} // namespace

std::vector<Level> energy(int n, int l, CasimirKind kind, const DeformationParameter& p)
{
    if (n < 0) {
        throw parameter_error("radial quantum number n must be non-negative");
    }
    return levels_from_classification(n, l, classify_roots(casimir_eigenvalue(l, kind, p), p));
}

std::vector<Level> closed_form_energy(int n, int l, CasimirKind kind, const DeformationParameter& p)
{
    if (n < 0) {
        throw parameter_error("radial quantum number n must be non-negative");
    }
    if (l < 0) {
        throw parameter_error("angular momentum l must be non-negative");
    }
    return levels_from_classification(n, l, classify_roots(closed_form_casimir(l, kind, p), p));
}

std::vector<Level> enumerate_levels(double emax, int nmax, int lmax, CasimirKind kind,
                                    const DeformationParameter& p)
{
    if (!(emax > 0)) {
        throw parameter_error("emax must be positive");
    }
    if (nmax < 0 || lmax < 0) {
        throw parameter_error("nmax and lmax must be non-negative");
    }
    std::vector<Level> out;
    for (int l = 0; l <= lmax; ++l) {
        const auto cls = classify_roots(casimir_eigenvalue(l, kind, p), p);
        for (const auto& [branch, alpha] : cls.branches()) {
            for (int n = 0; n <= nmax; ++n) {
                const double e = 2.0 * n + alpha + 0.5;
                if (e > emax) {
                    break;
                }
                out.push_back({n, l, branch, alpha, e});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Level& a, const Level& b) {
        return std::tie(a.energy, a.l, a.n, a.branch) < std::tie(b.energy, b.l, b.n, b.branch);
    });
    return out;
}

std::vector<std::vector<Level>> degeneracy_report(const std::vector<Level>& levels, double tol_e)
{
    if (tol_e <= 0) {
        throw parameter_error("degeneracy tolerance must be positive");
    }
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (levels[i].energy < levels[i - 1].energy) {
            throw parameter_error("degeneracy_report requires levels sorted by energy");
        }
    }
    std::vector<std::vector<Level>> clusters;
    for (const auto& lvl : levels) {
        if (clusters.empty() || lvl.energy - clusters.back().front().energy > tol_e) {
            clusters.emplace_back();
        }
        clusters.back().push_back(lvl);
    }
    return clusters;
}

namespace {

/// Energy of one tagged branch, requiring the classification kind to match
/// the one seen at the probe center.
double branch_energy_at(int n, int l, CasimirKind kind, QRegime regime, double w,
                        RootClassification::Kind expected, Branch branch)
{
    const DeformationParameter p(regime, w);
    const auto cls = classify_roots(casimir_eigenvalue(l, kind, p), p);
    if (cls.kind != expected) {
        throw branch_error("classification changed across the finite-difference stencil");
    }
    for (const auto& [b, alpha] : cls.branches()) {
        if (b == branch) {
            return 2.0 * n + alpha + 0.5;
        }
    }
    throw branch_error("branch disappeared across the finite-difference stencil");
}

} // namespace

std::vector<BranchSlope> monotonicity_probe(int n, int l, CasimirKind kind, QRegime regime,
                                            double w0, double dw)
{
    if (dw <= 0) {
        throw parameter_error("finite-difference step dw must be positive");
    }
    const DeformationParameter p0(regime, w0);
    const auto cls0 = classify_roots(casimir_eigenvalue(l, kind, p0), p0);

    const bool central = (w0 - dw > 0) && (regime != QRegime::UnitCircle || w0 + dw < M_PI);
    if (!central && (regime == QRegime::UnitCircle && w0 + dw >= M_PI)) {
        throw parameter_error("probe stencil leaves the UnitCircle domain");
    }

    std::vector<BranchSlope> out;
    for (const auto& [branch, alpha0] : cls0.branches()) {
        (void)alpha0;
        auto eval = [&](double w) {
            return branch_energy_at(n, l, kind, regime, w, cls0.kind, branch);
        };
        auto diff = [&](double h) {
            if (central) {
                return (eval(w0 + h) - eval(w0 - h)) / (2.0 * h);
            }
            return (eval(w0 + h) - eval(w0)) / h;
        };
        const double d_full = diff(dw);
        const double d_half = diff(dw / 2.0);
        // Richardson: O(h^2) for central, O(h) for one-sided stencils.
        const double d = central ? (4.0 * d_half - d_full) / 3.0 : 2.0 * d_half - d_full;
        const int sign = std::abs(d) <= 1e-12 ? 0 : (d > 0 ? 1 : -1);
        out.push_back({branch, d, sign});
    }
    return out;
}

} // namespace qosc
