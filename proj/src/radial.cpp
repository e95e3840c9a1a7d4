#include "qosc/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace qosc {

double log_gamma(double x)
{
    if (!(x > 0)) {
        throw parameter_error("log_gamma requires x > 0");
    }
    return std::lgamma(x);
}

double laguerre(int n, double a, double x)
{
    if (n < 0) {
        throw parameter_error("laguerre requires n >= 0");
    }
    if (a <= -1.0) {
        throw parameter_error("laguerre requires a > -1");
    }
    if (x < 0) {
        throw parameter_error("laguerre requires x >= 0");
    }
    if (n == 0) {
        return 1.0;
    }
    double lkm1 = 1.0;          // L_0
    double lk = 1.0 + a - x;    // L_1
    for (int k = 1; k < n; ++k) {
        const double lkp1 = ((2.0 * k + 1.0 + a - x) * lk - (k + a) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

RadialState RadialState::make(int n, double alpha)
{
    if (n < 0) {
        throw parameter_error("RadialState requires n >= 0");
    }
    if (!(alpha > 0)) {
        throw parameter_error("RadialState requires alpha > 0");
    }
    // norm^2 = 2 n! / Gamma(alpha + n + 1/2), assembled in log space so that
    // large n or alpha cannot overflow the intermediate Gamma values.
    const double log_norm =
        0.5 * (std::log(2.0) + log_gamma(n + 1.0) - log_gamma(alpha + n + 0.5));
    return {n, alpha, std::exp(log_norm)};
}

double radial_wavefunction(const RadialState& state, double r)
{
    if (!(r > 0)) {
        throw parameter_error("radial_wavefunction requires r > 0");
    }
    const double x = r * r;
    return state.norm * std::exp(-0.5 * x) * std::pow(r, state.alpha - 1.0) *
           laguerre(state.n, state.alpha - 0.5, x);
}

double expectation_r2(const RadialState& state)
{
    return 2.0 * state.n + state.alpha + 0.5;
}

// ---------------------------------------------------------------------------
// quadrature
// ---------------------------------------------------------------------------

namespace {

/// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by Newton
/// iteration on the Legendre recurrence.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussRule(int order)
    {
        nodes.resize(order);
        weights.resize(order);
        for (int i = 0; i < order; ++i) {
            // Chebyshev-like initial guess for the i-th root.
            double t = std::cos(M_PI * (i + 0.75) / (order + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = t;
                for (int k = 2; k <= order; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = order * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) {
                    break;
                }
            }
            nodes[i] = t;
            weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussRule& rule10()
{
    static const GaussRule r(10);
    return r;
}

const GaussRule& rule21()
{
    static const GaussRule r(21);
    return r;
}

struct PanelEstimate {
    double a;
    double b;
    double value; // 21-point estimate
    double error; // |21-point - 10-point|
};

} // namespace

QuadratureResult quadrature(const std::function<double(double)>& f, const QuadratureSpec& spec)
{
    if (spec.abs_tol <= 0 || spec.rel_tol <= 0) {
        throw parameter_error("quadrature tolerances must be positive");
    }

    int evaluations = 0;
    // Substitution x = r^2: integral over (0, inf) of f(r) dr becomes the
    // Gamma-weighted integral of f(sqrt x) / (2 sqrt x).
    auto g = [&](double x) {
        ++evaluations;
        const double r = std::sqrt(x);
        return f(r) / (2.0 * r);
    };

    auto target = [&](double value) {
        return std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
    };

    if (spec.method == QuadratureSpec::Method::TanhSinh) {
        const int max_level = spec.refinement > 0 ? spec.refinement : 12;
        // Truncation point: walk outward until the integrand envelope is dead.
        double xmax = 64.0;
        while (true) {
            const double probe = std::max({std::abs(g(1.1 * xmax)), std::abs(g(1.5 * xmax)),
                                           std::abs(g(1.9 * xmax))});
            if (probe * xmax <= 0.01 * spec.abs_tol) {
                break;
            }
            xmax *= 2.0;
            if (xmax >= 0x1p40) {
                throw accuracy_error("quadrature tail did not decay", 0.0, HUGE_VAL);
            }
        }

        // x = xmax/2 (1 + tanh(pi/2 sinh t)); the exp forms keep x relatively
        // accurate down to denormal scale, which the endpoint singularity needs.
        const double tmax = 6.0;
        auto node = [&](double t, double& x, double& weight) {
            const double u = 0.5 * M_PI * std::sinh(t);
            const double e = std::exp(-2.0 * std::abs(u));
            const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
            x = u <= 0 ? xmax * e / (1.0 + e) : xmax / (1.0 + e);
            weight = 0.5 * xmax * 0.5 * M_PI * std::cosh(t) * sech2;
        };
        auto term = [&](double t) {
            double x = 0.0;
            double weight = 0.0;
            node(t, x, weight);
            if (x <= 1e-300 || x >= 0x1p40 || weight <= 0.0) {
                return 0.0;
            }
            return weight * g(x);
        };

        double h = 0.5;
        double sum = term(0.0);
        for (int j = 1; j * h <= tmax; ++j) {
            sum += term(j * h) + term(-j * h);
        }
        double estimate = h * sum;
        double prev = HUGE_VAL;
        for (int level = 2; level <= max_level; ++level) {
            h *= 0.5;
            for (int j = 1; j * h <= tmax; j += 2) {
                sum += term(j * h) + term(-j * h);
            }
            prev = estimate;
            estimate = h * sum;
            const double err = std::abs(estimate - prev);
            if (err <= target(estimate) && level >= 4) {
                return {estimate, err, evaluations};
            }
        }
        throw accuracy_error("tanh-sinh quadrature did not converge", estimate,
                             std::abs(estimate - prev));
    }

    const int max_panels = spec.refinement > 0 ? spec.refinement : 4000;

    auto estimate_panel = [&](double a, double b) {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double i21 = 0.0;
        const auto& r21 = rule21();
        for (std::size_t k = 0; k < r21.nodes.size(); ++k) {
            i21 += r21.weights[k] * g(mid + half * r21.nodes[k]);
        }
        i21 *= half;
        double i10 = 0.0;
        const auto& r10 = rule10();
        for (std::size_t k = 0; k < r10.nodes.size(); ++k) {
            i10 += r10.weights[k] * g(mid + half * r10.nodes[k]);
        }
        i10 *= half;
        return PanelEstimate{a, b, i21, std::abs(i21 - i10)};
    };

    auto worse = [](const PanelEstimate& x, const PanelEstimate& y) { return x.error < y.error; };
    std::priority_queue<PanelEstimate, std::vector<PanelEstimate>, decltype(worse)> queue(worse);

    double value = 0.0;
    double error = 0.0;
    int panels = 0;
    auto push_panel = [&](double a, double b) {
        auto est = estimate_panel(a, b);
        value += est.value;
        error += est.error;
        queue.push(est);
        ++panels;
    };

    const std::array<double, 7> head = {0.0, 0.0625, 0.25, 1.0, 4.0, 16.0, 64.0};
    for (std::size_t i = 0; i + 1 < head.size(); ++i) {
        push_panel(head[i], head[i + 1]);
    }
    // Extend by doubling until two consecutive panels are negligible; the
    // Gaussian decay guarantees the remainder is bounded by the last panel.
    double edge = head.back();
    int quiet = 0;
    while (quiet < 2) {
        if (edge >= 0x1p40) {
            throw accuracy_error("quadrature tail did not decay", value, error);
        }
        auto est = estimate_panel(edge, 2.0 * edge);
        value += est.value;
        error += est.error;
        queue.push(est);
        ++panels;
        quiet = std::abs(est.value) <= 0.01 * spec.abs_tol ? quiet + 1 : 0;
        edge *= 2.0;
    }

    while (error > target(value) && panels < max_panels) {
        const auto worst = queue.top();
        queue.pop();
        value -= worst.value;
        error -= worst.error;
        --panels;
        const double mid = 0.5 * (worst.a + worst.b);
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
    }
    if (error > target(value)) {
        throw accuracy_error("quadrature did not converge within the panel budget", value, error);
    }
    return {value, error, evaluations};
}

// ---------------------------------------------------------------------------
// ODE residual
// ---------------------------------------------------------------------------

double ode_residual(const RadialState& state, double energy, double c,
                    const std::vector<double>& grid)
{
    const double alpha = state.alpha;
    const double nu = alpha - 0.5;
    double worst = 0.0;
    for (double r : grid) {
        if (!(r > 0)) {
            throw parameter_error("ode_residual grid must satisfy r > 0");
        }
        const double x = r * r;
        const double p = laguerre(state.n, nu, x);
        const double dp = state.n >= 1 ? -laguerre(state.n - 1, nu + 1.0, x) : 0.0;
        const double d2p = state.n >= 2 ? laguerre(state.n - 2, nu + 2.0, x) : 0.0;

        const double env = state.norm * std::exp(-0.5 * x);
        const double ra3 = std::pow(r, alpha - 3.0);
        const double ra2 = ra3 * r;
        const double ra1 = ra2 * r; // r^{alpha-1}
        const double ra = ra1 * r;
        const double rap1 = ra * r;

        const double R = env * ra1 * p;
        const double G = (alpha - 1.0) * ra2 * p - ra * p + 2.0 * ra * dp;
        const double dR = env * G;
        const double dG = (alpha - 1.0) * (alpha - 2.0) * ra3 * p +
                          2.0 * (alpha - 1.0) * ra1 * dp - alpha * ra1 * p -
                          2.0 * rap1 * dp + 2.0 * alpha * ra1 * dp + 4.0 * rap1 * d2p;
        const double d2R = env * (dG - r * G);

        const double hr = -0.5 * (d2R + (2.0 / r) * dR - (c / x) * R) + 0.5 * x * R;
        const double er = energy * R;
        const double res = std::abs(hr - er) / std::max(1.0, std::abs(er));
        worst = std::max(worst, res);
    }
    return worst;
}

std::vector<double> default_ode_grid()
{
    const int count = 200;
    const double lo = std::log(1e-3);
    const double hi = std::log(8.0);
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = std::exp(lo + (hi - lo) * i / (count - 1.0));
    }
    return grid;
}

} // namespace qosc
