// Property sweeps over randomized inputs (fixed seeds, reproducible runs).

#include <cmath>
#include <random>

#include <doctest.h>

#include "qosc/algebra.hpp"
#include "qosc/quadrupole.hpp"
#include "qosc/spectrum.hpp"

using namespace qosc;

namespace {

double draw(std::mt19937& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

DeformationParameter draw_parameter(std::mt19937& rng, QRegime regime)
{
    if (regime == QRegime::RealPositive) {
        return DeformationParameter::real_positive(draw(rng, 1e-3, 4.0));
    }
    return DeformationParameter::unit_circle(draw(rng, 1e-3, M_PI - 1e-2));
}

} // namespace

TEST_CASE("q-number symmetries hold over random (x, w)")
{
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 600; ++trial) {
        for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
            const auto p = draw_parameter(rng, regime);
            const double x = draw(rng, -8.0, 8.0);
            CAPTURE(p.w());
            CAPTURE(x);
            const double v = q_number(x, p);
            CHECK(std::abs(q_number(-x, p) + v) <= 1e-13 * std::max(1.0, std::abs(v)));
            CHECK(std::abs(detail::q_number_raw(x, p.w(), regime) -
                           detail::q_number_raw(x, -p.w(), regime)) <=
                  1e-13 * std::max(1.0, std::abs(v)));
            // |q^x| = e^{xw} on the real axis, 1 on the circle.
            const double mag = std::abs(q_power(x, p));
            const double expect =
                regime == QRegime::RealPositive ? std::exp(x * p.w()) : 1.0;
            CHECK(mag == doctest::Approx(expect).epsilon(1e-13));
        }
    }
}

TEST_CASE("q-number recurrence [x+1] + [x-1] = (q + 1/q) [x]")
{
    std::mt19937 rng(20240906);
    for (int trial = 0; trial < 600; ++trial) {
        for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
            const auto p = draw_parameter(rng, regime);
            const double x = draw(rng, -6.0, 6.0);
            const double qq = regime == QRegime::RealPositive ? 2.0 * std::cosh(p.w())
                                                              : 2.0 * std::cos(p.w());
            const double lhs = q_number(x + 1.0, p) + q_number(x - 1.0, p);
            const double rhs = qq * q_number(x, p);
            CHECK(std::abs(lhs - rhs) <=
                  1e-13 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
        }
    }
}

TEST_CASE("classification invariants hold for random c")
{
    std::mt19937 rng(20240902);
    const auto p = DeformationParameter::real_positive(1.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const double c = draw(rng, -0.6, 12.0);
        const auto cls = classify_roots(c, p);
        switch (cls.kind) {
            case RootClassification::Kind::NoRoot:
                CHECK(0.25 + c < 0.0);
                break;
            case RootClassification::Kind::DoubleHalf:
                CHECK(std::abs(0.25 + c) <= eps_class);
                break;
            case RootClassification::Kind::TwoRoots:
                CHECK(c < 0.0);
                CHECK(cls.alpha_minus > 0.0);
                CHECK(cls.alpha_minus < cls.alpha_plus);
                CHECK(cls.alpha_plus < 1.0);
                break;
            case RootClassification::Kind::OneRoot:
                CHECK(0.5 - std::sqrt(0.25 + c) <= 0.0 + eps_class); // discarded root
                break;
        }
        for (const auto& [branch, alpha] : cls.branches()) {
            (void)branch;
            CHECK(alpha > 0.0);
            CHECK(std::abs(alpha * (alpha - 1.0) - c) <= 1e-12 * std::max(1.0, std::abs(c)));
        }
    }
}

TEST_CASE("multiplet levels mirror the classification for random inputs")
{
    std::mt19937 rng(20240903);
    for (int trial = 0; trial < 300; ++trial) {
        for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
            const auto p = draw_parameter(rng, regime);
            const int l = std::uniform_int_distribution<int>(0, 5)(rng);
            const int n = std::uniform_int_distribution<int>(0, 4)(rng);
            const auto kind = rng() % 2 == 0 ? CasimirKind::Cq : CasimirKind::CqPrime;
            const auto cls = classify_roots(casimir_eigenvalue(l, kind, p), p);
            const auto levels = energy(n, l, kind, p);
            REQUIRE(levels.size() == cls.branches().size());
            double prev = -HUGE_VAL;
            for (const auto& lvl : levels) {
                CHECK(lvl.energy == 2.0 * lvl.n + lvl.alpha + 0.5); // exact
                CHECK(lvl.energy >= prev);
                prev = lvl.energy;
                if (lvl.branch == Branch::Minus) {
                    CHECK(cls.kind == RootClassification::Kind::TwoRoots);
                }
            }
        }
    }
}

TEST_CASE("classification agrees with the gamma-quantity route on the circle")
{
    // gamma(l) = 4 sin^2(w) C(l) classifies against 0 and -sin^2(w); this is
    // the same split as c against 0 and -1/4 but computed through different
    // arithmetic, so the two routes cross-check each other.
    std::mt19937 rng(20240907);
    int checked = 0;
    for (int trial = 0; trial < 800; ++trial) {
        const auto p = draw_parameter(rng, QRegime::UnitCircle);
        const int l = std::uniform_int_distribution<int>(0, 6)(rng);
        const auto kind = rng() % 2 == 0 ? CasimirKind::Cq : CasimirKind::CqPrime;
        const double c = casimir_eigenvalue(l, kind, p);
        if (std::abs(c) < 1e-9 || std::abs(0.25 + c) < 1e-9) {
            continue; // skip knife-edge draws; the deadbands differ by regime scaling
        }
        const double gamma = gamma_quantity(l, kind, p);
        const double s2 = std::pow(std::sin(p.w()), 2);
        const auto cls = classify_roots(c, p);
        RootClassification::Kind expected;
        if (gamma < -4.0 * s2 * 0.25) {
            expected = RootClassification::Kind::NoRoot;
        } else if (gamma < 0.0) {
            expected = RootClassification::Kind::TwoRoots;
        } else {
            expected = RootClassification::Kind::OneRoot;
        }
        CAPTURE(p.w());
        CAPTURE(l);
        CAPTURE(c);
        CHECK(cls.kind == expected);
        ++checked;
    }
    CHECK(checked > 700);
}

TEST_CASE("commutators close on random non-dyadic monomials")
{
    std::mt19937 rng(20240904);
    for (int trial = 0; trial < 150; ++trial) {
        for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
            const double w = regime == QRegime::RealPositive ? draw(rng, 0.02, 0.6)
                                                             : draw(rng, 0.1, 2.9);
            const DeformationParameter p(regime, w);
            const double s = draw(rng, -3.0, 3.9);
            const int m = std::uniform_int_distribution<int>(-3, 3)(rng);
            CAPTURE(w);
            CAPTURE(s);
            CAPTURE(m);
            const auto res = commutator_residuals(s, m, p);
            CHECK(res.offdiag_max < 1e-12);
            CHECK(res.diag_err < 1e-12);
            CHECK(res.j3_err < 1e-14);
        }
    }
}

TEST_CASE("angular factor evenness at random w")
{
    std::mt19937 rng(20240905);
    for (int trial = 0; trial < 400; ++trial) {
        for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
            const double w = draw(rng, 1e-4, 3.0);
            CHECK(std::abs(detail::angular_factor_raw(w, regime) -
                           detail::angular_factor_raw(-w, regime)) < 1e-13);
        }
    }
}
