#include <cmath>

#include <doctest.h>

#include "qosc/quadrupole.hpp"

using namespace qosc;

TEST_CASE("angular factor values")
{
    // High-precision evaluations of the closed forms.
    CHECK(angular_factor(DeformationParameter::real_positive(1.0)) ==
          doctest::Approx(0.23307912640093749).epsilon(1e-13));
    CHECK(angular_factor(DeformationParameter::unit_circle(1.0)) ==
          doctest::Approx(-0.31057093450918363).epsilon(1e-13));
    CHECK(angular_factor(DeformationParameter::real_positive(2.0)) ==
          doctest::Approx(0.67209340842289115).epsilon(1e-13));
    CHECK(angular_factor(DeformationParameter::unit_circle(2.5)) ==
          doctest::Approx(-7.9823141882016047).epsilon(1e-13));

    // Vanishes as w -> 0, at the (4/15) w^2 rate.
    for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
        const double sign = regime == QRegime::RealPositive ? 1.0 : -1.0;
        for (double w : {1e-4, 1e-3, 5e-3}) {
            const double a = detail::angular_factor_raw(w, regime);
            CHECK(std::abs(a) < 1e-5);
            CHECK(a == doctest::Approx(sign * 4.0 / 15.0 * w * w).epsilon(1e-4));
        }
    }
}

TEST_CASE("angular factor is even in w")
{
    for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
        for (double w : {1e-3, 9e-3, 1.1e-2, 0.3, 1.7, 2.9}) {
            CHECK(std::abs(detail::angular_factor_raw(w, regime) -
                           detail::angular_factor_raw(-w, regime)) < 1e-13);
        }
    }
}

TEST_CASE("series/closed-form continuity at the switch")
{
    for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
        const double below = detail::angular_factor_raw(1e-2 * (1 - 1e-12), regime);
        const double above = detail::angular_factor_raw(1e-2 * (1 + 1e-12), regime);
        CHECK(std::abs(below - above) < 1e-11);
    }
}

TEST_CASE("quadrupole moment at q = 4")
{
    const auto p = DeformationParameter::real_positive(2.0 * std::log(2.0));
    const auto qm = quadrupole_moment(0, Branch::Minus, CasimirKind::Cq, p);
    const auto qp = quadrupole_moment(0, Branch::Plus, CasimirKind::Cq, p);
    CHECK(qm.radial_factor == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(qp.radial_factor == doctest::Approx(1.4).epsilon(1e-13));
    CHECK(qm.angular_factor == doctest::Approx(qp.angular_factor));
    CHECK(qm.q_moment == qm.angular_factor * qm.radial_factor); // exact factorization
    CHECK(qm.q_moment > 0.0);
    CHECK(qp.q_moment > 0.0);

    // The Only branch does not exist here.
    CHECK_THROWS_AS(quadrupole_moment(0, Branch::Only, CasimirKind::Cq, p), branch_error);
}

TEST_CASE("circle quadrupole is negative")
{
    const auto p = DeformationParameter::unit_circle(1.0);
    const auto q = quadrupole_moment(0, Branch::Only, CasimirKind::Cq, p);
    CHECK(q.q_moment < 0.0);
    CHECK_THROWS_AS(quadrupole_moment(0, Branch::Minus, CasimirKind::Cq, p), branch_error);
}

TEST_CASE("sweeps reproduce the sign and monotonicity pattern")
{
    std::vector<double> real_grid;
    for (int i = 0; i <= 29; ++i) {
        real_grid.push_back(0.1 + (3.0 - 0.1) * i / 29.0);
    }
    for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
        const auto sweep = quadrupole_sweep(real_grid, 0, kind, QRegime::RealPositive);
        const std::size_t per_w = kind == CasimirKind::Cq ? 2 : 1;
        CHECK(sweep.size() == per_w * real_grid.size());
        double prev_minus = 0.0;
        double prev_plus = 0.0;
        for (const auto& r : sweep) {
            CHECK(r.q_moment > 0.0);
            double& prev = r.branch == Branch::Minus ? prev_minus : prev_plus;
            CHECK(r.q_moment > prev);
            prev = r.q_moment;
        }
    }

    std::vector<double> circle_grid;
    for (int i = 0; i <= 29; ++i) {
        circle_grid.push_back(0.1 + (2.5 - 0.1) * i / 29.0);
    }
    for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
        const auto sweep = quadrupole_sweep(circle_grid, 0, kind, QRegime::UnitCircle);
        CHECK(sweep.size() == circle_grid.size()); // single branch throughout
        double prev = 0.0;
        for (const auto& r : sweep) {
            CHECK(r.q_moment < 0.0);
            CHECK(r.q_moment < prev);
            prev = r.q_moment;
        }
    }
}

TEST_CASE("branch difference identity")
{
    for (double w : {0.4, 1.0, 2.2}) {
        const auto p = DeformationParameter::real_positive(w);
        for (int n : {0, 2}) {
            const auto qp = quadrupole_moment(n, Branch::Plus, CasimirKind::Cq, p);
            const auto qm = quadrupole_moment(n, Branch::Minus, CasimirKind::Cq, p);
            const auto cls = classify_roots(casimir_eigenvalue(0, CasimirKind::Cq, p), p);
            const double expected = (cls.alpha_plus - cls.alpha_minus) * qp.angular_factor;
            CHECK(qp.q_moment - qm.q_moment == doctest::Approx(expected).epsilon(1e-13));
        }
    }
}
