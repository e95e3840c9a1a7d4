#include <cmath>

#include <doctest.h>

#include "qosc/deform.hpp"

using namespace qosc;

TEST_CASE("q_number reference values")
{
    // [1]_q = 1 identically.
    CHECK(q_number(1.0, DeformationParameter::real_positive(0.7)) == doctest::Approx(1.0));
    CHECK(q_number(1.0, DeformationParameter::unit_circle(1.3)) == doctest::Approx(1.0));

    // q = 2: [2]_q = (4 - 1/4)/(2 - 1/2) = 2.5.
    const auto p2 = DeformationParameter::real_positive(std::log(2.0));
    CHECK(q_number(2.0, p2) == doctest::Approx(2.5).epsilon(1e-14));

    // sin(pi)/sin(pi/3) = 0.
    const auto pc = DeformationParameter::unit_circle(M_PI / 3.0);
    CHECK(std::abs(q_number(3.0, pc)) < 1e-12);

    // [2]_q = 2 cosh w on the real axis.
    const auto p3 = DeformationParameter::real_positive(0.3);
    CHECK(q_number(2.0, p3) == doctest::Approx(2.0906770282577210).epsilon(1e-14));
}

TEST_CASE("q_power reference values")
{
    const auto preal = DeformationParameter::real_positive(std::log(2.0));
    CHECK(q_power(0.0, preal).real() == doctest::Approx(1.0));
    CHECK(q_power(0.0, preal).imag() == doctest::Approx(0.0));
    CHECK(q_power(1.0, preal).real() == doctest::Approx(2.0).epsilon(1e-15));

    const auto pcirc = DeformationParameter::unit_circle(M_PI / 2.0);
    CHECK(q_power(2.0, pcirc).real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(q_power(2.0, pcirc).imag()) < 1e-14);
}

TEST_CASE("parameter domain")
{
    CHECK_THROWS_AS(DeformationParameter::real_positive(0.0), parameter_error);
    CHECK_THROWS_AS(DeformationParameter::real_positive(-1.0), parameter_error);
    CHECK_THROWS_AS(DeformationParameter::unit_circle(0.0), parameter_error);
    CHECK_THROWS_AS(DeformationParameter::unit_circle(M_PI), parameter_error);
    CHECK_THROWS_AS(DeformationParameter::unit_circle(3.5), parameter_error);
    CHECK_THROWS_AS(DeformationParameter::unit_circle(std::nan("")), parameter_error);
    CHECK_NOTHROW(DeformationParameter::unit_circle(3.1));
    CHECK_NOTHROW(DeformationParameter::real_positive(50.0));

    // |sin w| guard: within 1e-12 of pi counts as a root of unity.
    CHECK_THROWS_AS(DeformationParameter::unit_circle(M_PI - 1e-13), parameter_error);
    CHECK_NOTHROW(DeformationParameter::unit_circle(M_PI - 1e-11));
}

TEST_CASE("antisymmetry and w-reflection")
{
    for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
        for (double w : {0.05, 0.31, 0.9, 2.2}) {
            if (regime == QRegime::UnitCircle && w >= M_PI) {
                continue;
            }
            const DeformationParameter p(regime, w);
            for (double x : {0.5, 1.5, 2.0, 3.7, 6.5}) {
                CAPTURE(w);
                CAPTURE(x);
                CHECK(std::abs(q_number(-x, p) + q_number(x, p)) < 1e-13);
                CHECK(std::abs(detail::q_number_raw(x, w, regime) -
                               detail::q_number_raw(x, -w, regime)) < 1e-13);
            }
        }
    }
}

TEST_CASE("classical limit scales as w^2")
{
    for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
        const double sign = regime == QRegime::RealPositive ? 1.0 : -1.0;
        for (double x : {0.5, 2.0, 3.7}) {
            const double target = sign * x * (x * x - 1.0) / 6.0;
            for (double w : {1e-3, 5e-4, 2.5e-4}) {
                const double fitted = (detail::q_number_raw(x, w, regime) - x) / (w * w);
                CHECK(fitted == doctest::Approx(target).epsilon(1e-4).scale(1.0));
            }
        }
    }
}

TEST_CASE("continuity across the Taylor switch")
{
    for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
        for (double x : {0.5, 1.5, 4.0, 9.0}) {
            const double below = detail::q_number_raw(x, w_switch * (1 - 1e-13), regime);
            const double above = detail::q_number_raw(x, w_switch * (1 + 1e-13), regime);
            CHECK(std::abs(below - above) < 1e-12);
        }
    }
}

TEST_CASE("large argument stays finite on the real axis")
{
    // x*w beyond sinh overflow: [15]_q at w = 50 equals e^{700} to leading
    // order, which is still representable.
    const auto p = DeformationParameter::real_positive(50.0);
    const double v = q_number(15.0, p);
    CHECK(std::isfinite(v));
    CHECK(std::log(v) == doctest::Approx(700.0).epsilon(1e-10));
    CHECK(q_number(-15.0, p) == doctest::Approx(-v));

    // w itself beyond sinh overflow: [1/2]_q = e^{-w/2} to leading order.
    const auto pw = DeformationParameter::real_positive(720.0);
    CHECK(std::log(q_number(0.5, pw)) == doctest::Approx(-360.0).epsilon(1e-12));
}
