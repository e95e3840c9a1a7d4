#include <cmath>
#include <complex>

#include <doctest.h>

#include "qosc/algebra.hpp"

using namespace qosc;
using cplx = std::complex<double>;

TEST_CASE("apply_J3")
{
    auto f = MonomialSum::monomial(2.0, 1);
    auto g = apply_J3(f);
    CHECK(g.coeff(2.0, 1) == cplx(1.0));
    CHECK(g.size() == 1);

    CHECK(apply_J3(MonomialSum::monomial(3.0, 0)).size() == 0);

    // linearity over a mixed sum
    MonomialSum mix;
    mix.add(1.0, 2, cplx(0.5, -1.0));
    mix.add(-0.5, -3, cplx(2.0, 0.0));
    auto h = apply_J3(mix);
    CHECK(h.coeff(1.0, 2) == cplx(1.0, -2.0));
    CHECK(h.coeff(-0.5, -3) == cplx(-6.0, 0.0));
}

TEST_CASE("ladder actions on single monomials")
{
    const auto p = DeformationParameter::real_positive(0.4);

    // [0]_q kills the constant under both ladders.
    CHECK(apply_Jplus(MonomialSum::monomial(0.0, 0), p).size() == 0);
    CHECK(apply_Jminus(MonomialSum::monomial(0.0, 0), p).size() == 0);

    // J+ on xi e^{-i phi}: a = 0, b = -1, output +1 * xi^0.
    auto up = apply_Jplus(MonomialSum::monomial(1.0, -1), p);
    CHECK(up.size() == 1);
    CHECK(up.coeff(0.0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(up.coeff(0.0, 0).imag() == doctest::Approx(0.0));

    // J- on xi e^{i phi}: a = -1, b = 0, output -1 * xi^0.
    auto down = apply_Jminus(MonomialSum::monomial(1.0, 1), p);
    CHECK(down.size() == 1);
    CHECK(down.coeff(0.0, 0).real() == doctest::Approx(-1.0).epsilon(1e-15));

    // Linearity: applying to a sum equals the sum of applications.
    MonomialSum mix;
    mix.add(1.0, -1, cplx(2.0, 1.0));
    mix.add(0.5, 2, cplx(-1.0, 0.5));
    auto lhs = apply_Jplus(mix, p);
    auto a = apply_Jplus(MonomialSum::monomial(1.0, -1, cplx(2.0, 1.0)), p);
    auto b = apply_Jplus(MonomialSum::monomial(0.5, 2, cplx(-1.0, 0.5)), p);
    a += b;
    CHECK(max_abs_diff(lhs, a) < 1e-15);
}

TEST_CASE("commutator residuals on the sample lattice")
{
    for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
        for (int i = 0; i < 20; ++i) {
            const double w = regime == QRegime::RealPositive ? 0.05 + 0.55 * i / 19.0
                                                             : 0.15 + 2.75 * i / 19.0;
            const DeformationParameter p(regime, w);
            for (double s : {-2.0, -0.5, 0.0, 1.0, 3.5}) {
                for (int m = -3; m <= 3; ++m) {
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
    }
}

TEST_CASE("diagonal commutator coefficient equals [2m]_q")
{
    const auto p = DeformationParameter::real_positive(0.3);
    const auto f = MonomialSum::monomial(1.0, 1);
    const auto comm = apply_Jplus(apply_Jminus(f, p), p) - apply_Jminus(apply_Jplus(f, p), p);
    CHECK(comm.coeff(1.0, 1).real() == doctest::Approx(2.0906770282577210).epsilon(1e-13));

    // m = 0 has diagonal target [0]_q = 0.
    const auto res0 = commutator_residuals(2.5, 0, p);
    CHECK(res0.diag_err < 1e-13);
}

TEST_CASE("identities survive non-dyadic exponents")
{
    const auto p = DeformationParameter::unit_circle(0.9);
    for (double s : {0.3, 1.7, -2.2}) {
        const auto res = commutator_residuals(s, 1, p);
        CHECK(res.offdiag_max < 1e-12);
        CHECK(res.diag_err < 1e-12);
        CHECK(res.j3_err < 1e-14);
    }
}

TEST_CASE("casimir operator on the constant monomial")
{
    for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
        for (double w : {0.3, 0.8}) {
            const DeformationParameter p(regime, w);
            const auto f = MonomialSum::monomial(0.0, 0);

            const auto cq = casimir_operator_apply(f, CasimirKind::Cq, p);
            const double expected = casimir_eigenvalue(0, CasimirKind::Cq, p);
            CHECK(cq.size() == 1);
            CHECK(cq.coeff(0.0, 0).real() == doctest::Approx(expected).epsilon(1e-13));
            CHECK(std::abs(cq.coeff(0.0, 0).imag()) < 1e-15);

            // C'_q annihilates it: J- kills the constant and [0]_q [-1]_q = 0.
            CHECK(casimir_operator_apply(f, CasimirKind::CqPrime, p).size() == 0);
        }
    }
}

TEST_CASE("casimir operators commute with the ladders")
{
    for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
        for (double w : {0.1, 0.45, 0.6}) {
            const DeformationParameter p(regime, w);
            for (double s : {-2.0, -0.5, 0.0, 1.0, 3.5}) {
                for (int m = -3; m <= 3; m += 2) {
                    for (CasimirKind kind : {CasimirKind::Cq, CasimirKind::CqPrime}) {
                        CAPTURE(s);
                        CAPTURE(m);
                        CAPTURE(w);
                        CHECK(casimir_commutator_residual(s, m, kind, p) < 1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("classical limit of the raising action")
{
    // At w -> 0 the coefficients become -a and -b with plain numbers. The
    // leading deviation is the a*b*w term of the q^{T} factors, so the
    // coefficients converge linearly while the q-number factors themselves
    // converge quadratically.
    for (double w : {1e-3, 5e-4}) {
        for (QRegime regime : {QRegime::RealPositive, QRegime::UnitCircle}) {
            const DeformationParameter p(regime, w);
            const double s = 1.5;
            const int m = -2;
            const double a = -(s + m) / 2.0;
            const double b = -(s - m) / 2.0;
            const auto jp = apply_Jplus(MonomialSum::monomial(s, m), p);
            const double bound = (std::abs(a * b) + 1.0) * w;
            CHECK(std::abs(jp.coeff(s + 1, m + 1) - cplx(-a)) < bound);
            CHECK(std::abs(jp.coeff(s - 1, m + 1) - cplx(-b)) < bound);
            // quadratic rate of the q-number factors alone
            CHECK(std::abs(q_number(a, p) - a) < std::abs(a) * w * w);
            CHECK(std::abs(q_number(b, p) - b) < 2.0 * std::abs(b) * w * w);
        }
    }
}

TEST_CASE("coefficient pruning")
{
    MonomialSum f;
    f.add(1.0, 0, cplx(1e-16, 0.0));
    f.add(2.0, 0, cplx(1.0, 0.0));
    f.prune();
    CHECK(f.size() == 1);
    CHECK(f.coeff(2.0, 0) == cplx(1.0));

    CHECK_THROWS_AS(f.add(0.0, 0, cplx(std::nan(""), 0.0)), parameter_error);
}
