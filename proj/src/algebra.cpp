#include "qosc/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace qosc {

namespace {

// Exponents are snapped to a 2^-32 grid so that the +-1 ladder shifts stay
// exactly representable and shifted terms recombine on identical keys.
double snap_exponent(double s)
{
    if (std::abs(s) > 0x1p20) {
        throw parameter_error("monomial exponent out of supported range");
    }
    return std::round(s * 0x1p32) * 0x1p-32;
}

} // namespace

MonomialSum MonomialSum::monomial(double s, int m, std::complex<double> coeff)
{
    MonomialSum f;
    f.add(s, m, coeff);
    return f;
}

void MonomialSum::add(double s, int m, std::complex<double> coeff)
{
    if (!std::isfinite(coeff.real()) || !std::isfinite(coeff.imag())) {
        throw parameter_error("monomial coefficient must be finite");
    }
    terms_[{snap_exponent(s), m}] += coeff;
}

void MonomialSum::prune()
{
    std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < coeff_prune; });
}

std::complex<double> MonomialSum::coeff(double s, int m) const
{
    const auto it = terms_.find({snap_exponent(s), m});
    return it == terms_.end() ? std::complex<double>{} : it->second;
}

double MonomialSum::max_abs_coeff() const
{
    double worst = 0.0;
    for (const auto& [key, c] : terms_) {
        worst = std::max(worst, std::abs(c));
    }
    return worst;
}

MonomialSum& MonomialSum::operator+=(const MonomialSum& other)
{
    for (const auto& [key, c] : other.terms_) {
        terms_[key] += c;
    }
    return *this;
}

MonomialSum& MonomialSum::operator*=(std::complex<double> factor)
{
    for (auto& [key, c] : terms_) {
        c *= factor;
    }
    return *this;
}

MonomialSum operator-(MonomialSum a, const MonomialSum& b)
{
    for (const auto& [key, c] : b.terms_) {
        a.terms_[key] -= c;
    }
    return a;
}

double max_abs_diff(const MonomialSum& a, const MonomialSum& b)
{
    return (a - b).max_abs_coeff();
}

MonomialSum apply_J3(const MonomialSum& f)
{
    MonomialSum out;
    for (const auto& [key, c] : f.terms()) {
        if (key.m != 0) {
            out.add(key.s, key.m, double(key.m) * c);
        }
    }
    out.prune();
    return out;
}

namespace {

/// Shared ladder rule. J+ uses (ds_first, dm, sign) = (+1, +1, -1); J- uses
/// (-1, -1, +1). The [T1]_q q^{T2} piece multiplies by xi^{ds_first}, the
/// q^{T1} [T2]_q piece by xi^{-ds_first}.
MonomialSum apply_ladder(const MonomialSum& f, const DeformationParameter& p, int ds_first,
                         int dm, double sign)
{
    MonomialSum out;
    for (const auto& [key, c] : f.terms()) {
        const double a = -(key.s + key.m) / 2.0;
        const double b = -(key.s - key.m) / 2.0;
        const std::complex<double> first = q_number(a, p) * q_power(b, p);
        const std::complex<double> second = q_power(a, p) * q_number(b, p);
        out.add(key.s + ds_first, key.m + dm, sign * first * c);
        out.add(key.s - ds_first, key.m + dm, sign * second * c);
    }
    out.prune();
    return out;
}

} // namespace

MonomialSum apply_Jplus(const MonomialSum& f, const DeformationParameter& p)
{
    return apply_ladder(f, p, +1, +1, -1.0);
}

MonomialSum apply_Jminus(const MonomialSum& f, const DeformationParameter& p)
{
    return apply_ladder(f, p, -1, -1, +1.0);
}

MonomialSum casimir_operator_apply(const MonomialSum& f, CasimirKind kind,
                                   const DeformationParameter& p)
{
    MonomialSum out = apply_Jplus(apply_Jminus(f, p), p);
    for (const auto& [key, c] : f.terms()) {
        double diag;
        if (kind == CasimirKind::Cq) {
            const double h = q_number(key.m - 0.5, p);
            diag = h * h - 0.25;
        } else {
            diag = q_number(key.m, p) * q_number(key.m - 1.0, p);
        }
        out.add(key.s, key.m, diag * c);
    }
    out.prune();
    return out;
}

CommutatorResiduals commutator_residuals(double s, int m, const DeformationParameter& p)
{
    const MonomialSum f = MonomialSum::monomial(s, m);
    const MonomialKey seed = f.terms().begin()->first;

    MonomialSum jpjm = apply_Jplus(apply_Jminus(f, p), p);
    const MonomialSum jmjp = apply_Jminus(apply_Jplus(f, p), p);
    const MonomialSum comm = jpjm - jmjp;

    double offdiag = 0.0;
    for (const auto& [key, c] : comm.terms()) {
        if (key != seed) {
            offdiag = std::max(offdiag, std::abs(c));
        }
    }
    const double diag_err =
        std::abs(comm.coeff(seed.s, seed.m) - std::complex<double>(q_number(2.0 * m, p)));

    // [J3, J+-] f = +- J+- f, checked coefficientwise.
    double j3_err = 0.0;
    {
        const MonomialSum jp = apply_Jplus(f, p);
        const MonomialSum lhs = apply_J3(jp) - apply_Jplus(apply_J3(f), p);
        j3_err = std::max(j3_err, max_abs_diff(lhs, jp));
    }
    {
        const MonomialSum jm = apply_Jminus(f, p);
        MonomialSum lhs = apply_J3(jm) - apply_Jminus(apply_J3(f), p);
        MonomialSum neg = jm;
        neg *= -1.0;
        j3_err = std::max(j3_err, max_abs_diff(lhs, neg));
    }
    return {offdiag, diag_err, j3_err};
}

double casimir_commutator_residual(double s, int m, CasimirKind kind,
                                   const DeformationParameter& p)
{
    const MonomialSum f = MonomialSum::monomial(s, m);
    double worst = 0.0;
    {
        const MonomialSum lhs = casimir_operator_apply(apply_Jplus(f, p), kind, p);
        const MonomialSum rhs = apply_Jplus(casimir_operator_apply(f, kind, p), p);
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    {
        const MonomialSum lhs = casimir_operator_apply(apply_Jminus(f, p), kind, p);
        const MonomialSum rhs = apply_Jminus(casimir_operator_apply(f, kind, p), p);
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    return worst;
}

} // namespace qosc
