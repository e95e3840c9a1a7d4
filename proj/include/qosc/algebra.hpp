#pragma once

#include <complex>
#include <map>

#include "qosc/casimir.hpp"
#include "qosc/deform.hpp"

namespace qosc {

/// Identity key of one basis function xi^s e^{im phi}, xi = tan(theta/2).
/// s may be any real; the generator shift rules hold identically in s.
struct MonomialKey {
    double s;
    int m;

    auto operator<=>(const MonomialKey&) const = default;
};

/// Coefficients below this magnitude are dropped after each operator
/// application, separating analytic zeros from roundoff.
inline constexpr double coeff_prune = 1e-15;

/// Finite complex combination of basis monomials. The deformed generators
/// act by exact two-term shift rules on this space, so the algebra closes on
/// finitely many terms with no truncation artifacts.
class MonomialSum {
public:
    MonomialSum() = default;

    static MonomialSum monomial(double s, int m, std::complex<double> coeff = 1.0);

    void add(double s, int m, std::complex<double> coeff);
    /// Drops terms with |coeff| < coeff_prune.
    void prune();

    const std::map<MonomialKey, std::complex<double>>& terms() const { return terms_; }
    std::complex<double> coeff(double s, int m) const;
    std::size_t size() const { return terms_.size(); }
    double max_abs_coeff() const;

    MonomialSum& operator+=(const MonomialSum& other);
    MonomialSum& operator*=(std::complex<double> factor);
    friend MonomialSum operator-(MonomialSum a, const MonomialSum& b);

private:
    std::map<MonomialKey, std::complex<double>> terms_;
};

/// Largest coefficient magnitude of a - b; the test metric for operator
/// identities.
double max_abs_diff(const MonomialSum& a, const MonomialSum& b);

/// J3 = -i d/dphi: scales each term by m.
MonomialSum apply_J3(const MonomialSum& f);

/// Raising generator: per monomial with a = -(s+m)/2, b = -(s-m)/2,
///   J+ : coeff -> -( [a]_q q^b xi^{s+1} + q^a [b]_q xi^{s-1} ) e^{i(m+1)phi}.
MonomialSum apply_Jplus(const MonomialSum& f, const DeformationParameter& p);

/// Lowering generator, the mirror rule with overall sign +:
///   J- : coeff -> +( [a]_q q^b xi^{s-1} + q^a [b]_q xi^{s+1} ) e^{i(m-1)phi}.
MonomialSum apply_Jminus(const MonomialSum& f, const DeformationParameter& p);

/// Casimir operator as a composition of the generator actions plus the
/// diagonal q-number-of-J3 part.
MonomialSum casimir_operator_apply(const MonomialSum& f, CasimirKind kind,
                                   const DeformationParameter& p);

/// Residuals of the commutation relations on the single monomial (s, m):
///   offdiag_max : largest |coefficient| of [J+, J-] f at xi^{s +- 2}
///   diag_err    : |coefficient at xi^s minus [2m]_q|
///   j3_err      : worst residual of [J3, J+-] f = +- J+- f
struct CommutatorResiduals {
    double offdiag_max;
    double diag_err;
    double j3_err;
};

CommutatorResiduals commutator_residuals(double s, int m, const DeformationParameter& p);

/// Max coefficient of (C J+- - J+- C) applied to the monomial (s, m); zero
/// when the Casimir is invariant.
double casimir_commutator_residual(double s, int m, CasimirKind kind,
                                   const DeformationParameter& p);

} // namespace qosc
