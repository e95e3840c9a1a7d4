#pragma once

#include <vector>

#include "qosc/casimir.hpp"

namespace qosc {

/// One bound state in units of hbar*omega = 1. energy = 2n + alpha + 1/2.
struct Level {
    int n;
    int l;
    Branch branch;
    double alpha;
    double energy;
};

/// Derivative estimate of one branch's energy with respect to w.
struct BranchSlope {
    Branch branch;
    double derivative;
    int sign; ///< -1, 0, +1 with a 1e-12 deadband
};

/// Levels of the (n, l) multiplet: one per admissible alpha root, ordered by
/// energy ascending. Empty when no root is admissible.
std::vector<Level> energy(int n, int l, CasimirKind kind, const DeformationParameter& p);

/// Same levels from the explicit closed-form expressions (trigonometric /
/// hyperbolic identities rather than q-number ratios). Covers all l in the
/// RealPositive regime and l <= 1 on the UnitCircle; throws unsupported_case
/// otherwise.
std::vector<Level> closed_form_energy(int n, int l, CasimirKind kind, const DeformationParameter& p);

/// All levels with energy <= emax, n <= nmax, l <= lmax, sorted by
/// (energy, l, n, branch). The explicit n/l caps are required: on the unit
/// circle the energies are not monotone in l, so an energy cutoff alone
/// cannot bound the search.
std::vector<Level> enumerate_levels(double emax, int nmax, int lmax, CasimirKind kind,
                                    const DeformationParameter& p);

/// Groups consecutive levels whose energies agree within tol_e.
/// Input must be sorted by energy ascending.
std::vector<std::vector<Level>> degeneracy_report(const std::vector<Level>& levels,
                                                  double tol_e = 1e-9);

/// Finite-difference sign of dE/dw at w0 for every branch of the (n, l)
/// multiplet, Richardson-refined at dw/2. Throws branch_error if the
/// classification changes anywhere on [w0 - dw, w0 + dw].
std::vector<BranchSlope> monotonicity_probe(int n, int l, CasimirKind kind, QRegime regime,
                                            double w0, double dw = 1e-3);

} // namespace qosc
