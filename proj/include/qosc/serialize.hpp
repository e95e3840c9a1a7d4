#pragma once

#include <limits>
#include <string>
#include <vector>

#include "qosc/algebra.hpp"
#include "qosc/quadrupole.hpp"
#include "qosc/radial.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

enum class OutputFormat { Json, Csv };

/// One resolved CLI invocation. Mirrors the DeformationParameter domain
/// rules; deformation() validates before any computation runs.
struct RunConfig {
    QRegime regime = QRegime::RealPositive;
    double w = 0.0;
    CasimirKind kind = CasimirKind::Cq;
    int nmax = 10;
    int lmax = 10;
    double emax = std::numeric_limits<double>::infinity();
    OutputFormat format = OutputFormat::Json;

    DeformationParameter deformation() const { return {regime, w}; }
};

// Numbers are serialized with 17 significant digits in JSON (the round-trip
// format) and 12 in CSV (the plotting format).
std::string format_json_double(double v);
std::string format_csv_double(double v);

std::string regime_name(QRegime regime);
std::string casimir_name(CasimirKind kind);
std::string branch_name(Branch branch);
Branch branch_from_name(const std::string& name);

struct WavefunctionSample {
    double r;
    double value;
};

struct AlgebraResidualRow {
    double s;
    int m;
    double w;
    CommutatorResiduals residuals;
    double diag_target; ///< [2m]_q
};

std::string spectrum_json(const RunConfig& cfg, const std::vector<Level>& levels);
std::string spectrum_csv(const std::vector<Level>& levels);

std::string quadrupole_json(const RunConfig& cfg, int n,
                            const std::vector<QuadrupoleResult>& results);
std::string quadrupole_csv(const std::vector<QuadrupoleResult>& results);

std::string wavefunction_json(const RunConfig& cfg, int l, Branch branch,
                              const RadialState& state,
                              const std::vector<WavefunctionSample>& samples);
std::string wavefunction_csv(const std::vector<WavefunctionSample>& samples);

std::string algebra_json(const RunConfig& cfg, const std::vector<AlgebraResidualRow>& rows);
std::string algebra_csv(const std::vector<AlgebraResidualRow>& rows);

} // namespace qosc
