#include "qosc/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "qosc/version.hpp"

namespace qosc {

std::string format_json_double(double v)
{
    if (std::isnan(v) || std::isinf(v)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_csv_double(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string regime_name(QRegime regime)
{
    return regime == QRegime::RealPositive ? "real" : "circle";
}

std::string casimir_name(CasimirKind kind)
{
    return kind == CasimirKind::Cq ? "cq" : "cqprime";
}

std::string branch_name(Branch branch)
{
    switch (branch) {
        case Branch::Plus: return "plus";
        case Branch::Minus: return "minus";
        case Branch::Only: return "only";
        case Branch::Double: return "double";
    }
    return "?";
}

Branch branch_from_name(const std::string& name)
{
    if (name == "plus") return Branch::Plus;
    if (name == "minus") return Branch::Minus;
    if (name == "only") return Branch::Only;
    if (name == "double") return Branch::Double;
    throw parameter_error("unknown branch name: " + name);
}

namespace {

void append_config(std::string& out, const RunConfig& cfg)
{
    out += "\"config\":{";
    out += "\"q_mode\":\"" + regime_name(cfg.regime) + "\",";
    out += "\"w\":" + format_json_double(cfg.w) + ",";
    out += "\"casimir\":\"" + casimir_name(cfg.kind) + "\",";
    out += "\"nmax\":" + std::to_string(cfg.nmax) + ",";
    out += "\"lmax\":" + std::to_string(cfg.lmax) + ",";
    out += "\"emax\":" + format_json_double(cfg.emax) + ",";
    out += std::string("\"format\":\"") + (cfg.format == OutputFormat::Json ? "json" : "csv") +
           "\",";
    out += std::string("\"generated_by\":\"") + version_string + "\"";
    out += "}";
}

} // namespace

std::string spectrum_json(const RunConfig& cfg, const std::vector<Level>& levels)
{
    std::string out = "{";
    append_config(out, cfg);
    out += ",\"count\":" + std::to_string(levels.size());
    out += ",\"levels\":[";
    bool first = true;
    for (const auto& lvl : levels) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += "{\"n\":" + std::to_string(lvl.n) + ",\"l\":" + std::to_string(lvl.l) +
               ",\"branch\":\"" + branch_name(lvl.branch) +
               "\",\"alpha\":" + format_json_double(lvl.alpha) +
               ",\"energy\":" + format_json_double(lvl.energy) + "}";
    }
    out += "]}\n";
    return out;
}

std::string spectrum_csv(const std::vector<Level>& levels)
{
    std::string out = "n,l,branch,alpha,energy\n";
    for (const auto& lvl : levels) {
        out += std::to_string(lvl.n) + "," + std::to_string(lvl.l) + "," +
               branch_name(lvl.branch) + "," + format_csv_double(lvl.alpha) + "," +
               format_csv_double(lvl.energy) + "\n";
    }
    return out;
}

std::string quadrupole_json(const RunConfig& cfg, int n,
                            const std::vector<QuadrupoleResult>& results)
{
    std::string out = "{";
    append_config(out, cfg);
    out += ",\"n\":" + std::to_string(n);
    out += ",\"count\":" + std::to_string(results.size());
    out += ",\"results\":[";
    bool first = true;
    for (const auto& r : results) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += "{\"w\":" + format_json_double(r.w) + ",\"branch\":\"" + branch_name(r.branch) +
               "\",\"angular\":" + format_json_double(r.angular_factor) +
               ",\"radial\":" + format_json_double(r.radial_factor) +
               ",\"Q\":" + format_json_double(r.q_moment) + "}";
    }
    out += "]}\n";
    return out;
}

std::string quadrupole_csv(const std::vector<QuadrupoleResult>& results)
{
    std::string out = "w,branch,angular,radial,Q\n";
    for (const auto& r : results) {
        out += format_csv_double(r.w) + "," + branch_name(r.branch) + "," +
               format_csv_double(r.angular_factor) + "," + format_csv_double(r.radial_factor) +
               "," + format_csv_double(r.q_moment) + "\n";
    }
    return out;
}

std::string wavefunction_json(const RunConfig& cfg, int l, Branch branch,
                              const RadialState& state,
                              const std::vector<WavefunctionSample>& samples)
{
    std::string out = "{";
    append_config(out, cfg);
    out += ",\"n\":" + std::to_string(state.n);
    out += ",\"l\":" + std::to_string(l);
    out += ",\"branch\":\"" + branch_name(branch) + "\"";
    out += ",\"metadata\":{";
    out += "\"alpha\":" + format_json_double(state.alpha);
    out += ",\"norm\":" + format_json_double(state.norm);
    out += std::string(",\"diverges_at_origin\":") + (state.alpha < 1.0 ? "true" : "false");
    out += "}";
    out += ",\"count\":" + std::to_string(samples.size());
    out += ",\"samples\":[";
    bool first = true;
    for (const auto& s : samples) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += "{\"r\":" + format_json_double(s.r) + ",\"R\":" + format_json_double(s.value) + "}";
    }
    out += "]}\n";
    return out;
}

std::string wavefunction_csv(const std::vector<WavefunctionSample>& samples)
{
    std::string out = "r,R\n";
    for (const auto& s : samples) {
        out += format_csv_double(s.r) + "," + format_csv_double(s.value) + "\n";
    }
    return out;
}

std::string algebra_json(const RunConfig& cfg, const std::vector<AlgebraResidualRow>& rows)
{
    std::string out = "{";
    append_config(out, cfg);
    out += ",\"count\":" + std::to_string(rows.size());
    out += ",\"points\":[";
    bool first = true;
    for (const auto& r : rows) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += "{\"s\":" + format_json_double(r.s) + ",\"m\":" + std::to_string(r.m) +
               ",\"w\":" + format_json_double(r.w) +
               ",\"offdiag\":" + format_json_double(r.residuals.offdiag_max) +
               ",\"diag_err\":" + format_json_double(r.residuals.diag_err) +
               ",\"j3_err\":" + format_json_double(r.residuals.j3_err) +
               ",\"diag_target\":" + format_json_double(r.diag_target) + "}";
    }
    out += "]}\n";
    return out;
}

std::string algebra_csv(const std::vector<AlgebraResidualRow>& rows)
{
    std::string out = "s,m,w,offdiag,diag_err,j3_err\n";
    for (const auto& r : rows) {
        out += format_csv_double(r.s) + "," + std::to_string(r.m) + "," + format_csv_double(r.w) +
               "," + format_csv_double(r.residuals.offdiag_max) + "," +
               format_csv_double(r.residuals.diag_err) + "," +
               format_csv_double(r.residuals.j3_err) + "\n";
    }
    return out;
}

} // namespace qosc
