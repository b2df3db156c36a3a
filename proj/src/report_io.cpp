#include "terratrack/report_io.hpp"

#include <sstream>

#include "terratrack/format.hpp"
#include "terratrack/terrain.hpp"

namespace terratrack {
namespace {

std::string sig(double value) { return format_sig(value, 6); }

void render_checks(std::ostringstream& out, const std::vector<CheckResult>& checks) {
    for (const CheckResult& check : checks) {
        out << "    " << check.name;
        for (std::size_t pad = check.name.size(); pad < 14; ++pad) out << ' ';
        out << to_string(check.status);
        if (check.status != CheckStatus::not_applicable) {
            out << "  measured " << sig(check.measured) << "  " << check.requirement
                << "  margin " << sig(check.margin);
        } else {
            out << "  " << check.requirement;
        }
        out << '\n';
    }
}

}  // namespace

std::string render_text(const PerformanceReport& report, bool verbose) {
    std::ostringstream out;
    out << "tracked-chassis performance\n";
    out << "  thrust model: both tracks (A = 2 b l); F is the vehicle total\n";
    out << "  compaction mode: " << to_string(report.rc_mode) << '\n';
    out << "  K_p: " << sig(report.K_p) << " (" << to_string(report.kp_source);
    if (report.kp_source == KpSource::override_value) {
        out << "; formula gives " << sig(rankine_kp(report.soil.phi_deg));
    }
    out << ")\n";
    if (verbose) {
        const TrackGeometry& g = report.geom;
        const TerrainParams& s = report.soil;
        const VehicleOperatingState& st = report.state;
        out << "  geometry: b " << sig(g.b) << " m, l " << sig(g.l) << " m, B " << sig(g.B)
            << " m, P " << sig(g.P) << " m, RD " << sig(g.RD) << " m, RS " << sig(g.RS)
            << " m, D " << sig(g.D) << " m\n";
        out << "  speed fluctuation delta: " << sig(g.delta_pct) << " % (reported, unused)\n";
        out << "  terrain: n " << sig(s.n) << ", k_c " << sig(s.k_c) << ", k_phi "
            << sig(s.k_phi) << ", c " << sig(s.c) << " kPa, phi " << sig(s.phi_deg)
            << " deg, gamma " << sig(s.gamma) << " kN/m^3, K " << sig(s.K) << " m\n";
        out << "  state: m " << sig(st.m) << " kg, v " << sig(st.v) << " m/s, i "
            << sig(st.i) << ", theta " << sig(st.theta_deg) << " deg, g " << sig(st.g)
            << " m/s^2\n";
    }
    out << "  weight W            " << sig(report.W) << " N\n";
    out << "  ground pressure p   " << sig(report.p) << " kPa\n";
    out << "  sinkage modulus k   " << sig(report.k) << " kN/m^(n+2)\n";
    out << "  static sinkage z_o  " << sig(report.z_o) << " m\n";
    out << "  internal R_in       " << sig(report.R_in) << " N\n";
    out << "  bulldozing R_b      " << sig(report.R_b) << " N\n";
    out << "  compaction R_c      " << sig(report.R_c) << " N (" << to_string(report.rc_mode);
    if (report.rc_mode == CompactionMode::verbatim_eq8) {
        out << ", quadrature error <= " << format_sig(report.rc_quadrature_error, 3);
    }
    out << ")\n";
    out << "  grade R_g           " << sig(report.R_g) << " N\n";
    out << "  soil thrust F       " << sig(report.F) << " N\n";
    out << "  drawbar pull        " << sig(report.drawbar_pull) << " N\n";
    out << "  acceleration a      " << sig(report.a) << " m/s^2\n";
    out << "  checks\n";
    render_checks(out, report.checks);
    return out.str();
}

std::string performance_csv_header() {
    return "W,p,k,K_p,kp_source,z_o,R_in,R_b,R_c,rc_mode,R_g,F,drawbar_pull,a\n";
}

std::string performance_csv_row(const PerformanceReport& r) {
    std::ostringstream out;
    out << format_full(r.W) << ',' << format_full(r.p) << ',' << format_full(r.k) << ','
        << format_full(r.K_p) << ',' << to_string(r.kp_source) << ',' << format_full(r.z_o)
        << ',' << format_full(r.R_in) << ',' << format_full(r.R_b) << ',' << format_full(r.R_c)
        << ',' << to_string(r.rc_mode) << ',' << format_full(r.R_g) << ',' << format_full(r.F)
        << ',' << format_full(r.drawbar_pull) << ',' << format_full(r.a) << '\n';
    return out.str();
}

std::string render_text(const FeasibilityReport& report) {
    std::ostringstream out;
    out << "mission feasibility\n";
    render_checks(out, report.checks);
    out << "  overall: " << (report.all_passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string feasibility_csv_header() { return "check,status,measured,requirement,margin\n"; }

std::string feasibility_csv_row(const CheckResult& check) {
    std::ostringstream out;
    out << check.name << ',' << to_string(check.status) << ',' << format_full(check.measured)
        << ",\"" << check.requirement << "\"," << format_full(check.margin) << '\n';
    return out.str();
}

std::string sweep_csv_header() {
    return "b,l,B,v,m,i,z_o,R_in,R_b,R_c,R_g,F,drawbar_pull,a,feasible,failed_check,"
           "objective\n";
}

std::string sweep_csv_row(const SweepRow& row) {
    std::ostringstream out;
    out << format_full(row.b) << ',' << format_full(row.l) << ',' << format_full(row.B) << ','
        << format_full(row.v) << ',' << format_full(row.m) << ',' << format_full(row.i) << ','
        << format_full(row.z_o) << ',' << format_full(row.R_in) << ',' << format_full(row.R_b)
        << ',' << format_full(row.R_c) << ',' << format_full(row.R_g) << ','
        << format_full(row.F) << ',' << format_full(row.drawbar_pull) << ','
        << format_full(row.a) << ',' << (row.feasible ? '1' : '0') << ','
        << to_string(row.failed) << ',' << (row.feasible ? format_full(row.objective) : "")
        << '\n';
    return out.str();
}

std::string render_summary(const SweepResult& result, Objective objective) {
    std::ostringstream out;
    out << "design sweep\n";
    out << "  grid points  " << result.total << '\n';
    out << "  feasible     " << result.feasible_count << '\n';
    if (!result.best) {
        out << "  no feasible configuration in the swept space\n";
        return out.str();
    }
    const SweepRow& best = *result.best;
    out << "  best (b, l, B, v, m, i) = (" << sig(best.b) << ", " << sig(best.l) << ", "
        << sig(best.B) << ", " << sig(best.v) << ", " << sig(best.m) << ", " << sig(best.i)
        << ")\n";
    out << "  " << to_string(objective) << " = " << sig(best.objective) << '\n';
    if (result.refined) {
        out << "  refined " << to_string(result.refined->var) << " = "
            << sig(result.refined->value) << " -> " << to_string(objective) << " = "
            << sig(result.refined->objective) << " (golden-section)\n";
    }
    if (result.best_report) {
        out << '\n' << render_text(*result.best_report);
    }
    if (result.best_feasibility && !result.best_feasibility->checks.empty()) {
        out << '\n' << render_text(*result.best_feasibility);
    }
    return out.str();
}

}  // namespace terratrack
