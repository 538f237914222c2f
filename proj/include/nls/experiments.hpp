#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nls/schemes.hpp"

namespace nls {

// sqrt(2 pi sum_k |a_k - b_k|^2); fields must share a grid.
double l2_error(const SpectralField& a, const SpectralField& b);

// max_n |mass_n - initial| / initial over a per-step mass trace.
double mass_drift(const std::vector<double>& trace, double initial_mass);

// Diagnostic bound of the splitting error at parameters (gamma, tau, N):
// N^{-min(2 gamma, alpha)} + tau N^{-gamma} + tau^2 N^{4-gamma}, with
// alpha(gamma) = 1 + gamma - (1-2 gamma)_+^2 / (1 + (1-2 gamma)_+).
// The multiplicative constant is not modeled.
double alpha_exponent(double gamma);
double predicted_bound(double gamma, double tau, int cutoff);

// Ordinary least squares of log2(error) against log2(tau). Rows with
// error < saturation_floor are discarded first; fewer than 4 surviving rows
// raise insufficient_data.
double fit_slope(const std::vector<std::pair<double, double>>& rows,
                 double saturation_floor = 0.0);

enum class DataKind { rough, plane, smooth };
const char* data_kind_name(DataKind d);
std::optional<DataKind> parse_data_kind(const std::string& name);

// A convergence experiment: one initial field, one horizon, a dyadic list of
// step sizes, several schemes measured against a shared fine reference.
struct RunConfig {
    double gamma = 1.0;
    double tmax = 1.0;
    std::vector<double> tau_list;  // strictly decreasing, tmax * 2^-j
    std::uint64_t seed = 0;
    int modes = 0;
    std::vector<SchemeKind> schemes;
    int lambda = 1;
    int power = 1;  // for modified_power entries
    DataKind data = DataKind::rough;
    int plane_mode = 3;
    cplx plane_amplitude{1.0, 0.0};

    // Measure max_n ||u(t_n) - u^n|| instead of the error at t = T only.
    // Stores every intermediate state of every cell; spot-check scales only.
    bool error_max_over_steps = false;

    int jobs = 1;
    // Reference cross-check gate, relative to ||u0||_{L2}.
    double reference_gate_rel = 1e-7;

    void validate() const;
    int steps_for(double tau) const;  // T/tau, validated integral
};

SpectralField initial_field(const RunConfig& config);

struct ReferenceInfo {
    double tau_ref = 0.0;
    double delta_ref = 0.0;  // L2 distance between the two fine integrators
    std::string scheme = "strang";
    int crosscheck_cutoff = 0;
};

struct ReferenceSolution {
    SpectralField field;
    ReferenceInfo info;
};

// tau of the fine reference integration: min(tau_list)/64.
double tau_ref_of(const RunConfig& config);

// Fine Strang integration at tau_ref = min(tau_list)/64, cross-checked by
// modified_v2 at the same tau_ref; throws unreliable_reference when the two
// disagree beyond reference_gate_rel * ||u0||.
ReferenceSolution reference_solution(const RunConfig& config);

struct ReportRow {
    SchemeKind scheme = SchemeKind::strang;
    double tau = 0.0;
    int cutoff = 0;
    double error_l2 = 0.0;
    double mass_drift = 0.0;
    double wall_ms = 0.0;
    bool skipped = false;
    std::string note;  // skip reason or failure message
};

struct SlopeFit {
    double slope = 0.0;
    int rows_used = 0;
    double tau_min = 0.0, tau_max = 0.0;  // fit window
};

struct ConvergenceReport {
    RunConfig config;
    ReferenceInfo reference;
    std::vector<ReportRow> rows;
    std::map<SchemeKind, SlopeFit> slopes;
    std::map<SchemeKind, std::string> slope_notes;  // why a slope is absent
    bool any_cell_failed = false;

    std::optional<double> slope_for(SchemeKind k) const {
        auto it = slopes.find(k);
        if (it == slopes.end()) return std::nullopt;
        return it->second.slope;
    }
};

ConvergenceReport convergence_study(const RunConfig& config);

// CSV: header scheme,tau,N,error_l2,mass_drift,wall_ms; 17 significant
// digits. JSON mirrors the CSV plus slopes and reference diagnostics.
void write_csv(const ConvergenceReport& report, std::ostream& out);
void write_json(const ConvergenceReport& report, std::ostream& out);
// Self-contained gnuplot script: log-log error vs tau per scheme with a
// guide line at the proven rate.
void write_plot_script(const ConvergenceReport& report, std::ostream& out);

}  // namespace nls
