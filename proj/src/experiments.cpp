#include "nls/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "nls/datagen.hpp"
#include "nls/spectral.hpp"

namespace nls {

double l2_error(const SpectralField& a, const SpectralField& b) {
    require_same_grid(a, b);
    double sum = 0.0;
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        sum += std::norm(a.coeffs[i] - b.coeffs[i]);
    return std::sqrt(2.0 * std::numbers::pi * sum);
}

double mass_drift(const std::vector<double>& trace, double initial_mass) {
    if (trace.empty())
        throw std::invalid_argument("mass_drift: empty trace");
    if (!(initial_mass > 0.0)) {
        for (double m : trace)
            if (m != 0.0) return std::numeric_limits<double>::infinity();
        return 0.0;
    }
    double worst = 0.0;
    for (double m : trace)
        worst = std::max(worst, std::abs(m - initial_mass) / initial_mass);
    return worst;
}

double alpha_exponent(double gamma) {
    const double plus = std::max(1.0 - 2.0 * gamma, 0.0);
    return 1.0 + gamma - plus * plus / (1.0 + plus);
}

double predicted_bound(double gamma, double tau, int cutoff) {
    if (!(gamma > 0.0) || gamma > 2.0)
        throw unsupported_regularity(
            "predicted bound needs gamma in (0,2], got " +
            std::to_string(gamma));
    if (!(tau > 0.0) || cutoff < 1)
        throw std::invalid_argument("predicted_bound: need tau > 0, N >= 1");
    const double n = cutoff;
    const double e1 = std::min(2.0 * gamma, alpha_exponent(gamma));
    return std::pow(n, -e1) + tau * std::pow(n, -gamma) +
           tau * tau * std::pow(n, 4.0 - gamma);
}

double fit_slope(const std::vector<std::pair<double, double>>& rows,
                 double saturation_floor) {
    std::vector<std::pair<double, double>> usable;
    for (const auto& [tau, err] : rows)
        if (err >= saturation_floor && err > 0.0 && tau > 0.0)
            usable.emplace_back(tau, err);
    if (usable.size() < 4)
        throw insufficient_data("slope fit needs >= 4 usable rows, have " +
                                std::to_string(usable.size()));
    double sx = 0.0, sy = 0.0;
    for (const auto& [tau, err] : usable) {
        sx += std::log2(tau);
        sy += std::log2(err);
    }
    const double mx = sx / usable.size(), my = sy / usable.size();
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [tau, err] : usable) {
        const double dx = std::log2(tau) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log2(err) - my);
    }
    if (sxx == 0.0)
        throw insufficient_data("slope fit needs distinct tau values");
    return sxy / sxx;
}

const char* data_kind_name(DataKind d) {
    switch (d) {
        case DataKind::rough: return "rough";
        case DataKind::plane: return "plane";
        case DataKind::smooth: return "smooth";
    }
    return "?";
}

std::optional<DataKind> parse_data_kind(const std::string& name) {
    for (DataKind d : {DataKind::rough, DataKind::plane, DataKind::smooth})
        if (name == data_kind_name(d)) return d;
    return std::nullopt;
}

void RunConfig::validate() const {
    make_grid(modes);
    if (!(tmax > 0.0) || !std::isfinite(tmax))
        throw std::invalid_argument("tmax must be positive");
    if (lambda != 1 && lambda != -1)
        throw std::invalid_argument("lambda must be +1 or -1");
    if (power < 1) throw std::invalid_argument("power must be >= 1");
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (!(gamma > 0.0) || gamma > 2.0)
        throw unsupported_regularity("gamma must lie in (0,2], got " +
                                     std::to_string(gamma));
    if (tau_list.empty())
        throw std::invalid_argument("tau list must be nonempty");
    for (size_t i = 0; i < tau_list.size(); ++i) {
        if (!(tau_list[i] > 0.0))
            throw std::invalid_argument("tau values must be positive");
        if (i > 0 && !(tau_list[i] < tau_list[i - 1]))
            throw std::invalid_argument("tau list must be strictly decreasing");
        steps_for(tau_list[i]);
    }
    const double tau_min = tau_list.back();
    // oversampling guard: every filter the sweep will use stays below M/8
    bool any_modified = false, any_filtered = false;
    for (SchemeKind k : schemes) {
        any_filtered |= k == SchemeKind::filtered_strang;
        any_modified |= k == SchemeKind::modified_v1 ||
                        k == SchemeKind::modified_v2 ||
                        k == SchemeKind::modified_power;
    }
    if (any_modified && choose_cutoff(gamma, tau_min) > modes / 8)
        throw std::invalid_argument(
            "cutoff rule exceeds M/8 at the finest tau; raise the resolution");
    if (any_filtered && filtered_cutoff(tau_min) > modes / 8)
        throw std::invalid_argument(
            "filtered-Strang cutoff exceeds M/8 at the finest tau");
    if (data == DataKind::plane &&
        (plane_mode < -modes / 2 || plane_mode >= modes / 2))
        throw out_of_band("plane-wave mode does not fit the grid");
}

int RunConfig::steps_for(double tau) const {
    const double ratio = tmax / tau;
    const long long steps = std::llround(ratio);
    if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) >
                         1e-9 * std::max(1.0, ratio))
        throw std::invalid_argument(
            "tmax/tau must be a positive integer (dyadic tau = T*2^-j); got " +
            std::to_string(ratio));
    return static_cast<int>(steps);
}

SpectralField initial_field(const RunConfig& config) {
    switch (config.data) {
        case DataKind::rough:
            return rough_field({config.gamma, config.seed, config.modes});
        case DataKind::plane:
            return plane_wave(config.plane_amplitude, config.plane_mode,
                              config.modes);
        case DataKind::smooth:
            return smooth_field(config.modes);
    }
    throw std::logic_error("unreachable data kind");
}

namespace {

// Cutoff used by one sweep cell; 0 for the unfiltered schemes.
int cell_cutoff(SchemeKind kind, double gamma, double tau) {
    switch (kind) {
        case SchemeKind::filtered_strang: return filtered_cutoff(tau);
        case SchemeKind::modified_v1:
        case SchemeKind::modified_v2:
        case SchemeKind::modified_power: return choose_cutoff(gamma, tau);
        default: return 0;
    }
}

SchemeSpec make_spec(const RunConfig& config, SchemeKind kind, double tau,
                     double initial_mass) {
    return SchemeSpec{kind,
                      config.lambda,
                      tau,
                      cell_cutoff(kind, config.gamma, tau),
                      config.power,
                      initial_mass};
}

}  // namespace

// tau of the fine reference integration: min(tau_list)/64.
double tau_ref_of(const RunConfig& config) {
    return *std::min_element(config.tau_list.begin(), config.tau_list.end()) /
           64.0;
}

ReferenceSolution reference_solution(const RunConfig& config) {
    config.validate();
    const SpectralField u0 = initial_field(config);
    const double m0 = mass(u0);
    const double tau_ref = tau_ref_of(config);
    const long steps = std::llround(config.tmax / tau_ref);

    SchemeSpec strang{SchemeKind::strang, config.lambda, tau_ref, 0, 1, m0};
    // The cross-check integrator keeps its own cutoff rule; on coarse grids
    // the rule may cover the whole band, where it degenerates to Strang.
    const int n_check = choose_cutoff(config.gamma, tau_ref);
    SchemeSpec v2{SchemeKind::modified_v2, config.lambda, tau_ref,
                  n_check, 1, m0};

    SpectralField a = make_field(u0.grid), b = make_field(u0.grid);
    if (config.jobs >= 2) {
        std::exception_ptr err_a, err_b;
        std::thread ta([&] {
            try { a = evolve(u0, strang, steps); }
            catch (...) { err_a = std::current_exception(); }
        });
        std::thread tb([&] {
            try { b = evolve(u0, v2, steps); }
            catch (...) { err_b = std::current_exception(); }
        });
        ta.join();
        tb.join();
        if (err_a) std::rethrow_exception(err_a);
        if (err_b) std::rethrow_exception(err_b);
    } else {
        a = evolve(u0, strang, steps);
        b = evolve(u0, v2, steps);
    }

    const double delta = l2_error(a, b);
    if (delta > config.reference_gate_rel * l2_norm(u0))
        throw unreliable_reference(
            "reference cross-check disagreement " + std::to_string(delta) +
            " exceeds " + std::to_string(config.reference_gate_rel) +
            " * ||u0||; the reference cannot be trusted at tau_ref = " +
            std::to_string(tau_ref));
    return ReferenceSolution{std::move(a),
                             ReferenceInfo{tau_ref, delta, "strang", n_check}};
}

ConvergenceReport convergence_study(const RunConfig& config) {
    config.validate();
    ConvergenceReport report;
    report.config = config;

    const SpectralField u0 = initial_field(config);
    const double m0 = mass(u0);
    ReferenceSolution ref = reference_solution(config);
    report.reference = ref.info;

    struct Cell {
        SchemeKind scheme;
        double tau;
        ReportRow row;
        std::vector<SpectralField> snapshots;  // max-over-steps mode only
    };
    std::vector<Cell> cells;
    for (SchemeKind k : config.schemes)
        for (double tau : config.tau_list) cells.push_back({k, tau, {}, {}});

    if (config.error_max_over_steps) {
        // Every intermediate state of every cell is kept; refuse runs whose
        // footprint is clearly beyond a spot check.
        double entries = 0.0;
        for (const Cell& c : cells)
            entries += static_cast<double>(config.steps_for(c.tau)) *
                       config.modes;
        if (entries > 4.8e7)
            throw std::invalid_argument(
                "max-over-steps error mode is a spot-check facility; this "
                "configuration would store too many intermediate states");
    }

    auto run_cell = [&](Cell& cell) {
        ReportRow& row = cell.row;
        row.scheme = cell.scheme;
        row.tau = cell.tau;
        try {
            row.cutoff = cell_cutoff(cell.scheme, config.gamma, cell.tau);
        } catch (const infeasible_step& e) {
            row.skipped = true;
            row.note = std::string("infeasible: ") + e.what();
            return;
        }
        SchemeSpec spec{cell.scheme, config.lambda, cell.tau, row.cutoff,
                        config.power, m0};
        if (scheme_uses_cutoff(cell.scheme) && cell.tau * row.cutoff > 1.0) {
            row.skipped = true;
            row.note = "infeasible: tau*N > 1";
            return;
        }
        const long steps = config.steps_for(cell.tau);
        std::vector<double> masses;
        masses.reserve(steps);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            StepObserver obs;
            if (config.error_max_over_steps) {
                cell.snapshots.reserve(steps);
                obs = [&](long, double, const SpectralField& u) {
                    masses.push_back(mass(u));
                    cell.snapshots.push_back(u);
                };
            } else {
                obs = [&](long, double, const SpectralField& u) {
                    masses.push_back(mass(u));
                };
            }
            SpectralField uT = evolve(u0, spec, steps, obs);
            row.error_l2 = l2_error(uT, ref.field);
        } catch (const std::exception& e) {
            row.skipped = true;
            row.note = std::string("failed: ") + e.what();
            report.any_cell_failed = true;
            return;
        }
        const auto t1 = std::chrono::steady_clock::now();
        row.wall_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.mass_drift = masses.empty() ? 0.0 : mass_drift(masses, m0);
    };

    const int jobs =
        std::max(1, std::min<int>(config.jobs, static_cast<int>(cells.size())));
    if (jobs == 1) {
        for (Cell& c : cells) run_cell(c);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= cells.size()) break;
                run_cell(cells[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (std::thread& t : pool) t.join();
    }

    if (config.error_max_over_steps) {
        // One extra reference pass; each cell's time grid is a subset of the
        // reference grid because all step counts are dyadic multiples.
        const long ref_steps = std::llround(config.tmax / ref.info.tau_ref);
        std::vector<long> stride(cells.size(), 0);
        for (size_t c = 0; c < cells.size(); ++c)
            if (!cells[c].row.skipped)
                stride[c] = ref_steps / config.steps_for(cells[c].tau);
        SchemeSpec spec{SchemeKind::strang, config.lambda, ref.info.tau_ref,
                        0, 1, m0};
        evolve(u0, spec, ref_steps,
               [&](long n, double, const SpectralField& u_ref) {
                   for (size_t c = 0; c < cells.size(); ++c) {
                       if (stride[c] == 0 || n % stride[c] != 0) continue;
                       const size_t idx =
                           static_cast<size_t>(n / stride[c]) - 1;
                       cells[c].row.error_l2 =
                           std::max(cells[c].row.error_l2,
                                    l2_error(cells[c].snapshots[idx], u_ref));
                   }
               });
    }

    for (const Cell& c : cells) report.rows.push_back(c.row);

    // slope per scheme, with the reference floor filter
    const double floor10 = 10.0 * ref.info.delta_ref;
    for (SchemeKind k : config.schemes) {
        if (report.slopes.count(k) || report.slope_notes.count(k)) continue;
        std::vector<std::pair<double, double>> pts;
        double max_err = 0.0;
        for (const ReportRow& r : report.rows)
            if (r.scheme == k && !r.skipped) {
                pts.emplace_back(r.tau, r.error_l2);
                max_err = std::max(max_err, r.error_l2);
            }
        if (!pts.empty() && max_err <= 1e-9) {
            report.slope_notes[k] =
                "degenerate: all errors at the exactness floor";
            continue;
        }
        try {
            SlopeFit fit;
            fit.slope = fit_slope(pts, floor10);
            fit.tau_min = std::numeric_limits<double>::infinity();
            fit.tau_max = 0.0;
            for (const auto& [tau, err] : pts)
                if (err >= floor10 && err > 0.0) {
                    ++fit.rows_used;
                    fit.tau_min = std::min(fit.tau_min, tau);
                    fit.tau_max = std::max(fit.tau_max, tau);
                }
            report.slopes[k] = fit;
        } catch (const insufficient_data& e) {
            report.slope_notes[k] = e.what();
        }
    }
    return report;
}

namespace {
std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}
}  // namespace

void write_csv(const ConvergenceReport& report, std::ostream& out) {
    out << "scheme,tau,N,error_l2,mass_drift,wall_ms\n";
    for (const ReportRow& r : report.rows) {
        if (r.skipped) continue;
        out << scheme_name(r.scheme) << ',' << fmt17(r.tau) << ',' << r.cutoff
            << ',' << fmt17(r.error_l2) << ',' << fmt17(r.mass_drift) << ','
            << fmt17(r.wall_ms) << '\n';
    }
}

void write_json(const ConvergenceReport& report, std::ostream& out) {
    nlohmann::json j;
    const RunConfig& c = report.config;
    j["config"] = {
        {"gamma", c.gamma},
        {"tmax", c.tmax},
        {"tau_list", c.tau_list},
        {"seed", c.seed},
        {"modes", c.modes},
        {"lambda", c.lambda},
        {"power", c.power},
        {"data", data_kind_name(c.data)},
        {"error_mode", c.error_max_over_steps ? "max-over-steps" : "final-time"},
        {"reference_gate_rel", c.reference_gate_rel},
    };
    std::vector<std::string> names;
    for (SchemeKind k : c.schemes) names.emplace_back(scheme_name(k));
    j["config"]["schemes"] = names;
    j["reference"] = {
        {"scheme", report.reference.scheme},
        {"tau_ref", report.reference.tau_ref},
        {"delta_ref", report.reference.delta_ref},
        {"crosscheck_cutoff", report.reference.crosscheck_cutoff},
    };
    j["rows"] = nlohmann::json::array();
    for (const ReportRow& r : report.rows) {
        nlohmann::json row = {
            {"scheme", scheme_name(r.scheme)}, {"tau", r.tau},
            {"N", r.cutoff},                   {"error_l2", r.error_l2},
            {"mass_drift", r.mass_drift},      {"wall_ms", r.wall_ms},
        };
        if (r.skipped) {
            row["skipped"] = true;
            row["note"] = r.note;
        }
        j["rows"].push_back(row);
    }
    j["slopes"] = nlohmann::json::object();
    for (const auto& [k, fit] : report.slopes)
        j["slopes"][scheme_name(k)] = {{"slope", fit.slope},
                                       {"rows_used", fit.rows_used},
                                       {"tau_window", {fit.tau_min, fit.tau_max}}};
    for (const auto& [k, note] : report.slope_notes)
        j["slopes"][scheme_name(k)] = {{"not_applicable", note}};
    j["any_cell_failed"] = report.any_cell_failed;
    out << j.dump(2) << '\n';
}

void write_plot_script(const ConvergenceReport& report, std::ostream& out) {
    out << "# gnuplot script: L2 error at t = T against step size\n";
    out << "set logscale xy\nset xlabel 'tau'\nset ylabel 'L2 error'\n";
    out << "set key bottom right\nset grid\n";
    const double rate = theoretical_rate(report.config.gamma);
    for (SchemeKind k : report.config.schemes) {
        out << "$data_" << scheme_name(k) << " << EOD\n";
        for (const ReportRow& r : report.rows)
            if (r.scheme == k && !r.skipped)
                out << fmt17(r.tau) << ' ' << fmt17(r.error_l2) << '\n';
        out << "EOD\n";
    }
    // anchor the guide line at the coarsest non-skipped row
    double tau0 = 0.0, err0 = 0.0;
    for (const ReportRow& r : report.rows)
        if (!r.skipped && r.tau > tau0) {
            tau0 = r.tau;
            err0 = r.error_l2;
        }
    if (tau0 > 0.0 && err0 > 0.0)
        out << "guide(x) = " << fmt17(err0) << " * (x/" << fmt17(tau0)
            << ")**" << fmt17(rate) << "\n";
    out << "plot \\\n";
    bool first = true;
    for (SchemeKind k : report.config.schemes) {
        if (!first) out << ", \\\n";
        first = false;
        out << "  $data_" << scheme_name(k)
            << " using 1:2 with linespoints title '" << scheme_name(k) << "'";
    }
    if (tau0 > 0.0 && err0 > 0.0)
        out << ", \\\n  guide(x) with lines dashtype 2 title 'slope "
            << rate << "'";
    out << "\n";
}

}  // namespace nls
