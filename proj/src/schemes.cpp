#include "nls/schemes.hpp"

#include <cmath>
#include <numbers>

#include "nls/fft.hpp"
#include "nls/flows.hpp"
#include "nls/spectral.hpp"

namespace nls {

const char* scheme_name(SchemeKind k) {
    switch (k) {
        case SchemeKind::lie: return "lie";
        case SchemeKind::strang: return "strang";
        case SchemeKind::filtered_strang: return "filtered-strang";
        case SchemeKind::modified_v1: return "modified-v1";
        case SchemeKind::modified_v2: return "modified-v2";
        case SchemeKind::modified_power: return "modified-power";
    }
    return "?";
}

std::optional<SchemeKind> parse_scheme(const std::string& name) {
    for (SchemeKind k :
         {SchemeKind::lie, SchemeKind::strang, SchemeKind::filtered_strang,
          SchemeKind::modified_v1, SchemeKind::modified_v2,
          SchemeKind::modified_power})
        if (name == scheme_name(k)) return k;
    // underscore spelling accepted as well
    std::string alt = name;
    for (char& c : alt)
        if (c == '_') c = '-';
    if (alt != name) return parse_scheme(alt);
    return std::nullopt;
}

bool scheme_uses_cutoff(SchemeKind k) {
    return k == SchemeKind::filtered_strang || k == SchemeKind::modified_v1 ||
           k == SchemeKind::modified_v2 || k == SchemeKind::modified_power;
}

void SchemeSpec::validate() const {
    if (lambda != 1 && lambda != -1)
        throw std::invalid_argument("lambda must be +1 or -1");
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("tau must be finite and >= 0");
    if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    if (power < 1) throw std::invalid_argument("power must be >= 1");
    if (!(initial_mass >= 0.0) || !std::isfinite(initial_mass))
        throw std::invalid_argument("initial mass must be finite and >= 0");
    if (scheme_uses_cutoff(kind) && tau * cutoff > 1.0 + 1e-12)
        throw infeasible_step("tau*N = " + std::to_string(tau * cutoff) +
                              " exceeds 1");
}

int choose_cutoff(double gamma, double tau) {
    if (!(gamma > 0.0) || gamma > 2.0)
        throw unsupported_regularity("cutoff rule needs gamma in (0,2], got " +
                                     std::to_string(gamma));
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("tau must be positive");
    const double e = gamma < 1.0 ? 2.0 / (4.0 + gamma) : 2.0 / 5.0;
    const double x = std::pow(tau, -e);
    // nudge before floor: pow can land just under an exact integer
    const int n = std::max(1, static_cast<int>(std::floor(x + x * 1e-12)));
    if (tau * n > 1.0 + 1e-12)
        throw infeasible_step("cutoff rule gives tau*N = " +
                              std::to_string(tau * n) + " > 1");
    return n;
}

int filtered_cutoff(double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("tau must be positive");
    const double x = std::pow(tau, -0.5);
    return std::max(1, static_cast<int>(std::floor(x + x * 1e-12)));
}

double theoretical_rate(double gamma) {
    if (!(gamma > 0.0) || gamma > 2.0)
        throw unsupported_regularity("rate defined for gamma in (0,2], got " +
                                     std::to_string(gamma));
    if (gamma < 1.0) return 4.0 * gamma / (4.0 + gamma);
    return 2.0 * (1.0 + gamma) / 5.0;
}

namespace {

// One-step map with the per-mode dispersion multipliers precomputed, so that
// evolve() pays the phase reduction once instead of every step.
class OneStep {
  public:
    OneStep(const SchemeSpec& spec, GridSpec grid) : spec_(spec), grid_(grid) {
        spec.validate();
        const int m = grid.modes;
        half_.resize(m);
        full_.resize(m);
        for (int i = 0; i < m; ++i) {
            long long k = grid.wavenumber(i);
            half_[i] = dispersion_phase(k * k, spec.tau / 2.0);
            full_[i] = dispersion_phase(k * k, spec.tau);
        }
        mass_phase_v1_ = std::polar(
            1.0, -4.0 * std::numbers::pi * spec.lambda * spec.initial_mass *
                     spec.tau);
        mass_phase_v2_ = std::polar(
            1.0, -2.0 * std::numbers::pi * spec.lambda * spec.initial_mass *
                     spec.tau);
    }

    SpectralField operator()(const SpectralField& u) const {
        switch (spec_.kind) {
            case SchemeKind::lie: return step_lie(u);
            case SchemeKind::strang: return step_strang(u);
            case SchemeKind::filtered_strang: return step_filtered(u);
            case SchemeKind::modified_v1: return step_v1(u);
            case SchemeKind::modified_v2: return step_v2(u);
            case SchemeKind::modified_power: return step_power(u);
        }
        throw std::logic_error("unreachable scheme kind");
    }

  private:
    void apply(SpectralField& u, const std::vector<cplx>& mult) const {
        for (size_t i = 0; i < u.coeffs.size(); ++i) u.coeffs[i] *= mult[i];
    }

    FlowParams flow_params() const {
        return FlowParams{spec_.lambda, spec_.tau, spec_.cutoff, spec_.power};
    }

    SpectralField step_lie(const SpectralField& u) const {
        SpectralField v = nonlinear_flow(u, flow_params());
        apply(v, full_);
        return v;
    }

    SpectralField step_strang(const SpectralField& u) const {
        SpectralField v = u;
        apply(v, half_);
        v = nonlinear_flow(v, flow_params());
        apply(v, half_);
        return v;
    }

    SpectralField step_filtered(const SpectralField& u) const {
        SpectralField v = project_low(u, spec_.cutoff);
        apply(v, half_);
        v = nonlinear_flow(v, flow_params());
        apply(v, half_);
        return project_low(v, spec_.cutoff);
    }

    SpectralField step_v1(const SpectralField& u) const {
        // high branch: free flow of the full field times the scalar mass
        // phase, then the high projection
        SpectralField high = u;
        apply(high, full_);
        for (cplx& c : high.coeffs) c *= mass_phase_v1_;
        high = project_high(high, spec_.cutoff);
        // low branch: Strang applied to the low-pass part; the trailing low
        // projection commutes with the last half flow and is applied last
        SpectralField low = project_low(u, spec_.cutoff);
        apply(low, half_);
        low = nonlinear_flow(low, flow_params());
        apply(low, half_);
        low = project_low(low, spec_.cutoff);
        // disjoint frequency supports
        for (size_t i = 0; i < high.coeffs.size(); ++i)
            high.coeffs[i] += low.coeffs[i];
        return high;
    }

    SpectralField recombined(const SpectralField& u, cplx high_phase) const {
        SpectralField w = u;
        for (size_t i = 0; i < w.coeffs.size(); ++i) {
            int k = grid_.wavenumber(static_cast<int>(i));
            if (std::abs(k) > spec_.cutoff) w.coeffs[i] *= high_phase;
        }
        return w;
    }

    SpectralField step_v2(const SpectralField& u) const {
        SpectralField w = recombined(u, mass_phase_v2_);
        apply(w, half_);
        w = modified_flow(w, flow_params());
        apply(w, half_);
        return w;
    }

    SpectralField step_power(const SpectralField& u) const {
        // mu_n = mean(|u|^{2p}) as a field, i.e. Pi_0 of the pointwise power
        std::vector<cplx> s = to_physical(u);
        for (cplx& z : s)
            z = cplx{std::pow(std::norm(z), spec_.power), 0.0};
        const double mu = mean(to_spectral(s)).real();
        const cplx high_phase =
            std::polar(1.0, -2.0 * std::numbers::pi * spec_.lambda *
                                spec_.power * spec_.tau * mu);
        SpectralField w = recombined(u, high_phase);
        apply(w, half_);
        w = power_flow(w, flow_params());
        apply(w, half_);
        return w;
    }

    SchemeSpec spec_;
    GridSpec grid_;
    std::vector<cplx> half_, full_;
    cplx mass_phase_v1_{1.0, 0.0};
    cplx mass_phase_v2_{1.0, 0.0};
};

}  // namespace

SpectralField step(const SpectralField& u, const SchemeSpec& spec) {
    return OneStep(spec, u.grid)(u);
}

SpectralField evolve(const SpectralField& u0, const SchemeSpec& spec,
                     long steps, const StepObserver& observer) {
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    OneStep one(spec, u0.grid);
    SpectralField u = u0;
    for (long n = 0; n < steps; ++n) {
        u = one(u);
        if (!all_finite(u))
            throw numerical_abort(
                "non-finite state after step " + std::to_string(n + 1) +
                    " of scheme " + scheme_name(spec.kind),
                n + 1);
        if (observer) observer(n + 1, static_cast<double>(n + 1) * spec.tau, u);
    }
    return u;
}

}  // namespace nls
