#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nls/field.hpp"

namespace nls {

// One-step maps for the cubic NLS i u_t = u_xx + lambda |u|^2 u:
//
//   lie              e^{i tau dxx} N_tau
//   strang           e^{i tau/2 dxx} N_tau e^{i tau/2 dxx}
//   filtered_strang  P_N [strang core] P_N, with N = floor(tau^{-1/2})
//   modified_v1      high modes: free flow times the scalar mass phase
//                    e^{-4 pi i lambda M0 tau}; low modes: filtered Strang
//   modified_v2      u <- e^{i tau/2 dxx} Ntw_tau [e^{i tau/2 dxx}
//                    (P_N + e^{-2 pi i lambda M0 tau} P^N) u], where
//                    Ntw_tau(phi) = e^{-i lambda tau |P_N phi|^2} phi
//   modified_power   the |u|^{2p} u variant of modified_v2; the scalar phase
//                    uses mu_n = mean(|u^n|^{2p}), recomputed every step
//
// N_tau is the exact pointwise cubic flow and M0 the mass of the run's
// initial data, frozen for the whole run.
enum class SchemeKind {
    lie,
    strang,
    filtered_strang,
    modified_v1,
    modified_v2,
    modified_power,
};

const char* scheme_name(SchemeKind k);
std::optional<SchemeKind> parse_scheme(const std::string& name);
bool scheme_uses_cutoff(SchemeKind k);

struct SchemeSpec {
    SchemeKind kind = SchemeKind::strang;
    int lambda = 1;
    double tau = 0.0;
    int cutoff = 0;       // N; ignored by lie/strang
    int power = 1;        // p; modified_power only
    double initial_mass = 0.0;  // M0; modified_v1/v2 only

    void validate() const;
};

// Filter width for the modified schemes: N = max(1, floor(tau^{-e})) with
// e = 2/(4+gamma) for gamma in (0,1) and e = 2/5 for gamma in [1,2].
// Throws unsupported_regularity outside (0,2] and infeasible_step if the
// resulting tau*N exceeds 1.
int choose_cutoff(double gamma, double tau);

// Filter width of the filtered Strang baseline, floor(tau^{-1/2}).
int filtered_cutoff(double tau);

// Supremum of the proven L^2 convergence rate: 4*gamma/(4+gamma) on (0,1),
// 2*(1+gamma)/5 on [1,2].
double theoretical_rate(double gamma);

// One step of the selected scheme.
SpectralField step(const SpectralField& u, const SchemeSpec& spec);

// Called after each completed step with (step index, t_n, state).
using StepObserver =
    std::function<void(long step, double t, const SpectralField& u)>;

// Iterates the one-step map; throws numerical_abort with the step index if a
// non-finite coefficient appears.
SpectralField evolve(const SpectralField& u0, const SchemeSpec& spec,
                     long steps, const StepObserver& observer = {});

}  // namespace nls
