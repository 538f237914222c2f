#pragma once

#include "nls/field.hpp"

namespace nls {

// Parameters of the exact nonlinear sub-flows. lambda = +1 focusing,
// -1 defocusing; cutoff selects the low-pass band of the modulated flows;
// power is the nonlinearity exponent p of |u|^{2p} u.
struct FlowParams {
    int lambda = 1;
    double t = 0.0;
    int cutoff = 0;
    int power = 1;

    void validate() const;
};

// phi |-> e^{-i lambda t |phi|^2} phi, evaluated pointwise on the grid.
SpectralField nonlinear_flow(const SpectralField& phi, const FlowParams& p);

// phi |-> e^{-i lambda t |P_{<=N} phi|^2} phi: the phase is driven by the
// low-pass part but applied to the full field.
SpectralField modified_flow(const SpectralField& phi, const FlowParams& p);

// phi |-> e^{-i lambda t |P_{<=N} phi|^{2p}} phi.
SpectralField power_flow(const SpectralField& phi, const FlowParams& p);

}  // namespace nls
