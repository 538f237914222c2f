#include "nls/flows.hpp"

#include <cmath>

#include "nls/fft.hpp"
#include "nls/spectral.hpp"

namespace nls {

void FlowParams::validate() const {
    if (lambda != 1 && lambda != -1)
        throw std::invalid_argument("lambda must be +1 or -1");
    if (!std::isfinite(t))
        throw std::invalid_argument("flow time must be finite");
    if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    if (power < 1) throw std::invalid_argument("power must be >= 1");
}

SpectralField nonlinear_flow(const SpectralField& phi, const FlowParams& p) {
    p.validate();
    if (p.t == 0.0) return phi;
    std::vector<cplx> s = to_physical(phi);
    const double a = -static_cast<double>(p.lambda) * p.t;
    for (cplx& z : s) z *= std::polar(1.0, a * std::norm(z));
    return to_spectral(s);
}

SpectralField modified_flow(const SpectralField& phi, const FlowParams& p) {
    p.validate();
    if (p.t == 0.0) return phi;
    std::vector<cplx> low = to_physical(project_low(phi, p.cutoff));
    std::vector<cplx> s = to_physical(phi);
    const double a = -static_cast<double>(p.lambda) * p.t;
    for (size_t j = 0; j < s.size(); ++j)
        s[j] *= std::polar(1.0, a * std::norm(low[j]));
    return to_spectral(s);
}

SpectralField power_flow(const SpectralField& phi, const FlowParams& p) {
    p.validate();
    if (p.t == 0.0) return phi;
    std::vector<cplx> low = to_physical(project_low(phi, p.cutoff));
    std::vector<cplx> s = to_physical(phi);
    const double a = -static_cast<double>(p.lambda) * p.t;
    for (size_t j = 0; j < s.size(); ++j)
        s[j] *= std::polar(1.0, a * std::pow(std::norm(low[j]), p.power));
    return to_spectral(s);
}

}  // namespace nls
