#include "nls/spectral.hpp"

#include <cmath>
#include <numbers>

namespace nls {

SpectralField project_low(const SpectralField& f, int cutoff) {
    SpectralField out = f;
    const int m = f.grid.modes;
    for (int i = 0; i < m; ++i) {
        int k = f.grid.wavenumber(i);
        if (std::abs(k) > cutoff) out.coeffs[i] = cplx{0.0, 0.0};
    }
    return out;
}

SpectralField project_high(const SpectralField& f, int cutoff) {
    SpectralField out = f;
    const int m = f.grid.modes;
    for (int i = 0; i < m; ++i) {
        int k = f.grid.wavenumber(i);
        if (std::abs(k) <= cutoff) out.coeffs[i] = cplx{0.0, 0.0};
    }
    return out;
}

cplx dispersion_phase(long long k_squared, double t) {
    if (t == 0.0) return cplx{1.0, 0.0};
    // k^2 <= 2^30 is exact in double; split the product k^2 * t into
    // hi + lo with one fma, then reduce hi + lo mod 2*pi against a
    // two-term representation of 2*pi.
    const double k2 = static_cast<double>(k_squared);
    const double hi = k2 * t;
    const double lo = std::fma(k2, t, -hi);
    constexpr double two_pi_hi = 6.283185307179586232e+00;
    constexpr double two_pi_lo = 2.449293598294706414e-16;
    const double n = std::nearbyint(hi * (1.0 / two_pi_hi));
    double r = std::fma(-n, two_pi_hi, hi);
    r = std::fma(-n, two_pi_lo, r);
    r += lo;
    return std::polar(1.0, r);
}

SpectralField free_flow(const SpectralField& f, double t) {
    if (!std::isfinite(t))
        throw std::invalid_argument("free_flow: non-finite time");
    if (t == 0.0) return f;
    SpectralField out = f;
    const int m = f.grid.modes;
    for (int i = 0; i < m; ++i) {
        long long k = f.grid.wavenumber(i);
        out.coeffs[i] *= dispersion_phase(k * k, t);
    }
    return out;
}

double mass(const SpectralField& f) {
    double sum = 0.0;
    for (const cplx& c : f.coeffs) sum += std::norm(c);
    return sum;
}

double sobolev_norm(const SpectralField& f, SobolevIndex s) {
    double sum = 0.0;
    const int m = f.grid.modes;
    for (int i = 0; i < m; ++i) {
        double k = f.grid.wavenumber(i);
        sum += std::pow(1.0 + k * k, s.s) * std::norm(f.coeffs[i]);
    }
    return std::sqrt(2.0 * std::numbers::pi * sum);
}

double l2_norm(const SpectralField& f) {
    return std::sqrt(2.0 * std::numbers::pi * mass(f));
}

cplx mean(const SpectralField& f) { return f.coeffs[0]; }

}  // namespace nls
