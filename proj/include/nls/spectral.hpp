#pragma once

#include "nls/field.hpp"

namespace nls {

// Regularity exponent for Sobolev norms.
struct SobolevIndex {
    double s = 0.0;
};

// Keep modes |k| <= cutoff, zero the rest.
SpectralField project_low(const SpectralField& f, int cutoff);

// Complement projection; project_low + project_high is the identity, exactly.
SpectralField project_high(const SpectralField& f, int cutoff);

// Exact flow of the linear part i u_t = u_xx: multiplies mode k by
// e^{+i k^2 t}. The phase k^2*t is formed in double-double arithmetic and
// reduced mod 2*pi, so composed flows agree with the single flow of the
// summed time even at large M.
SpectralField free_flow(const SpectralField& f, double t);

// e^{i k^2 t} for integer k^2, with the careful reduction described above.
cplx dispersion_phase(long long k_squared, double t);

// sum_k |u_k|^2  (equals (1/2pi) \int |u|^2 dx by Plancherel).
double mass(const SpectralField& f);

// sqrt(2 pi sum_k (1+k^2)^s |u_k|^2).
double sobolev_norm(const SpectralField& f, SobolevIndex s);
inline double sobolev_norm(const SpectralField& f, double s) {
    return sobolev_norm(f, SobolevIndex{s});
}

// sqrt(2 pi * mass), the L^2 norm in the paper's normalization.
double l2_norm(const SpectralField& f);

// The zeroth Fourier coefficient, i.e. (1/2pi) \int f dx.
cplx mean(const SpectralField& f);

}  // namespace nls
