#pragma once

#include <cstdint>

#include "nls/field.hpp"

namespace nls {

// Random initial data saturating a prescribed Sobolev class H^gamma:
// u_k = <k>^{-gamma - 1/2 - extra_decay} zeta_k for |k| <= M/4 (zero beyond),
// then rescaled to sobolev_norm(u, gamma) = 1. The zeta_k are standard
// complex normals drawn from a counter-based generator keyed on (seed, k),
// so coefficient k is independent of M and of evaluation order, and a seed
// reproduces the field bit for bit.
struct RoughDataSpec {
    double gamma = 1.0;
    std::uint64_t seed = 0;
    int modes = 0;
    double extra_decay = 0.01;
};

SpectralField rough_field(const RoughDataSpec& spec);

// Single Fourier mode: u_m = amplitude, all else zero.
SpectralField plane_wave(cplx amplitude, int mode, int modes);

// The exact solution launched from plane_wave(A, m):
// u(t) = A e^{imx} e^{i (m^2 - lambda |A|^2) t}.
SpectralField plane_wave_solution(cplx amplitude, int mode, int lambda,
                                  double t, int modes);

// Deterministic C^infinity profile: u_k = (-1)^k <k>^{-6} for |k| <= M/4,
// rescaled to unit H^2 norm. Used for smooth-data order checks.
SpectralField smooth_field(int modes);

namespace detail {

// splitmix64 finalizer; the counter-based generator below is
//   base = mix(seed ^ mix(u64(k) * GOLDEN + GOLDEN))
//   w1 = mix(base + GOLDEN), w2 = mix(base + 2*GOLDEN)
// with GOLDEN = 0x9e3779b97f4a7c15. Box-Muller on (w1, w2) yields the two
// standard normals of zeta_k = (a + i b)/sqrt(2).
std::uint64_t splitmix64(std::uint64_t x);
cplx complex_normal(std::uint64_t seed, int k);

}  // namespace detail

}  // namespace nls
