#pragma once

#include <complex>
#include <vector>

#include "nls/grid.hpp"

namespace nls {

using cplx = std::complex<double>;

// Fourier coefficients of a periodic field on the torus, FFT storage layout
// (see GridSpec).
struct SpectralField {
    GridSpec grid;
    std::vector<cplx> coeffs;

    cplx& at_mode(int k) { return coeffs[grid.index_of(k)]; }
    const cplx& at_mode(int k) const { return coeffs[grid.index_of(k)]; }
};

inline SpectralField make_field(GridSpec grid) {
    return SpectralField{grid, std::vector<cplx>(grid.modes, cplx{0.0, 0.0})};
}

inline bool all_finite(const SpectralField& f) {
    for (const cplx& c : f.coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

inline void require_same_grid(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid == b.grid))
        throw grid_mismatch("fields live on different grids: M=" +
                            std::to_string(a.grid.modes) + " vs M=" +
                            std::to_string(b.grid.modes));
}

}  // namespace nls
