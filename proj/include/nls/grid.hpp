#pragma once

#include <cmath>
#include <numbers>

#include "nls/errors.hpp"

namespace nls {

// Uniform collocation grid on the torus (-pi, pi) with M modes. Coefficients
// are stored in FFT layout: storage index i holds wavenumber i for i < M/2
// and i - M for i >= M/2, so the wavenumber set is {-M/2, ..., M/2 - 1}.
struct GridSpec {
    int modes = 0;

    int wavenumber(int index) const {
        return index < modes / 2 ? index : index - modes;
    }
    int index_of(int k) const { return k >= 0 ? k : k + modes; }

    // x_j = -pi + 2*pi*j/M
    double collocation_point(int j) const {
        return -std::numbers::pi + 2.0 * std::numbers::pi * j / modes;
    }

    bool operator==(const GridSpec&) const = default;
};

inline GridSpec make_grid(int modes) {
    if (modes < 2 || (modes & (modes - 1)) != 0)
        throw invalid_resolution("grid size must be a power of two >= 2, got " +
                                 std::to_string(modes));
    return GridSpec{modes};
}

}  // namespace nls
