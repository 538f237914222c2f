#pragma once

#include <span>
#include <vector>

#include "nls/field.hpp"

namespace nls {

// samples_j = sum_k u_k e^{i k x_j} on the collocation grid.
std::vector<cplx> to_physical(const SpectralField& f);

// u_k = (1/M) sum_j samples_j e^{-i k x_j}. Length must be a valid grid size.
SpectralField to_spectral(std::span<const cplx> samples);

}  // namespace nls
