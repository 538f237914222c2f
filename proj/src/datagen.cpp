#include "nls/datagen.hpp"

#include <cmath>
#include <numbers>

#include "nls/spectral.hpp"

namespace nls {
namespace detail {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

cplx complex_normal(std::uint64_t seed, int k) {
    const std::uint64_t kk =
        static_cast<std::uint64_t>(static_cast<std::int64_t>(k));
    const std::uint64_t base = splitmix64(seed ^ splitmix64(kk * kGolden + kGolden));
    const std::uint64_t w1 = splitmix64(base + kGolden);
    const std::uint64_t w2 = splitmix64(base + 2 * kGolden);
    // u1 in (0,1], u2 in [0,1)
    const double u1 = static_cast<double>((w1 >> 11) + 1) * 0x1p-53;
    const double u2 = static_cast<double>(w2 >> 11) * 0x1p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    return cplx{r * std::cos(th), r * std::sin(th)} / std::sqrt(2.0);
}

}  // namespace detail

SpectralField rough_field(const RoughDataSpec& spec) {
    if (!(spec.gamma >= 0.0))
        throw std::invalid_argument("rough_field: gamma must be >= 0");
    SpectralField f = make_field(make_grid(spec.modes));
    const int band = spec.modes / 4;
    const double decay = -(spec.gamma + 0.5 + spec.extra_decay);
    for (int k = -band; k <= band; ++k) {
        const double bracket = std::sqrt(1.0 + static_cast<double>(k) * k);
        f.at_mode(k) =
            std::pow(bracket, decay) * detail::complex_normal(spec.seed, k);
    }
    const double norm = sobolev_norm(f, spec.gamma);
    if (!(norm > 0.0))
        throw std::runtime_error("rough_field: degenerate draw, zero norm");
    for (cplx& c : f.coeffs) c /= norm;
    return f;
}

SpectralField plane_wave(cplx amplitude, int mode, int modes) {
    GridSpec grid = make_grid(modes);
    if (mode < -modes / 2 || mode >= modes / 2)
        throw out_of_band("plane wave mode " + std::to_string(mode) +
                          " does not fit M=" + std::to_string(modes));
    SpectralField f = make_field(grid);
    f.at_mode(mode) = amplitude;
    return f;
}

SpectralField plane_wave_solution(cplx amplitude, int mode, int lambda,
                                  double t, int modes) {
    const double m2 = static_cast<double>(mode) * mode;
    const double omega = m2 - lambda * std::norm(amplitude);
    return plane_wave(amplitude * std::polar(1.0, omega * t), mode, modes);
}

SpectralField smooth_field(int modes) {
    SpectralField f = make_field(make_grid(modes));
    const int band = modes / 4;
    for (int k = -band; k <= band; ++k) {
        const double bracket = 1.0 + static_cast<double>(k) * k;
        const double sign = (std::abs(k) % 2 == 0) ? 1.0 : -1.0;
        f.at_mode(k) = sign * std::pow(bracket, -3.0);
    }
    const double norm = sobolev_norm(f, 2.0);
    for (cplx& c : f.coeffs) c /= norm;
    return f;
}

}  // namespace nls
