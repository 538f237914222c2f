#include "nls/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace nls {
namespace {

// The FFTW planner is not thread safe; plan execution on private buffers is.
std::mutex planner_mutex;

struct PlanSet {
    int n = 0;
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    explicit PlanSet(int n_) : n(n_) {
        std::scoped_lock lock(planner_mutex);
        buf = fftw_alloc_complex(static_cast<size_t>(n));
        // FFTW_ESTIMATE picks the plan from the problem shape alone, so
        // repeated runs execute identical arithmetic.
        fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~PlanSet() {
        std::scoped_lock lock(planner_mutex);
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }
    PlanSet(const PlanSet&) = delete;
    PlanSet& operator=(const PlanSet&) = delete;

    cplx* data() { return reinterpret_cast<cplx*>(buf); }
};

PlanSet& plans_for(int n) {
    thread_local std::map<int, std::unique_ptr<PlanSet>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<PlanSet>(n);
    return *slot;
}

}  // namespace

// With x_j = -pi + 2*pi*j/M the kernel e^{i k x_j} equals (-1)^k times the
// standard DFT kernel; for even M the sign is (-1)^i in storage index i.
std::vector<cplx> to_physical(const SpectralField& f) {
    const int m = f.grid.modes;
    PlanSet& p = plans_for(m);
    cplx* buf = p.data();
    for (int i = 0; i < m; ++i)
        buf[i] = (i & 1) ? -f.coeffs[i] : f.coeffs[i];
    fftw_execute(p.bwd);
    return std::vector<cplx>(buf, buf + m);
}

SpectralField to_spectral(std::span<const cplx> samples) {
    GridSpec grid = make_grid(static_cast<int>(samples.size()));
    const int m = grid.modes;
    PlanSet& p = plans_for(m);
    cplx* buf = p.data();
    for (int i = 0; i < m; ++i) buf[i] = samples[i];
    fftw_execute(p.fwd);
    SpectralField out = make_field(grid);
    const double inv = 1.0 / m;
    for (int i = 0; i < m; ++i)
        out.coeffs[i] = ((i & 1) ? -inv : inv) * buf[i];
    return out;
}

}  // namespace nls
