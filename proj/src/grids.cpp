#include "levyfp/grids.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace levyfp {

Grid1D Grid1D::make(int n_points, double half_width) {
    if (n_points < 256 || (n_points & (n_points - 1)) != 0) {
        throw GridError("Grid1D: n_points must be a power of two >= 256");
    }
    if (!(half_width > 0.0)) {
        throw GridError("Grid1D: half_width must be positive");
    }
    return Grid1D{n_points, half_width};
}

namespace {

// FFTW plans are cached per size; creation is serialized (the planner is not
// thread-safe) while execution uses the new-array interface, which is.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void execute(int n, bool forward, std::complex<double>* in, std::complex<double>* out) {
        fftw_plan plan = get_plan(n, forward);
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in),
                         reinterpret_cast<fftw_complex*>(out));
    }

  private:
    fftw_plan get_plan(int n, bool forward) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, forward);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<std::complex<double>> dummy(n);
        fftw_plan plan = fftw_plan_dft_1d(
            n, reinterpret_cast<fftw_complex*>(dummy.data()),
            reinterpret_cast<fftw_complex*>(dummy.data()),
            forward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
        return plan;
    }

    std::mutex mutex_;
    std::map<std::pair<int, bool>, fftw_plan> plans_;
};

// Twiddle factor attaching the cell-centered sample offset and the frequency
// shift to the raw DFT: \hat f(xi_q) = dx * e^{i pi q (1 - 1/n)} * DFT_q.
std::complex<double> twiddle(int q, int n) {
    const double phase = M_PI * q * (1.0 - 1.0 / n);
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace

SpectralProfile to_spectral(const DensityProfile& f) {
    const int n = f.grid.n_points;
    std::vector<std::complex<double>> in(n), out(n);
    for (int j = 0; j < n; ++j) in[j] = f.values[j];
    PlanCache::instance().execute(n, /*forward=*/true, in.data(), out.data());

    SpectralProfile result;
    result.grid = f.grid;
    result.meta = f.meta;
    result.values.resize(n);
    const double dx = f.grid.dx();
    for (int m = 0; m < n; ++m) {
        const int q = m - n / 2;                       // signed frequency index
        const int src = (q >= 0) ? q : q + n;          // DFT storage order
        result.values[m] = dx * twiddle(q, n) * out[src];
    }
    return result;
}

DensityProfile to_density(const SpectralProfile& fhat) {
    const int n = fhat.grid.n_points;
    std::vector<std::complex<double>> in(n), out(n);
    for (int m = 0; m < n; ++m) {
        const int q = m - n / 2;
        const int dst = (q >= 0) ? q : q + n;
        in[dst] = std::conj(twiddle(q, n)) * fhat.values[m];
    }
    PlanCache::instance().execute(n, /*forward=*/false, in.data(), out.data());

    DensityProfile result;
    result.grid = fhat.grid;
    result.meta = fhat.meta;
    result.values.resize(n);
    const double scale = 1.0 / (n * fhat.grid.dx());
    for (int j = 0; j < n; ++j) result.values[j] = scale * out[j].real();
    return result;
}

SpectralProfile sample_radial_symbol(const Grid1D& grid, const std::function<double(double)>& g,
                                     ProfileMeta meta) {
    SpectralProfile result;
    result.grid = grid;
    result.meta = std::move(meta);
    result.values.resize(grid.n_points);
    for (int m = 0; m < grid.n_points; ++m) {
        result.values[m] = g(std::abs(grid.xi(m)));
    }
    return result;
}

SpectralProfile sample_spectral(const Grid1D& grid,
                                const std::function<std::complex<double>(double)>& g,
                                ProfileMeta meta) {
    SpectralProfile result;
    result.grid = grid;
    result.meta = std::move(meta);
    result.values.resize(grid.n_points);
    for (int m = 0; m < grid.n_points; ++m) {
        result.values[m] = g(grid.xi(m));
    }
    return result;
}

}  // namespace levyfp
