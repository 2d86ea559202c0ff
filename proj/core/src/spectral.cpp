#include "lshull/spectral.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace lshull {

namespace {

// FFTW plan creation is not thread-safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwBuffer {
    void* p = nullptr;
    explicit FftwBuffer(std::size_t bytes) : p(fftw_malloc(bytes)) {}
    ~FftwBuffer() { fftw_free(p); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
};

} // namespace

struct SpectralPlan::Impl {
    int M = 0, N = 0;
    double rho0 = 0.0, rho2 = 0.0;
    std::vector<double> symbol; // size N * (M/2 + 1), r2c layout
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    ScalarField solve(const ScalarField& g, int power) const;

    ~Impl() {
        std::lock_guard lock(planner_mutex());
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }
};

SpectralPlan::SpectralPlan(int width, int height, double rho0, double rho2)
    : impl_(std::make_unique<Impl>()) {
    if (width < 2 || height < 2)
        throw std::invalid_argument("SpectralPlan: grid must be at least 2x2");
    if (rho0 <= 0.0 || rho2 <= 0.0)
        throw std::invalid_argument("SpectralPlan: rho0 and rho2 must be positive");

    impl_->M = width;
    impl_->N = height;
    impl_->rho0 = rho0;
    impl_->rho2 = rho2;

    const int M = width, N = height;
    const int mh = M / 2 + 1;
    impl_->symbol.resize(static_cast<std::size_t>(N) * mh);
    const double sr0 = std::sqrt(rho0), sr2 = std::sqrt(rho2);
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < mh; ++i) {
            const double ci = std::cos(2.0 * std::numbers::pi * i / M);
            const double cj = std::cos(2.0 * std::numbers::pi * j / N);
            impl_->symbol[static_cast<std::size_t>(j) * mh + i] =
                2.0 * sr2 * (ci + cj - 2.0) - sr0;
        }

    // Template buffers only for planning; solves use new-array execution
    // on their own fftw_malloc'd scratch.
    FftwBuffer rbuf(sizeof(double) * M * N);
    FftwBuffer cbuf(sizeof(fftw_complex) * mh * N);
    std::lock_guard lock(planner_mutex());
    // data is stored m-fastest, so FFTW's row-major dims are (N, M)
    impl_->fwd = fftw_plan_dft_r2c_2d(N, M, static_cast<double*>(rbuf.p),
                                      static_cast<fftw_complex*>(cbuf.p),
                                      FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_dft_c2r_2d(N, M, static_cast<fftw_complex*>(cbuf.p),
                                      static_cast<double*>(rbuf.p),
                                      FFTW_ESTIMATE);
}

SpectralPlan::~SpectralPlan() = default;
SpectralPlan::SpectralPlan(SpectralPlan&&) noexcept = default;
SpectralPlan& SpectralPlan::operator=(SpectralPlan&&) noexcept = default;

int SpectralPlan::width() const { return impl_->M; }
int SpectralPlan::height() const { return impl_->N; }
double SpectralPlan::rho0() const { return impl_->rho0; }
double SpectralPlan::rho2() const { return impl_->rho2; }

double SpectralPlan::symbol(int i, int j) const {
    const double ci = std::cos(2.0 * std::numbers::pi * i / impl_->M);
    const double cj = std::cos(2.0 * std::numbers::pi * j / impl_->N);
    return 2.0 * std::sqrt(impl_->rho2) * (ci + cj - 2.0) -
           std::sqrt(impl_->rho0);
}

ScalarField SpectralPlan::Impl::solve(const ScalarField& g, int power) const {
    const Impl& impl = *this;
    const int M = impl.M, N = impl.N;
    if (g.width() != M || g.height() != N)
        throw std::invalid_argument("solve: dimensions do not match plan");

    const int mh = M / 2 + 1;
    FftwBuffer rbuf(sizeof(double) * M * N);
    FftwBuffer cbuf(sizeof(fftw_complex) * mh * N);
    auto* real = static_cast<double*>(rbuf.p);
    auto* freq = static_cast<fftw_complex*>(cbuf.p);

    auto src = g.data();
    for (std::size_t k = 0; k < src.size(); ++k) real[k] = src[k];

    fftw_execute_dft_r2c(impl.fwd, real, freq);

    const double scale = 1.0 / (static_cast<double>(M) * N);
    for (std::size_t k = 0; k < impl.symbol.size(); ++k) {
        const double c = power == 1 ? impl.symbol[k]
                                    : impl.symbol[k] * impl.symbol[k];
        freq[k][0] *= scale / c;
        freq[k][1] *= scale / c;
    }

    fftw_execute_dft_c2r(impl.bwd, freq, real);

    ScalarField out(M, N);
    auto dst = out.data();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = real[k];
    return out;
}

ScalarField SpectralPlan::solve_helmholtz(const ScalarField& g) const {
    return impl_->solve(g, 1);
}

ScalarField SpectralPlan::solve_biharmonic_split(const ScalarField& g) const {
    return impl_->solve(g, 2);
}

} // namespace lshull
