#include "lshull/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lshull {

ScalarField::ScalarField(int width, int height, double fill)
    : width_(width), height_(height),
      values_(static_cast<std::size_t>(width) * height, fill) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("ScalarField: dimensions must be positive");
}

double ScalarField::wrapped(int m, int n) const {
    m %= width_;
    if (m < 0) m += width_;
    n %= height_;
    if (n < 0) n += height_;
    return values_[idx(m, n)];
}

bool ScalarField::all_finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

BinaryMask::BinaryMask(int width, int height, bool fill)
    : width_(width), height_(height),
      values_(static_cast<std::size_t>(width) * height, fill ? 1 : 0) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("BinaryMask: dimensions must be positive");
}

std::size_t BinaryMask::count() const {
    std::size_t c = 0;
    for (auto v : values_) c += v;
    return c;
}

BinaryMask BinaryMask::complement() const {
    BinaryMask out(width_, height_);
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.values_[i] = values_[i] ? 0 : 1;
    return out;
}

VectorField grad_forward(const ScalarField& f) {
    const int M = f.width(), N = f.height();
    VectorField g(M, N);
    for (int n = 0; n < N; ++n) {
        const int np = (n + 1 == N) ? 0 : n + 1;
        for (int m = 0; m < M; ++m) {
            const int mp = (m + 1 == M) ? 0 : m + 1;
            g.x(m, n) = f(mp, n) - f(m, n);
            g.y(m, n) = f(m, np) - f(m, n);
        }
    }
    return g;
}

ScalarField laplacian_central(const ScalarField& f) {
    const int M = f.width(), N = f.height();
    ScalarField out(M, N);
    for (int n = 0; n < N; ++n) {
        const int np = (n + 1 == N) ? 0 : n + 1;
        const int nm = (n == 0) ? N - 1 : n - 1;
        for (int m = 0; m < M; ++m) {
            const int mp = (m + 1 == M) ? 0 : m + 1;
            const int mm = (m == 0) ? M - 1 : m - 1;
            out(m, n) = f(mp, n) + f(mm, n) + f(m, np) + f(m, nm) - 4.0 * f(m, n);
        }
    }
    return out;
}

ScalarField div_backward(const VectorField& q) {
    const int M = q.width(), N = q.height();
    ScalarField out(M, N);
    for (int n = 0; n < N; ++n) {
        const int nm = (n == 0) ? N - 1 : n - 1;
        for (int m = 0; m < M; ++m) {
            const int mm = (m == 0) ? M - 1 : m - 1;
            out(m, n) = q.x(m, n) - q.x(mm, n) + q.y(m, n) - q.y(m, nm);
        }
    }
    return out;
}

double inner_product(const ScalarField& a, const ScalarField& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("inner_product: dimension mismatch");
    double s = 0.0;
    auto da = a.data(), db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) s += da[i] * db[i];
    return s;
}

double inner_product(const VectorField& a, const VectorField& b) {
    return inner_product(a.x, b.x) + inner_product(a.y, b.y);
}

double heaviside_smooth(double s, double delta) {
    if (delta <= 0.0)
        throw std::invalid_argument("heaviside_smooth: delta must be positive");
    return 0.5 + std::atan(s / delta) / std::numbers::pi;
}

double delta_smooth(double s, double delta) {
    if (delta <= 0.0)
        throw std::invalid_argument("delta_smooth: delta must be positive");
    return delta / (std::numbers::pi * (s * s + delta * delta));
}

} // namespace lshull
