#pragma once

// Periodic M x N grid containers and the discrete differential operators
// used throughout the solver. All indices are 0-based; the grid wraps in
// both axes. Storage is dense row-major with the first index (m) fastest:
// value(m, n) lives at data()[n * width + m].

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lshull {

class ScalarField {
public:
    ScalarField() = default;
    ScalarField(int width, int height, double fill = 0.0);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return values_.size(); }

    double& operator()(int m, int n) { return values_[idx(m, n)]; }
    double operator()(int m, int n) const { return values_[idx(m, n)]; }

    // Periodic accessor: any integer index is wrapped into range.
    double wrapped(int m, int n) const;

    std::span<double> data() { return values_; }
    std::span<const double> data() const { return values_; }

    bool same_shape(const ScalarField& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }
    bool all_finite() const;

    friend bool operator==(const ScalarField&, const ScalarField&) = default;

private:
    std::size_t idx(int m, int n) const {
        return static_cast<std::size_t>(n) * width_ + m;
    }
    int width_ = 0;
    int height_ = 0;
    std::vector<double> values_;
};

struct VectorField {
    ScalarField x; // forward difference along the first (m) axis
    ScalarField y; // forward difference along the second (n) axis

    VectorField() = default;
    VectorField(int width, int height, double fill = 0.0)
        : x(width, height, fill), y(width, height, fill) {}

    int width() const { return x.width(); }
    int height() const { return x.height(); }

    friend bool operator==(const VectorField&, const VectorField&) = default;
};

class BinaryMask {
public:
    BinaryMask() = default;
    BinaryMask(int width, int height, bool fill = false);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return values_.size(); }

    std::uint8_t& operator()(int m, int n) { return values_[idx(m, n)]; }
    std::uint8_t operator()(int m, int n) const { return values_[idx(m, n)]; }

    std::span<std::uint8_t> data() { return values_; }
    std::span<const std::uint8_t> data() const { return values_; }

    std::size_t count() const; // number of foreground pixels

    bool same_shape(const BinaryMask& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    BinaryMask complement() const;

    friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

private:
    std::size_t idx(int m, int n) const {
        return static_cast<std::size_t>(n) * width_ + m;
    }
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> values_;
};

// Forward-difference gradient with periodic wrap:
//   out.x(m,n) = f(m+1,n) - f(m,n),  out.y(m,n) = f(m,n+1) - f(m,n).
VectorField grad_forward(const ScalarField& f);

// Five-point Laplacian with periodic wrap.
ScalarField laplacian_central(const ScalarField& f);

// Backward-difference divergence, the negative adjoint of grad_forward:
//   <grad_forward(f), q> = -<f, div_backward(q)> holds exactly.
ScalarField div_backward(const VectorField& q);

// Plain sums of pointwise products; throws on dimension mismatch.
double inner_product(const ScalarField& a, const ScalarField& b);
double inner_product(const VectorField& a, const VectorField& b);

// Smoothed Heaviside H_delta(s) = 1/2 + atan(s/delta)/pi and its
// derivative delta/(pi (s^2 + delta^2)). Throws if delta <= 0.
double heaviside_smooth(double s, double delta);
double delta_smooth(double s, double delta);

} // namespace lshull
