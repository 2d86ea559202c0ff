#pragma once

// Periodic FFT solver for (sqrt(rho2) Lap - sqrt(rho0)) u = g and for the
// fourth-order operator (-rho1 Lap + rho2 Lap^2 + rho0) with
// rho1 = 2 sqrt(rho0 rho2), which factors into two such solves.
//
// The symbol uses the exact eigenvalues of the five-point Laplacian,
//   c(i,j) = 2 sqrt(rho2) (cos(2 pi i / M) + cos(2 pi j / N) - 2) - sqrt(rho0),
// so each solve is the exact inverse of the stencil operator. c(i,j) < 0
// everywhere, hence the solve is always well-posed.

#include <memory>

#include "lshull/field.hpp"

namespace lshull {

class SpectralPlan {
public:
    // Throws unless width, height >= 2 and rho0, rho2 > 0.
    SpectralPlan(int width, int height, double rho0, double rho2);
    ~SpectralPlan();

    SpectralPlan(SpectralPlan&&) noexcept;
    SpectralPlan& operator=(SpectralPlan&&) noexcept;
    SpectralPlan(const SpectralPlan&) = delete;
    SpectralPlan& operator=(const SpectralPlan&) = delete;

    int width() const;
    int height() const;
    double rho0() const;
    double rho2() const;

    // Symbol value at frequency (i, j), 0-based.
    double symbol(int i, int j) const;

    // Solve (sqrt(rho2) Lap - sqrt(rho0)) u = g.
    ScalarField solve_helmholtz(const ScalarField& g) const;

    // Solve (-rho1 Lap + rho2 Lap^2 + rho0) phi = g, i.e. two chained
    // Helmholtz solves (division by c(i,j)^2 in spectral space).
    ScalarField solve_biharmonic_split(const ScalarField& g) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace lshull
