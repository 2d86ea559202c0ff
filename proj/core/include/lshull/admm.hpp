#pragma once

// ADMM drivers for the two level-set convex hull models.
//
// Exact model: minimize sum(-omega phi + mu |grad H_delta(phi)| + nu l phi^2)
// subject to |grad phi| = 1 everywhere, Lap phi >= 0 on {phi <= c}, and
// m phi <= 0 (every input pixel inside the hull). Outlier model: drop the
// hard containment constraint and add lambda (m phi)^+ to the objective.
//
// Splitting: z1 = grad phi, z2 = Lap phi, z3 = m phi with multipliers
// gamma1..gamma3 and penalties rho1..rho3; the phi update is a fourth-order
// PDE solved spectrally with rho1 = 2 sqrt(rho0 rho2).

#include <string>
#include <vector>

#include "lshull/field.hpp"
#include "lshull/sdf.hpp"
#include "lshull/spectral.hpp"

namespace lshull {

struct SolverConfig {
    double rho0 = 1.0;
    double rho2 = 15.0;
    double rho3 = 1.0;
    double omega = 0.01;
    double mu = 5.0;
    double nu = 10.0;
    double lambda = 3.0; // outlier penalty, unused by the exact driver
    double c = 20.0;     // sublevel threshold for the convexity constraint
    double delta = 1.5;  // smoothed-Heaviside width
    double eps_div = 1e-8;
    int max_iter = 5000;
    double tol = 1e-4;

    double rho1() const; // always 2 sqrt(rho0 rho2), never user-set

    static SolverConfig exact_defaults();
    static SolverConfig outlier_defaults();

    void validate() const; // throws on out-of-range values
};

struct AdmmState {
    ScalarField phi, phi_prev;
    VectorField z1, gamma1;
    ScalarField z2, z3, gamma2, gamma3;
    BinaryMask m; // input indicator
    BinaryMask l; // landmark indicator
    int iter = 0;
};

enum class SolveStatus { converged, max_iter };

struct SolveReport {
    int iterations = 0;
    double final_metric = 0.0;
    double final_energy = 0.0;
    std::vector<double> metric_history; // one entry per iteration
    SolveStatus status = SolveStatus::converged;
    std::string warning; // non-fatal diagnostics (e.g. c exceeds margin)
};

struct SolveResult {
    ScalarField phi;
    BinaryMask hull; // {x | phi(x) <= 0}
    SolveReport report;
};

// Pointwise updates (exposed for direct testing; the drivers below call
// them in the order z1, z2, z3, phi, multipliers).
VectorField update_z1(const AdmmState& state, const SolverConfig& cfg);
ScalarField update_z2(const AdmmState& state, const SolverConfig& cfg);
ScalarField update_z3(const AdmmState& state, const SolverConfig& cfg);

// Gradient of the smoothed discrete energy; the boundary-length term uses
// the curvature form -mu H'(phi) div(grad phi / (|grad phi| + eps_div)).
ScalarField f1_gradient(const ScalarField& phi, const SolverConfig& cfg,
                        const BinaryMask& l);
ScalarField f2_gradient(const ScalarField& phi, const SolverConfig& cfg,
                        const BinaryMask& m, const BinaryMask& l);

// Right-hand sides of the fourth-order phi update.
ScalarField rhs_exact(const AdmmState& state, const SolverConfig& cfg);
ScalarField rhs_outlier(const AdmmState& state, const SolverConfig& cfg);

ScalarField update_phi(const AdmmState& state, const SolverConfig& cfg,
                       const SpectralPlan& plan, const ScalarField& rhs);

// gamma1 += rho1 (grad phi - z1); gamma2 += rho2 (Lap phi - z2);
// gamma3 += rho3 (m phi - z3) (exact driver only).
void update_multipliers(AdmmState& state, const SolverConfig& cfg,
                        bool with_z3);

// Mean absolute pointwise difference, the Algorithm stopping metric.
double convergence_metric(const ScalarField& phi_new,
                          const ScalarField& phi_old);

// Monitoring energies (not used as a stopping criterion).
double energy_exact(const ScalarField& phi, const SolverConfig& cfg,
                    const BinaryMask& l);
double energy_outlier(const ScalarField& phi, const SolverConfig& cfg,
                      const BinaryMask& m, const BinaryMask& l);

// Exact driver (Algorithm with the containment constraint). phi0 is the
// initial level-set function; landmarks may be empty.
SolveResult run_exact(const BinaryMask& mask, const LandmarkSet& landmarks,
                      const SolverConfig& cfg, const ScalarField& phi0);

// Outlier driver: no z3/gamma3, f2 gradient, soft containment.
SolveResult run_outlier(const BinaryMask& mask, const SolverConfig& cfg,
                        const ScalarField& phi0);

// Minimum distance (in pixels) from the foreground to the domain edge;
// the convexity threshold c should not exceed this margin.
double foreground_margin(const BinaryMask& mask);

} // namespace lshull
