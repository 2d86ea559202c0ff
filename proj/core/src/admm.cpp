#include "lshull/admm.hpp"

#include <cmath>
#include <stdexcept>

namespace lshull {

double SolverConfig::rho1() const { return 2.0 * std::sqrt(rho0 * rho2); }

SolverConfig SolverConfig::exact_defaults() { return SolverConfig{}; }

SolverConfig SolverConfig::outlier_defaults() {
    SolverConfig cfg;
    cfg.rho2 = 20.0;
    cfg.omega = 0.005;
    cfg.mu = 3.0;
    cfg.nu = 20.0;
    cfg.lambda = 3.0;
    return cfg;
}

void SolverConfig::validate() const {
    if (rho0 <= 0.0 || rho2 <= 0.0 || rho3 <= 0.0)
        throw std::invalid_argument("SolverConfig: penalties must be positive");
    if (omega < 0.0 || mu < 0.0 || nu < 0.0 || lambda < 0.0)
        throw std::invalid_argument("SolverConfig: weights must be nonnegative");
    if (c < 0.0) throw std::invalid_argument("SolverConfig: c must be >= 0");
    if (delta <= 0.0) throw std::invalid_argument("SolverConfig: delta must be > 0");
    if (eps_div <= 0.0) throw std::invalid_argument("SolverConfig: eps_div must be > 0");
    if (tol <= 0.0) throw std::invalid_argument("SolverConfig: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
}

VectorField update_z1(const AdmmState& state, const SolverConfig& cfg) {
    const VectorField g = grad_forward(state.phi);
    const double rho1 = cfg.rho1();
    VectorField z1 = state.z1; // degenerate sites keep their previous value
    for (int n = 0; n < g.height(); ++n)
        for (int m = 0; m < g.width(); ++m) {
            const double vx = state.gamma1.x(m, n) / rho1 + g.x(m, n);
            const double vy = state.gamma1.y(m, n) / rho1 + g.y(m, n);
            const double norm = std::hypot(vx, vy);
            if (norm >= cfg.eps_div) {
                z1.x(m, n) = vx / norm;
                z1.y(m, n) = vy / norm;
            }
        }
    return z1;
}

ScalarField update_z2(const AdmmState& state, const SolverConfig& cfg) {
    const ScalarField lap = laplacian_central(state.phi);
    ScalarField z2(lap.width(), lap.height());
    for (int n = 0; n < lap.height(); ++n)
        for (int m = 0; m < lap.width(); ++m) {
            const double w = state.gamma2(m, n) / cfg.rho2 + lap(m, n);
            z2(m, n) = (state.phi_prev(m, n) <= cfg.c) ? std::max(0.0, w) : w;
        }
    return z2;
}

ScalarField update_z3(const AdmmState& state, const SolverConfig& cfg) {
    ScalarField z3(state.phi.width(), state.phi.height());
    for (int n = 0; n < z3.height(); ++n)
        for (int m = 0; m < z3.width(); ++m) {
            const double v = state.m(m, n) * state.phi(m, n) +
                             state.gamma3(m, n) / cfg.rho3;
            z3(m, n) = std::min(0.0, v);
        }
    return z3;
}

ScalarField f1_gradient(const ScalarField& phi, const SolverConfig& cfg,
                        const BinaryMask& l) {
    const VectorField g = grad_forward(phi);
    VectorField q(g.width(), g.height());
    for (int n = 0; n < g.height(); ++n)
        for (int m = 0; m < g.width(); ++m) {
            const double norm = std::hypot(g.x(m, n), g.y(m, n)) + cfg.eps_div;
            q.x(m, n) = g.x(m, n) / norm;
            q.y(m, n) = g.y(m, n) / norm;
        }
    const ScalarField curvature = div_backward(q);

    ScalarField out(phi.width(), phi.height());
    for (int n = 0; n < phi.height(); ++n)
        for (int m = 0; m < phi.width(); ++m)
            out(m, n) = -cfg.omega -
                        cfg.mu * delta_smooth(phi(m, n), cfg.delta) * curvature(m, n) +
                        2.0 * cfg.nu * l(m, n) * phi(m, n);
    return out;
}

ScalarField f2_gradient(const ScalarField& phi, const SolverConfig& cfg,
                        const BinaryMask& m_mask, const BinaryMask& l) {
    ScalarField out = f1_gradient(phi, cfg, l);
    // subgradient of lambda (m phi)^+, zero at the kink
    for (int n = 0; n < phi.height(); ++n)
        for (int m = 0; m < phi.width(); ++m)
            if (m_mask(m, n) && phi(m, n) > 0.0) out(m, n) += cfg.lambda;
    return out;
}

namespace {

// Common part of both right-hand sides:
// -Lap(gamma2 - rho2 z2) + div(gamma1 - rho1 z1) - grad_F + rho0 phi.
ScalarField rhs_common(const AdmmState& state, const SolverConfig& cfg,
                       const ScalarField& grad_f) {
    const double rho1 = cfg.rho1();
    const int M = state.phi.width(), N = state.phi.height();

    ScalarField a2(M, N);
    VectorField a1(M, N);
    for (int n = 0; n < N; ++n)
        for (int m = 0; m < M; ++m) {
            a2(m, n) = state.gamma2(m, n) - cfg.rho2 * state.z2(m, n);
            a1.x(m, n) = state.gamma1.x(m, n) - rho1 * state.z1.x(m, n);
            a1.y(m, n) = state.gamma1.y(m, n) - rho1 * state.z1.y(m, n);
        }
    const ScalarField lap_a2 = laplacian_central(a2);
    const ScalarField div_a1 = div_backward(a1);

    ScalarField g(M, N);
    for (int n = 0; n < N; ++n)
        for (int m = 0; m < M; ++m)
            g(m, n) = -lap_a2(m, n) + div_a1(m, n) - grad_f(m, n) +
                      cfg.rho0 * state.phi(m, n);
    return g;
}

} // namespace

ScalarField rhs_exact(const AdmmState& state, const SolverConfig& cfg) {
    ScalarField g = rhs_common(state, cfg, f1_gradient(state.phi, cfg, state.l));
    for (int n = 0; n < g.height(); ++n)
        for (int m = 0; m < g.width(); ++m)
            if (state.m(m, n))
                g(m, n) -= state.gamma3(m, n) +
                           cfg.rho3 * (state.phi(m, n) - state.z3(m, n));
    return g;
}

ScalarField rhs_outlier(const AdmmState& state, const SolverConfig& cfg) {
    return rhs_common(state, cfg,
                      f2_gradient(state.phi, cfg, state.m, state.l));
}

ScalarField update_phi(const AdmmState&, const SolverConfig&,
                       const SpectralPlan& plan, const ScalarField& rhs) {
    return plan.solve_biharmonic_split(rhs);
}

void update_multipliers(AdmmState& state, const SolverConfig& cfg,
                        bool with_z3) {
    const VectorField g = grad_forward(state.phi);
    const ScalarField lap = laplacian_central(state.phi);
    const double rho1 = cfg.rho1();
    for (int n = 0; n < g.height(); ++n)
        for (int m = 0; m < g.width(); ++m) {
            state.gamma1.x(m, n) += rho1 * (g.x(m, n) - state.z1.x(m, n));
            state.gamma1.y(m, n) += rho1 * (g.y(m, n) - state.z1.y(m, n));
            state.gamma2(m, n) += cfg.rho2 * (lap(m, n) - state.z2(m, n));
            if (with_z3)
                state.gamma3(m, n) +=
                    cfg.rho3 * (state.m(m, n) * state.phi(m, n) - state.z3(m, n));
        }
}

double convergence_metric(const ScalarField& phi_new,
                          const ScalarField& phi_old) {
    if (!phi_new.same_shape(phi_old))
        throw std::invalid_argument("convergence_metric: dimension mismatch");
    double s = 0.0;
    auto a = phi_new.data(), b = phi_old.data();
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s / static_cast<double>(a.size());
}

double energy_exact(const ScalarField& phi, const SolverConfig& cfg,
                    const BinaryMask& l) {
    ScalarField h(phi.width(), phi.height());
    for (int n = 0; n < phi.height(); ++n)
        for (int m = 0; m < phi.width(); ++m)
            h(m, n) = heaviside_smooth(phi(m, n), cfg.delta);
    const VectorField gh = grad_forward(h);

    double e = 0.0;
    for (int n = 0; n < phi.height(); ++n)
        for (int m = 0; m < phi.width(); ++m)
            e += -cfg.omega * phi(m, n) +
                 cfg.mu * std::hypot(gh.x(m, n), gh.y(m, n)) +
                 cfg.nu * l(m, n) * phi(m, n) * phi(m, n);
    return e;
}

double energy_outlier(const ScalarField& phi, const SolverConfig& cfg,
                      const BinaryMask& m_mask, const BinaryMask& l) {
    double e = energy_exact(phi, cfg, l);
    for (int n = 0; n < phi.height(); ++n)
        for (int m = 0; m < phi.width(); ++m)
            if (m_mask(m, n))
                e += cfg.lambda * std::max(0.0, phi(m, n));
    return e;
}

double foreground_margin(const BinaryMask& mask) {
    double margin = std::max(mask.width(), mask.height());
    for (int n = 0; n < mask.height(); ++n)
        for (int m = 0; m < mask.width(); ++m) {
            if (!mask(m, n)) continue;
            const double d = std::min({m, mask.width() - 1 - m,
                                       n, mask.height() - 1 - n});
            margin = std::min(margin, d);
        }
    return margin;
}

namespace {

// Cap on the post-loop constraint-settling sweeps; they normally stop
// earlier on the main convergence tolerance.
constexpr int kPolishIters = 400;

SolveResult run_driver(const BinaryMask& mask, const LandmarkSet& landmarks,
                       const SolverConfig& cfg, const ScalarField& phi0,
                       bool exact) {
    cfg.validate();
    if (mask.count() == 0)
        throw std::invalid_argument("run: empty mask");
    if (!phi0.same_shape(ScalarField(mask.width(), mask.height())))
        throw std::invalid_argument("run: phi0 dimensions do not match mask");

    const int M = mask.width(), N = mask.height();

    AdmmState st;
    st.phi = phi0;
    st.phi_prev = ScalarField(M, N, 0.0);
    st.z1 = VectorField(M, N);
    for (double& v : st.z1.x.data()) v = 1.0; // degenerate-site fallback
    st.gamma1 = VectorField(M, N);
    st.z2 = ScalarField(M, N);
    st.z3 = ScalarField(M, N);
    st.gamma2 = ScalarField(M, N);
    st.gamma3 = ScalarField(M, N);
    st.m = mask;
    st.l = exact ? landmarks.indicator(M, N) : BinaryMask(M, N);

    SolveReport report;
    if (exact && cfg.c > foreground_margin(mask))
        report.warning = "c exceeds the foreground margin; the solve may not converge";

    const SpectralPlan plan(M, N, cfg.rho0, cfg.rho2);

    double metric = 0.0;
    while (st.iter < cfg.max_iter) {
        st.phi_prev = st.phi;
        st.z1 = update_z1(st, cfg);
        st.z2 = update_z2(st, cfg);
        if (exact) st.z3 = update_z3(st, cfg);

        const ScalarField g = exact ? rhs_exact(st, cfg) : rhs_outlier(st, cfg);
        st.phi = update_phi(st, cfg, plan, g);
        update_multipliers(st, cfg, exact);

        metric = convergence_metric(st.phi, st.phi_prev);
        report.metric_history.push_back(metric);
        ++st.iter;

        if (!std::isfinite(metric))
            throw std::runtime_error(
                "run: non-finite field at iteration " + std::to_string(st.iter));
        if (metric <= cfg.tol) break;
    }

    report.iterations = st.iter;
    report.final_metric = metric;
    report.status = metric <= cfg.tol ? SolveStatus::converged
                                      : SolveStatus::max_iter;

    // Polishing phase (exact driver only): the unit-norm split can sustain
    // a small bounded oscillation at flat spots of phi, which leaves the
    // active constraints fluttering around zero. Freezing the direction
    // field (z1, gamma1) makes the remaining splitting convex; a short run
    // of it settles the containment and convexity constraints without
    // moving the hull beyond the oscillation amplitude. The outlier driver
    // has no hard constraints to settle, so it returns the plain iterate.
    for (int k = 0; exact && k < kPolishIters; ++k) {
        st.phi_prev = st.phi;
        st.z2 = update_z2(st, cfg);
        if (exact) st.z3 = update_z3(st, cfg);
        const ScalarField g = exact ? rhs_exact(st, cfg) : rhs_outlier(st, cfg);
        st.phi = update_phi(st, cfg, plan, g);
        const ScalarField lap = laplacian_central(st.phi);
        for (int n = 0; n < N; ++n)
            for (int m = 0; m < M; ++m) {
                st.gamma2(m, n) += cfg.rho2 * (lap(m, n) - st.z2(m, n));
                if (exact)
                    st.gamma3(m, n) +=
                        cfg.rho3 * (st.m(m, n) * st.phi(m, n) - st.z3(m, n));
            }
        if (convergence_metric(st.phi, st.phi_prev) <= cfg.tol) break;
    }
    if (exact) {
        // Restore feasibility of the containment constraint: the active
        // pixels converge to zero from the positive side, so shift the
        // whole field down by the residual violation (a constant offset,
        // invisible to the gradient and Laplacian constraints).
        double shift = 0.0;
        for (int n = 0; n < N; ++n)
            for (int m = 0; m < M; ++m)
                if (st.m(m, n)) shift = std::max(shift, st.phi(m, n));
        for (double& v : st.phi.data()) v -= shift;
    }
    report.final_energy = exact
        ? energy_exact(st.phi, cfg, st.l)
        : energy_outlier(st.phi, cfg, st.m, st.l);

    SolveResult result;
    result.hull = BinaryMask(M, N);
    for (int n = 0; n < N; ++n)
        for (int m = 0; m < M; ++m)
            result.hull(m, n) = st.phi(m, n) <= 0.0 ? 1 : 0;
    result.phi = std::move(st.phi);
    result.report = std::move(report);
    return result;
}

} // namespace

SolveResult run_exact(const BinaryMask& mask, const LandmarkSet& landmarks,
                      const SolverConfig& cfg, const ScalarField& phi0) {
    return run_driver(mask, landmarks, cfg, phi0, true);
}

SolveResult run_outlier(const BinaryMask& mask, const SolverConfig& cfg,
                        const ScalarField& phi0) {
    return run_driver(mask, LandmarkSet{}, cfg, phi0, false);
}

} // namespace lshull
