#include "lshull/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lshull/hull.hpp"
#include "lshull/io.hpp"
#include "lshull/metrics.hpp"

namespace lshull {

std::string serialize_config(const SolverConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "rho0=" << cfg.rho0 << ";rho2=" << cfg.rho2 << ";rho3=" << cfg.rho3
        << ";omega=" << cfg.omega << ";mu=" << cfg.mu << ";nu=" << cfg.nu
        << ";lambda=" << cfg.lambda << ";c=" << cfg.c << ";delta=" << cfg.delta
        << ";eps_div=" << cfg.eps_div << ";max_iter=" << cfg.max_iter
        << ";tol=" << cfg.tol;
    return out.str();
}

BinaryMask pad_mask(const BinaryMask& mask, int pad) {
    if (pad <= 0) return mask;
    BinaryMask out(mask.width() + 2 * pad, mask.height() + 2 * pad);
    for (int n = 0; n < mask.height(); ++n)
        for (int m = 0; m < mask.width(); ++m)
            out(m + pad, n + pad) = mask(m, n);
    return out;
}

ScalarField crop_field(const ScalarField& f, int pad, int width, int height) {
    if (pad <= 0) return f;
    ScalarField out(width, height);
    for (int n = 0; n < height; ++n)
        for (int m = 0; m < width; ++m)
            out(m, n) = f(m + pad, n + pad);
    return out;
}

BinaryMask crop_mask(const BinaryMask& f, int pad, int width, int height) {
    if (pad <= 0) return f;
    BinaryMask out(width, height);
    for (int n = 0; n < height; ++n)
        for (int m = 0; m < width; ++m)
            out(m, n) = f(m + pad, n + pad);
    return out;
}

namespace {

void write_artifacts(const ExperimentSpec& spec, const ExperimentResult& res) {
    const std::string prefix = spec.out_prefix.string();
    save_mask(res.solve.hull, prefix + "_hull.pgm");
    if (spec.csv_field)
        dump_field_csv(res.solve.phi, prefix + "_phi.csv");
    else
        dump_field(res.solve.phi, prefix + "_phi.lsf1");

    std::ofstream trace(prefix + "_trace.csv");
    trace << "iteration,metric\n";
    trace.precision(17);
    for (std::size_t i = 0; i < res.solve.report.metric_history.size(); ++i)
        trace << i + 1 << ',' << res.solve.report.metric_history[i] << '\n';

    // wall time is deliberately omitted so re-runs are bit-identical
    std::ofstream rec(prefix + "_record.csv");
    rec << "name,driver,init,iterations,status,relative_error,"
           "convexity_defect,containment,config\n";
    rec.precision(17);
    rec << res.record.name << ','
        << (spec.driver == DriverKind::exact ? "exact" : "outlier") << ','
        << (spec.init == InitKind::polygon
                ? "polygon"
                : spec.init == InitKind::percentile ? "percentile" : "sdf")
        << ',' << res.record.iterations << ','
        << (res.record.status == SolveStatus::converged ? "converged"
                                                        : "max_iter")
        << ',' << res.record.relative_error << ','
        << res.record.convexity_defect << ',' << res.record.containment << ','
        << '"' << res.record.config << '"' << '\n';

    if (spec.emit_heatmaps) {
        save_heatmap(res.solve.phi, prefix + "_phi.pgm");
        save_level_bands_csv(res.solve.phi, prefix + "_levels.csv");
    }
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();

    int pad = spec.pad;
    if (pad < 0)
        pad = (foreground_margin(spec.mask) < spec.cfg.c)
                  ? std::max(4, static_cast<int>(std::ceil(spec.cfg.c)) + 4)
                  : 0;

    const BinaryMask work = pad_mask(spec.mask, pad);

    ScalarField phi0;
    LandmarkSet landmarks;
    switch (spec.init) {
    case InitKind::polygon: {
        auto init = init_polygon_exact(work, spec.n_angles);
        phi0 = std::move(init.phi0);
        landmarks = std::move(init.landmarks);
        break;
    }
    case InitKind::percentile:
        phi0 = init_polygon_percentile(work, spec.n_angles, spec.percentile);
        break;
    case InitKind::sdf:
        phi0 = signed_distance(work);
        break;
    }

    SolveResult solve = spec.driver == DriverKind::exact
                            ? run_exact(work, landmarks, spec.cfg, phi0)
                            : run_outlier(work, spec.cfg, phi0);

    solve.phi = crop_field(solve.phi, pad, spec.mask.width(), spec.mask.height());
    solve.hull = crop_mask(solve.hull, pad, spec.mask.width(), spec.mask.height());

    const BinaryMask& reference = spec.clean ? *spec.clean : spec.mask;
    const BinaryMask baseline = hull_mask(reference);

    ExperimentRecord rec;
    rec.name = spec.name;
    rec.config = serialize_config(spec.cfg);
    rec.iterations = solve.report.iterations;
    rec.status = solve.report.status;
    rec.warning = solve.report.warning;
    rec.relative_error = relative_error(baseline, solve.hull);
    rec.convexity_defect = convexity_defect(solve.hull);

    std::size_t fg = 0, inside = 0;
    for (int n = 0; n < spec.mask.height(); ++n)
        for (int m = 0; m < spec.mask.width(); ++m)
            if (spec.mask(m, n)) {
                ++fg;
                if (solve.hull(m, n)) ++inside;
            }
    rec.containment = fg ? static_cast<double>(inside) / fg : 0.0;

    rec.wall_time_s = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0).count();

    ExperimentResult result{std::move(rec), std::move(solve)};
    if (!spec.out_prefix.empty()) write_artifacts(spec, result);
    return result;
}

} // namespace lshull
