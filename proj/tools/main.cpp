// Command-line front end for the level-set convex hull library.
//
// Subcommands:
//   exact      level-set hull with the hard containment constraint
//   outlier    level-set hull with the soft (penalized) containment term
//   quickhull  classical convex hull of the mask's foreground pixels
//   compare    exact solve plus a side-by-side quickhull baseline
//   noise      inject seeded uniform outlier pixels into a mask
//   metrics    Hausdorff / relative error / convexity stats for two masks
//
// Exit codes: 0 success/converged; 2 iteration cap reached (artifacts are
// still written); 3 input error; 4 numerical abort.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lshull/experiment.hpp"
#include "lshull/hull.hpp"
#include "lshull/io.hpp"
#include "lshull/metrics.hpp"

namespace fs = std::filesystem;
using namespace lshull;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMaxIter = 2;
constexpr int kExitInput = 3;
constexpr int kExitNumerical = 4;

struct CommonOpts {
    std::vector<std::string> inputs;
    std::string config_path;
    std::string out_prefix;
    std::string clean_path; // outlier runs: clean reference mask
    SolverConfig cfg;
    InitKind init = InitKind::polygon;
    int n_angles = 16;
    double percentile = 5.0;
    int pad = -1;
    bool csv_field = false;
    bool heatmaps = false;
    unsigned long long seed = 1;
    int jobs = 1;
};

void add_shared_flags(CLI::App& sub, CommonOpts& o, bool need_input) {
    auto* in = sub.add_option("--in", o.inputs, "Input mask (PGM/PBM); repeatable");
    if (need_input) in->required();
    sub.add_option("--out-prefix", o.out_prefix,
                   "Artifact path prefix (default: input stem)");
    sub.add_option("--rho0", o.cfg.rho0, "Eikonal penalty weight");
    sub.add_option("--rho2", o.cfg.rho2, "Convexity penalty weight");
    sub.add_option("--rho3", o.cfg.rho3, "Containment penalty weight");
    sub.add_option("--omega", o.cfg.omega, "Area growth weight");
    sub.add_option("--mu", o.cfg.mu, "Boundary length weight");
    sub.add_option("--nu", o.cfg.nu, "Landmark anchoring weight");
    sub.add_option("--lambda", o.cfg.lambda, "Soft containment penalty");
    sub.add_option("--c", o.cfg.c, "Sublevel threshold for the convexity constraint");
    sub.add_option("--delta", o.cfg.delta, "Smoothed-Heaviside width");
    sub.add_option("--tol", o.cfg.tol, "Convergence tolerance (mean |dphi|)");
    sub.add_option("--max-iter", o.cfg.max_iter, "Iteration cap");
    sub.add_option("--seed", o.seed, "Seed for seeded subcommands");
    sub.add_option("--init", o.init, "Initialization scheme")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, InitKind>{{"polygon", InitKind::polygon},
                                            {"percentile", InitKind::percentile},
                                            {"sdf", InitKind::sdf}},
            CLI::ignore_case));
    sub.add_option("--angles", o.n_angles, "Support directions for polygon init");
    sub.add_option("--percentile", o.percentile,
                   "Depth percentile for percentile init");
    sub.add_option("--pad", o.pad,
                   "Zero padding per side (-1 = automatic when the margin < c)");
    sub.add_flag("--csv", o.csv_field, "Dump the field as CSV instead of LSF1");
    sub.add_flag("--heatmaps", o.heatmaps,
                 "Also write a phi heatmap PGM and level-band CSV");
    sub.add_option("--jobs", o.jobs, "Run multiple inputs concurrently")
        ->check(CLI::PositiveNumber);
    sub.add_option("--config", o.config_path,
                   "Flat key=value config file; flags win");
}

// Applies config-file values to options not set on the command line.
// Lines are `key=value`; blank lines and `#` comments are skipped.
void apply_config(CLI::App& sub, const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open config file");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = line.substr(first, eq - first);
        const std::string value = line.substr(eq + 1);
        CLI::Option* opt = sub.get_option_no_throw("--" + key);
        if (opt == nullptr)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        if (opt->count() > 0) continue; // command-line flags win
        opt->add_result(value);
        opt->run_callback();
    }
}

fs::path default_prefix(const CommonOpts& o, const std::string& input) {
    const fs::path stem = fs::path(input).stem();
    if (o.out_prefix.empty()) return fs::path(input).parent_path() / stem;
    if (o.inputs.size() == 1) return o.out_prefix;
    return fs::path(o.out_prefix + "_" + stem.string());
}

void print_record(const ExperimentRecord& r) {
    std::printf("%s: iters=%d status=%s rel_err=%.6f defect=%.6f "
                "containment=%.6f wall=%.2fs\n",
                r.name.c_str(), r.iterations,
                r.status == SolveStatus::converged ? "converged" : "max_iter",
                r.relative_error, r.convexity_defect, r.containment,
                r.wall_time_s);
    if (!r.warning.empty())
        std::fprintf(stderr, "warning: %s\n", r.warning.c_str());
}

// Runs one experiment; returns the exit code for this input.
int run_one(const CommonOpts& o, const std::string& input, DriverKind driver,
            bool with_baseline) {
    ExperimentSpec spec;
    spec.name = fs::path(input).stem().string();
    spec.mask = load_mask(input);
    if (!o.clean_path.empty()) spec.clean = load_mask(o.clean_path);
    spec.cfg = o.cfg;
    spec.driver = driver;
    spec.init = o.init;
    spec.n_angles = o.n_angles;
    spec.percentile = o.percentile;
    spec.pad = o.pad;
    spec.out_prefix = default_prefix(o, input);
    spec.csv_field = o.csv_field;
    spec.emit_heatmaps = o.heatmaps;

    const ExperimentResult result = run_experiment(spec);
    print_record(result.record);

    if (with_baseline) {
        const BinaryMask& ref =
            spec.clean.has_value() ? *spec.clean : spec.mask;
        const BinaryMask baseline = hull_mask(ref);
        save_mask(baseline, spec.out_prefix.string() + "_baseline.pgm");
        std::printf("%s: baseline_area=%zu level_set_area=%zu "
                    "hausdorff=%.4f rel_err=%.6f\n",
                    spec.name.c_str(), baseline.count(),
                    result.solve.hull.count(),
                    hausdorff(baseline, result.solve.hull),
                    relative_error(baseline, result.solve.hull));
    }
    return result.record.status == SolveStatus::converged ? kExitOk
                                                          : kExitMaxIter;
}

int run_solver_batch(const CommonOpts& o, DriverKind driver,
                     bool with_baseline) {
    o.cfg.validate();
    int worst = kExitOk;
    std::size_t next = 0;
    while (next < o.inputs.size()) {
        const std::size_t batch = std::min<std::size_t>(
            static_cast<std::size_t>(o.jobs), o.inputs.size() - next);
        std::vector<std::future<int>> running;
        for (std::size_t i = 0; i < batch; ++i)
            running.push_back(std::async(std::launch::async, run_one,
                                         std::cref(o), o.inputs[next + i],
                                         driver, with_baseline));
        for (auto& f : running) worst = std::max(worst, f.get());
        next += batch;
    }
    return worst;
}

int run_quickhull(const CommonOpts& o) {
    int code = kExitOk;
    for (const std::string& input : o.inputs) {
        const BinaryMask mask = load_mask(input);
        const HullPolygon poly = quickhull(mask_points(mask));
        const BinaryMask hull = rasterize_polygon(poly, mask.width(),
                                                  mask.height());
        const fs::path prefix = default_prefix(o, input);
        save_mask(hull, prefix.string() + "_hull.pgm");
        std::printf("%s: vertices=%zu area=%.1f hull_pixels=%zu\n",
                    fs::path(input).stem().string().c_str(),
                    poly.vertices.size(), polygon_area(poly), hull.count());
    }
    return code;
}

int run_noise(const CommonOpts& o, int count) {
    for (const std::string& input : o.inputs) {
        const BinaryMask mask = load_mask(input);
        const BinaryMask noisy = add_outliers(mask, count, o.seed);
        const fs::path prefix = default_prefix(o, input);
        save_mask(noisy, prefix.string() + "_noisy.pgm");
        std::printf("%s: foreground %zu -> %zu (seed %llu)\n",
                    fs::path(input).stem().string().c_str(), mask.count(),
                    noisy.count(), o.seed);
    }
    return kExitOk;
}

int run_metrics(const CommonOpts& o, const std::string& ref_path) {
    const BinaryMask ref = load_mask(ref_path);
    for (const std::string& input : o.inputs) {
        const BinaryMask mask = load_mask(input);
        std::size_t fg = 0, inside = 0;
        for (int n = 0; n < mask.height(); ++n)
            for (int m = 0; m < mask.width(); ++m)
                if (mask(m, n)) {
                    ++fg;
                    if (ref(m, n)) ++inside;
                }
        std::printf("%s vs %s: hausdorff=%.4f rel_err=%.6f defect=%.6f "
                    "containment=%.6f components=%d\n",
                    fs::path(input).stem().string().c_str(),
                    fs::path(ref_path).stem().string().c_str(),
                    hausdorff(ref, mask), relative_error(ref, mask),
                    convexity_defect(mask),
                    fg ? static_cast<double>(inside) / fg : 0.0,
                    connected_components(mask));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level-set convex hulls of binary masks"};
    app.require_subcommand(1);

    CommonOpts exact_opts, outlier_opts, compare_opts, quick_opts, noise_opts,
        metrics_opts;
    exact_opts.cfg = SolverConfig::exact_defaults();
    compare_opts.cfg = SolverConfig::exact_defaults();
    outlier_opts.cfg = SolverConfig::outlier_defaults();
    outlier_opts.init = InitKind::percentile;

    auto* exact = app.add_subcommand(
        "exact", "Level-set hull with hard containment");
    add_shared_flags(*exact, exact_opts, true);

    auto* outlier = app.add_subcommand(
        "outlier", "Level-set hull with penalized containment");
    add_shared_flags(*outlier, outlier_opts, true);
    outlier->add_option("--clean", outlier_opts.clean_path,
                        "Clean reference mask for the error baseline");

    auto* compare = app.add_subcommand(
        "compare", "Exact solve with a quickhull baseline comparison");
    add_shared_flags(*compare, compare_opts, true);
    compare->add_option("--clean", compare_opts.clean_path,
                        "Clean reference mask for the error baseline");

    auto* quick = app.add_subcommand(
        "quickhull", "Classical convex hull of the foreground pixels");
    add_shared_flags(*quick, quick_opts, true);

    int noise_count = 0;
    auto* noise = app.add_subcommand("noise", "Add seeded uniform outliers");
    add_shared_flags(*noise, noise_opts, true);
    noise->add_option("--count", noise_count, "Number of outlier pixels")
        ->required();

    std::string ref_path;
    auto* metrics = app.add_subcommand("metrics", "Compare two masks");
    add_shared_flags(*metrics, metrics_opts, true);
    metrics->add_option("--ref", ref_path, "Reference mask")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*exact) {
            apply_config(*exact, exact_opts.config_path);
            return run_solver_batch(exact_opts, DriverKind::exact, false);
        }
        if (*outlier) {
            apply_config(*outlier, outlier_opts.config_path);
            return run_solver_batch(outlier_opts, DriverKind::outlier, false);
        }
        if (*compare) {
            apply_config(*compare, compare_opts.config_path);
            return run_solver_batch(compare_opts, DriverKind::exact, true);
        }
        if (*quick) {
            apply_config(*quick, quick_opts.config_path);
            return run_quickhull(quick_opts);
        }
        if (*noise) {
            apply_config(*noise, noise_opts.config_path);
            return run_noise(noise_opts, noise_count);
        }
        if (*metrics) {
            apply_config(*metrics, metrics_opts.config_path);
            return run_metrics(metrics_opts, ref_path);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        const std::string what = e.what();
        if (what.find("non-finite") != std::string::npos) {
            std::fprintf(stderr, "numerical abort: %s\n", what.c_str());
            return kExitNumerical;
        }
        std::fprintf(stderr, "input error: %s\n", what.c_str());
        return kExitInput;
    }
    return kExitOk;
}
