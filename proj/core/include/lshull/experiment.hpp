#pragma once

// Experiment orchestration: padding, initialization, driver selection,
// metric collection, and artifact output.

#include <filesystem>
#include <optional>
#include <string>

#include "lshull/admm.hpp"
#include "lshull/field.hpp"

namespace lshull {

enum class DriverKind { exact, outlier };
enum class InitKind { polygon, percentile, sdf };

struct ExperimentSpec {
    std::string name = "experiment";
    BinaryMask mask;
    // Clean reference for outlier runs; the baseline hull is computed
    // from it instead of from the (noisy) input.
    std::optional<BinaryMask> clean;
    SolverConfig cfg;
    DriverKind driver = DriverKind::exact;
    InitKind init = InitKind::polygon;
    int n_angles = 16;
    double percentile = 5.0;
    // Zero padding per side; -1 pads automatically by max(4, ceil(c)+4)
    // when the foreground margin is smaller than c.
    int pad = -1;
    // When non-empty, artifacts are written with this path prefix:
    // <prefix>_hull.pgm, <prefix>_phi.lsf1 (or _phi.csv), <prefix>_trace.csv,
    // <prefix>_record.csv.
    std::filesystem::path out_prefix;
    bool csv_field = false;
    bool emit_heatmaps = false; // extra <prefix>_phi.pgm and _levels.csv
};

struct ExperimentRecord {
    std::string name;
    std::string config; // flat key=value serialization, verbatim
    int iterations = 0;
    SolveStatus status = SolveStatus::converged;
    double relative_error = 0.0;
    double convexity_defect = 0.0;
    double containment = 0.0; // fraction of input foreground inside the hull
    double wall_time_s = 0.0; // not serialized (artifacts stay reproducible)
    std::string warning;
};

struct ExperimentResult {
    ExperimentRecord record;
    SolveResult solve; // phi and hull, cropped back to input dimensions
};

std::string serialize_config(const SolverConfig& cfg);

// Zero-pad a mask by `pad` pixels per side / crop a field or mask back.
BinaryMask pad_mask(const BinaryMask& mask, int pad);
ScalarField crop_field(const ScalarField& f, int pad, int width, int height);
BinaryMask crop_mask(const BinaryMask& m, int pad, int width, int height);

ExperimentResult run_experiment(const ExperimentSpec& spec);

} // namespace lshull
