#pragma once

// Mask and field file I/O plus seeded noise injection.
//
// Masks: PGM (P2/P5) and PBM (P1/P4); pixels must be exactly 0 or the
// maximum value. save_mask writes P5 with 0/255.
//
// Fields: the LSF1 binary format —
//   bytes 0-3   magic "LSF1"
//   bytes 4-7   width M, u32 little-endian
//   bytes 8-11  height N, u32 little-endian
//   bytes 12-15 reserved, zero
//   then M*N IEEE-754 f64 little-endian values, row-major, m fastest.

#include <cstdint>
#include <filesystem>
#include <string>

#include "lshull/field.hpp"

namespace lshull {

BinaryMask load_mask(const std::filesystem::path& path);
void save_mask(const BinaryMask& mask, const std::filesystem::path& path);

void dump_field(const ScalarField& f, const std::filesystem::path& path);
ScalarField load_field(const std::filesystem::path& path);

// CSV alternative to LSF1: one row per n, M comma-separated values.
void dump_field_csv(const ScalarField& f, const std::filesystem::path& path);

// Grayscale heatmap of a field (linear min..max -> 0..255), for quick
// inspection of level-set functions.
void save_heatmap(const ScalarField& f, const std::filesystem::path& path);

// CSV of pixels within 0.5 of the 0, 10 and 20 level sets of phi.
void save_level_bands_csv(const ScalarField& phi,
                          const std::filesystem::path& path);

// Deterministic xorshift64* generator used for all seeded sampling.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed);
    std::uint64_t next();
    // Unbiased uniform draw in [0, bound).
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Sets `count` distinct uniformly-sampled background pixels to foreground.
// Throws if count exceeds the number of background pixels.
BinaryMask add_outliers(const BinaryMask& mask, int count, std::uint64_t seed);

} // namespace lshull
