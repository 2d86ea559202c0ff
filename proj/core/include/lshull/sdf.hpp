#pragma once

// Exact periodic (toroidal) Euclidean distance transform, signed distance
// construction, and the polygon-based level-set initializations.

#include <vector>

#include "lshull/field.hpp"

namespace lshull {

struct PixelCoord {
    int m = 0;
    int n = 0;
    friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

struct LandmarkSet {
    std::vector<PixelCoord> coords;

    // Indicator mask l(x): 1 exactly at the listed coordinates.
    BinaryMask indicator(int width, int height) const;
};

// Distance from each pixel center to the nearest foreground pixel center
// under the toroidal metric (per-axis displacement min(|d|, M-|d|)).
// Exact; computed by 1-D lower-envelope transforms on a 3x-tiled axis.
// Throws on an all-background mask.
ScalarField periodic_edt(const BinaryMask& mask);

// Signed distance: negative inside the mask, positive outside.
//   phi(x) = +periodic_edt(foreground)(x)  on background pixels,
//   phi(x) = -periodic_edt(background)(x)  on foreground pixels.
// Throws on uniform (all-0 or all-1) masks.
ScalarField signed_distance(const BinaryMask& mask);

struct PolygonInit {
    ScalarField phi0;
    LandmarkSet landmarks;
    bool fallback = false; // true when < 3 distinct vertices were found
};

// Rotate the foreground coordinates about the centroid by n_angles evenly
// spaced angles, take the topmost pixel per direction, and use those
// pixels as polygon vertices (and as boundary landmarks). phi0 is the
// signed distance of the rasterized polygon. Degenerate masks fall back
// to phi0 = signed_distance(mask) with no landmarks.
PolygonInit init_polygon_exact(const BinaryMask& mask, int n_angles);

// Same construction but each directional extreme is the pixel at the
// p-th percentile of the rotated ranking (counting from the top), so
// isolated outliers do not become vertices. No landmarks are returned.
ScalarField init_polygon_percentile(const BinaryMask& mask, int n_angles,
                                    double p_percent);

} // namespace lshull
