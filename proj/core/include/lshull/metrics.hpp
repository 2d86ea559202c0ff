#pragma once

// Evaluation metrics. These deliberately use plain (non-toroidal) pixel
// distances and adjacency: hulls are compared in ordinary image space.

#include "lshull/field.hpp"

namespace lshull {

// Symmetric Hausdorff distance between the foreground pixel sets, exact,
// computed via two non-periodic distance transforms. Throws if either
// mask is empty or shapes differ.
double hausdorff(const BinaryMask& a, const BinaryMask& b);

// hausdorff(c1, c2) / (2 sqrt(area(c1) / pi)); c1 is the benchmark hull.
double relative_error(const BinaryMask& c1, const BinaryMask& c2);

// |mask XOR hull_mask(mask)| / |hull_mask(mask)|, in [0, 1];
// 0 means the mask is discretely convex.
double convexity_defect(const BinaryMask& mask);

// Number of 4-connected foreground components (non-periodic adjacency).
int connected_components(const BinaryMask& mask);

// Non-periodic exact Euclidean distance transform (distance to the
// nearest foreground pixel center). Throws on an empty mask.
ScalarField edt(const BinaryMask& mask);

} // namespace lshull
