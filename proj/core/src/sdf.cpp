#include "lshull/sdf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lshull/hull.hpp"

namespace lshull {

BinaryMask LandmarkSet::indicator(int width, int height) const {
    BinaryMask l(width, height);
    for (const auto& c : coords) l(c.m, c.n) = 1;
    return l;
}

namespace {

constexpr double kFar = 1e18;

// Felzenszwalb-Huttenlocher 1-D squared-distance transform:
// d[q] = min_p (f[p] + (q-p)^2).
void dt1d(const std::vector<double>& f, std::vector<double>& d) {
    const int n = static_cast<int>(f.size());
    std::vector<int> v(n);
    std::vector<double> z(n + 1);
    int k = 0;
    v[0] = 0;
    z[0] = -std::numeric_limits<double>::infinity();
    z[1] = std::numeric_limits<double>::infinity();
    for (int q = 1; q < n; ++q) {
        double s;
        for (;;) {
            const int p = v[k];
            s = ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
            if (s > z[k]) break;
            --k;
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = std::numeric_limits<double>::infinity();
    }
    d.resize(n);
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        const int p = v[k];
        d[q] = f[p] + double(q - p) * (q - p);
    }
}

// Periodic 1-D transform via a 3x tiling cropped to the middle copy.
void dt1d_periodic(const std::vector<double>& f, std::vector<double>& d) {
    const int n = static_cast<int>(f.size());
    std::vector<double> tiled(3 * n);
    for (int r = 0; r < 3; ++r)
        std::copy(f.begin(), f.end(), tiled.begin() + r * n);
    std::vector<double> td;
    dt1d(tiled, td);
    d.assign(td.begin() + n, td.begin() + 2 * n);
}

} // namespace

ScalarField periodic_edt(const BinaryMask& mask) {
    if (mask.count() == 0)
        throw std::invalid_argument("periodic_edt: empty set");

    const int M = mask.width(), N = mask.height();
    ScalarField sq(M, N);

    // pass 1: along m within each column
    std::vector<double> line(M), out;
    for (int n = 0; n < N; ++n) {
        for (int m = 0; m < M; ++m) line[m] = mask(m, n) ? 0.0 : kFar;
        dt1d_periodic(line, out);
        for (int m = 0; m < M; ++m) sq(m, n) = out[m];
    }

    // pass 2: along n, combining columns
    std::vector<double> col(N);
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n < N; ++n) col[n] = sq(m, n);
        dt1d_periodic(col, out);
        for (int n = 0; n < N; ++n) sq(m, n) = out[n];
    }

    for (double& v : sq.data()) v = std::sqrt(v);
    return sq;
}

ScalarField signed_distance(const BinaryMask& mask) {
    const std::size_t fg = mask.count();
    if (fg == 0 || fg == mask.size())
        throw std::invalid_argument("signed_distance: uniform mask");

    const ScalarField d_out = periodic_edt(mask);
    const ScalarField d_in = periodic_edt(mask.complement());

    ScalarField phi(mask.width(), mask.height());
    for (int n = 0; n < mask.height(); ++n)
        for (int m = 0; m < mask.width(); ++m)
            phi(m, n) = mask(m, n) ? -d_in(m, n) : d_out(m, n);
    return phi;
}

namespace {

struct RotatedPick {
    double ry = 0.0; // rotated y (ranking key, descending)
    double rx = 0.0; // rotated x (first tie-break, ascending)
    int index = 0;   // row-major index (final tie-break, ascending)
    PixelCoord coord;
};

// Foreground coordinates rotated about the centroid, sorted topmost-first.
std::vector<RotatedPick> rotated_ranking(const BinaryMask& mask,
                                         double angle, double cx, double cy) {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<RotatedPick> picks;
    picks.reserve(mask.count());
    for (int n = 0; n < mask.height(); ++n)
        for (int m = 0; m < mask.width(); ++m) {
            if (!mask(m, n)) continue;
            const double dx = m - cx, dy = n - cy;
            picks.push_back({s * dx + c * dy, c * dx - s * dy,
                             n * mask.width() + m, {m, n}});
        }
    std::sort(picks.begin(), picks.end(),
              [](const RotatedPick& a, const RotatedPick& b) {
                  if (a.ry != b.ry) return a.ry > b.ry;
                  if (a.rx != b.rx) return a.rx < b.rx;
                  return a.index < b.index;
              });
    return picks;
}

struct VertexCollection {
    std::vector<PixelCoord> verts; // deduplicated, ordered by angle
    double cx = 0.0, cy = 0.0;
};

VertexCollection collect_vertices(const BinaryMask& mask, int n_angles,
                                  double rank_fraction) {
    if (mask.count() == 0)
        throw std::invalid_argument("init_polygon: empty mask");
    if (n_angles < 3)
        throw std::invalid_argument("init_polygon: n_angles must be >= 3");

    VertexCollection vc;
    std::size_t cnt = 0;
    for (int n = 0; n < mask.height(); ++n)
        for (int m = 0; m < mask.width(); ++m)
            if (mask(m, n)) {
                vc.cx += m;
                vc.cy += n;
                ++cnt;
            }
    vc.cx /= cnt;
    vc.cy /= cnt;

    std::vector<PixelCoord> collected;
    for (int k = 0; k < n_angles; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n_angles;
        const auto picks = rotated_ranking(mask, angle, vc.cx, vc.cy);
        std::size_t rank = static_cast<std::size_t>(rank_fraction * picks.size());
        rank = std::min(rank, picks.size() - 1);
        collected.push_back(picks[rank].coord);
    }

    // deduplicate, then order by angle about the centroid
    std::sort(collected.begin(), collected.end(),
              [](const PixelCoord& a, const PixelCoord& b) {
                  return a.n != b.n ? a.n < b.n : a.m < b.m;
              });
    collected.erase(std::unique(collected.begin(), collected.end()),
                    collected.end());
    std::sort(collected.begin(), collected.end(),
              [&vc](const PixelCoord& a, const PixelCoord& b) {
                  const double aa = std::atan2(a.n - vc.cy, a.m - vc.cx);
                  const double ab = std::atan2(b.n - vc.cy, b.m - vc.cx);
                  if (aa != ab) return aa < ab;
                  return a.n != b.n ? a.n < b.n : a.m < b.m;
              });
    vc.verts = std::move(collected);
    return vc;
}

// Rasterize the vertex polygon and take its signed distance; empty on
// degenerate rasters so callers can fall back.
bool polygon_phi(const std::vector<PixelCoord>& verts, int width, int height,
                 ScalarField& phi0) {
    HullPolygon poly;
    for (const auto& c : verts)
        poly.vertices.push_back({static_cast<double>(c.m),
                                 static_cast<double>(c.n)});
    const BinaryMask raster = rasterize_polygon(poly, width, height);
    const std::size_t cnt = raster.count();
    if (cnt == 0 || cnt == raster.size()) return false;
    phi0 = signed_distance(raster);
    return true;
}

} // namespace

PolygonInit init_polygon_exact(const BinaryMask& mask, int n_angles) {
    const auto vc = collect_vertices(mask, n_angles, 0.0);

    PolygonInit out;
    if (vc.verts.size() < 3 ||
        !polygon_phi(vc.verts, mask.width(), mask.height(), out.phi0)) {
        out.phi0 = signed_distance(mask);
        out.fallback = true;
        return out;
    }
    out.landmarks.coords = vc.verts;
    return out;
}

ScalarField init_polygon_percentile(const BinaryMask& mask, int n_angles,
                                    double p_percent) {
    if (p_percent < 0.0 || p_percent >= 50.0)
        throw std::invalid_argument(
            "init_polygon_percentile: p must be in [0, 50)");
    const auto vc = collect_vertices(mask, n_angles, p_percent / 100.0);

    ScalarField phi0;
    if (vc.verts.size() < 3 ||
        !polygon_phi(vc.verts, mask.width(), mask.height(), phi0))
        return signed_distance(mask);
    return phi0;
}

} // namespace lshull
