#include "lshull/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lshull/hull.hpp"

namespace lshull {

namespace {

constexpr double kFar = 1e18;

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

} // namespace

ScalarField edt(const BinaryMask& mask) {
    if (mask.count() == 0)
        throw std::invalid_argument("edt: empty mask");

    const int M = mask.width(), N = mask.height();
    ScalarField sq(M, N);

    std::vector<double> line(M), out;
    for (int n = 0; n < N; ++n) {
        for (int m = 0; m < M; ++m) line[m] = mask(m, n) ? 0.0 : kFar;
        dt1d(line, out);
        for (int m = 0; m < M; ++m) sq(m, n) = out[m];
    }
    std::vector<double> col(N);
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n < N; ++n) col[n] = sq(m, n);
        dt1d(col, out);
        for (int n = 0; n < N; ++n) sq(m, n) = out[n];
    }
    for (double& v : sq.data()) v = std::sqrt(v);
    return sq;
}

double hausdorff(const BinaryMask& a, const BinaryMask& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("hausdorff: dimension mismatch");
    if (a.count() == 0 || b.count() == 0)
        throw std::invalid_argument("hausdorff: empty mask");

    const ScalarField da = edt(a), db = edt(b);
    double h = 0.0;
    for (int n = 0; n < a.height(); ++n)
        for (int m = 0; m < a.width(); ++m) {
            if (a(m, n)) h = std::max(h, db(m, n));
            if (b(m, n)) h = std::max(h, da(m, n));
        }
    return h;
}

double relative_error(const BinaryMask& c1, const BinaryMask& c2) {
    const double area = static_cast<double>(c1.count());
    const double diameter = 2.0 * std::sqrt(area / std::numbers::pi);
    return hausdorff(c1, c2) / diameter;
}

double convexity_defect(const BinaryMask& mask) {
    const BinaryMask hull = hull_mask(mask);
    std::size_t sym_diff = 0;
    for (int n = 0; n < mask.height(); ++n)
        for (int m = 0; m < mask.width(); ++m)
            if (mask(m, n) != hull(m, n)) ++sym_diff;
    return static_cast<double>(sym_diff) / static_cast<double>(hull.count());
}

int connected_components(const BinaryMask& mask) {
    const int M = mask.width(), N = mask.height();
    std::vector<char> seen(mask.size(), 0);
    std::vector<std::pair<int, int>> stack;
    int components = 0;

    for (int n = 0; n < N; ++n)
        for (int m = 0; m < M; ++m) {
            const std::size_t idx = static_cast<std::size_t>(n) * M + m;
            if (!mask(m, n) || seen[idx]) continue;
            ++components;
            seen[idx] = 1;
            stack.push_back({m, n});
            while (!stack.empty()) {
                auto [cm, cn] = stack.back();
                stack.pop_back();
                const int dm[] = {1, -1, 0, 0};
                const int dn[] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int pm = cm + dm[k], pn = cn + dn[k];
                    if (pm < 0 || pm >= M || pn < 0 || pn >= N) continue;
                    const std::size_t pidx = static_cast<std::size_t>(pn) * M + pm;
                    if (mask(pm, pn) && !seen[pidx]) {
                        seen[pidx] = 1;
                        stack.push_back({pm, pn});
                    }
                }
            }
        }
    return components;
}

} // namespace lshull
