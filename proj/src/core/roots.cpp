#include "core/roots.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace drc {

RootResult bisect(const std::function<double(double)> &f, double lo, double hi,
                  double width_tol) {
    if (!(lo < hi))
        throw std::invalid_argument("bisection bracket must have lo < hi");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return {lo, lo, lo, f(lo)};
    if (fhi == 0.0)
        return {hi, hi, hi, f(hi)};
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisection bracket must change sign");

    for (int iter = 0; iter < 200 && (hi - lo) > width_tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break; // bracket is at floating-point resolution
        const double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    RootResult r;
    r.root = 0.5 * (lo + hi);
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    r.residual = f(r.root);
    return r;
}

RootScan scan_roots(const std::function<double(double)> &f, double lo, double hi,
                    std::size_t points,
                    const std::function<bool(double, double)> &skip_bracket,
                    double width_tol) {
    if (points < 2)
        throw std::invalid_argument("scan needs at least 2 points");
    if (!(lo < hi))
        throw std::invalid_argument("scan range must have lo < hi");

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> xs(points), fs(points);
    bool any_nonzero = false;
    for (std::size_t k = 0; k < points; ++k) {
        xs[k] = lo + (hi - lo) * static_cast<double>(k) /
                         static_cast<double>(points - 1);
        try {
            fs[k] = f(xs[k]);
        } catch (...) {
            fs[k] = nan; // unevaluable node (pole); poisons both brackets
        }
        if (std::isfinite(fs[k]) && fs[k] != 0.0)
            any_nonzero = true;
    }

    RootScan scan;
    scan.degenerate = !any_nonzero;
    if (scan.degenerate)
        return scan;

    for (std::size_t k = 0; k + 1 < points; ++k) {
        const double fa = fs[k], fb = fs[k + 1];
        if (std::isnan(fa) || std::isnan(fb)) {
            ++scan.skipped_brackets;
            continue;
        }
        if (skip_bracket && skip_bracket(xs[k], xs[k + 1])) {
            ++scan.skipped_brackets;
            continue;
        }
        if (fa == 0.0) {
            scan.roots.push_back({xs[k], xs[k], xs[k], 0.0});
            continue;
        }
        if (fb == 0.0)
            continue; // reported by the next bracket (or the tail check below)
        if ((fa > 0.0) != (fb > 0.0))
            scan.roots.push_back(bisect(f, xs[k], xs[k + 1], width_tol));
    }
    if (fs[points - 1] == 0.0)
        scan.roots.push_back({xs[points - 1], xs[points - 1], xs[points - 1], 0.0});
    return scan;
}

double golden_min(const std::function<double(double)> &f, double lo, double hi,
                  double x_tol) {
    if (!(lo < hi))
        throw std::invalid_argument("golden_min range must have lo < hi");
    const double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > x_tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

namespace {

// Edge identifiers for marching squares: kind 0 = along-x edge from grid node
// (i, j) to (i+1, j); kind 1 = along-y edge from (i, j) to (i, j+1).
long long edge_id(int kind, int i, int j) {
    return (static_cast<long long>(kind) << 42) |
           (static_cast<long long>(i) << 21) | static_cast<long long>(j);
}

struct Segment {
    long long e1, e2;
};

} // namespace

std::vector<ContourChain> marching_squares(const std::vector<double> &xs,
                                           const std::vector<double> &ys,
                                           const std::vector<std::vector<double>> &values) {
    const int nx = static_cast<int>(xs.size());
    const int ny = static_cast<int>(ys.size());
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("contour grid needs at least 2x2 points");
    if (static_cast<int>(values.size()) != nx)
        throw std::invalid_argument("values/xs size mismatch");
    for (const auto &col : values)
        if (static_cast<int>(col.size()) != ny)
            throw std::invalid_argument("values/ys size mismatch");

    auto positive = [&](int i, int j) { return values[i][j] > 0.0; };
    auto midpoint = [&](long long id) -> std::pair<double, double> {
        const int kind = static_cast<int>(id >> 42);
        const int i = static_cast<int>((id >> 21) & 0x1FFFFF);
        const int j = static_cast<int>(id & 0x1FFFFF);
        if (kind == 0)
            return {0.5 * (xs[i] + xs[i + 1]), ys[j]};
        return {xs[i], 0.5 * (ys[j] + ys[j + 1])};
    };

    std::vector<Segment> segments;
    for (int i = 0; i + 1 < nx; ++i) {
        for (int j = 0; j + 1 < ny; ++j) {
            if (!std::isfinite(values[i][j]) || !std::isfinite(values[i + 1][j]) ||
                !std::isfinite(values[i + 1][j + 1]) || !std::isfinite(values[i][j + 1]))
                continue; // contour is undefined where the function is
            const bool sw = positive(i, j);
            const bool se = positive(i + 1, j);
            const bool ne = positive(i + 1, j + 1);
            const bool nw = positive(i, j + 1);
            const int idx = (sw ? 1 : 0) | (se ? 2 : 0) | (ne ? 4 : 0) | (nw ? 8 : 0);
            if (idx == 0 || idx == 15)
                continue;
            const long long south = edge_id(0, i, j);
            const long long north = edge_id(0, i, j + 1);
            const long long west = edge_id(1, i, j);
            const long long east = edge_id(1, i + 1, j);
            auto emit = [&](long long a, long long b) { segments.push_back({a, b}); };
            switch (idx) {
            case 1: case 14: emit(west, south); break;
            case 2: case 13: emit(south, east); break;
            case 3: case 12: emit(west, east); break;
            case 4: case 11: emit(east, north); break;
            case 6: case 9: emit(south, north); break;
            case 7: case 8: emit(west, north); break;
            case 5: {
                const double center = 0.25 * (values[i][j] + values[i + 1][j] +
                                              values[i + 1][j + 1] + values[i][j + 1]);
                if (center > 0.0) {
                    emit(west, north);
                    emit(south, east);
                } else {
                    emit(west, south);
                    emit(east, north);
                }
                break;
            }
            case 10: {
                const double center = 0.25 * (values[i][j] + values[i + 1][j] +
                                              values[i + 1][j + 1] + values[i][j + 1]);
                if (center > 0.0) {
                    emit(west, south);
                    emit(east, north);
                } else {
                    emit(west, north);
                    emit(south, east);
                }
                break;
            }
            default:
                break;
            }
        }
    }

    // Adjacency: each crossing edge touches at most two segments.
    std::map<long long, std::vector<std::size_t>> touching;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        touching[segments[s].e1].push_back(s);
        touching[segments[s].e2].push_back(s);
    }

    std::vector<bool> used(segments.size(), false);
    std::vector<ContourChain> chains;

    auto walk = [&](std::size_t start, long long from_edge) {
        ContourChain chain;
        chain.points.push_back(midpoint(from_edge));
        std::size_t seg = start;
        long long edge = from_edge;
        while (true) {
            used[seg] = true;
            edge = segments[seg].e1 == edge ? segments[seg].e2 : segments[seg].e1;
            chain.points.push_back(midpoint(edge));
            const auto &next = touching[edge];
            std::size_t other = segments.size();
            for (std::size_t cand : next)
                if (!used[cand])
                    other = std::min(other, cand);
            if (other == segments.size())
                break;
            seg = other;
        }
        chain.closed = chain.points.size() > 2 &&
                       chain.points.front() == chain.points.back();
        return chain;
    };

    // Open chains first (start from edges touched by a single segment),
    // then whatever remains forms closed loops.
    for (std::size_t s = 0; s < segments.size(); ++s) {
        if (used[s])
            continue;
        long long start_edge = segments[s].e1;
        if (touching[segments[s].e1].size() == 1)
            start_edge = segments[s].e1;
        else if (touching[segments[s].e2].size() == 1)
            start_edge = segments[s].e2;
        else
            continue; // interior segment of an open chain or part of a loop
        chains.push_back(walk(s, start_edge));
    }
    for (std::size_t s = 0; s < segments.size(); ++s) {
        if (used[s])
            continue;
        chains.push_back(walk(s, segments[s].e1));
    }
    return chains;
}

} // namespace drc
