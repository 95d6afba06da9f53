// Derivative-free root finding on 1D grids and sign-based contour extraction
// on 2D grids.
#pragma once

#include <functional>
#include <vector>

namespace drc {

struct RootResult {
    double root = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0; // fresh f(root) evaluation
};

struct RootScan {
    std::vector<RootResult> roots;
    std::size_t skipped_brackets = 0; // grid brackets rejected by the filter
    bool degenerate = false;          // function identically zero on the grid
};

// Bisection on [lo, hi]; requires opposite (or zero) signs at the ends.
// Shrinks the bracket to `width_tol` and reports a fresh midpoint residual.
RootResult bisect(const std::function<double(double)> &f, double lo, double hi,
                  double width_tol = 1e-12);

// Scan `points` grid nodes on [lo, hi] for sign changes and refine each by
// bisection.  `skip_bracket(a, b)` may reject a bracket (e.g. poles inside);
// rejected or non-finite brackets are counted, not refined.
RootScan scan_roots(const std::function<double(double)> &f, double lo, double hi,
                    std::size_t points,
                    const std::function<bool(double, double)> &skip_bracket = {},
                    double width_tol = 1e-12);

// Golden-section minimum of a unimodal function on [lo, hi].
double golden_min(const std::function<double(double)> &f, double lo, double hi,
                  double x_tol = 1e-9);

// One polyline of a zero contour; `closed` when it returns to its start.
struct ContourChain {
    std::vector<std::pair<double, double>> points;
    bool closed = false;
};

// Sign-based marching squares: extracts the zero contour of samples f(x, y)
// given on the tensor grid xs × ys (values[i][j] = f(xs[i], ys[j])).  Segment
// endpoints are edge midpoints (no value interpolation); chains are ordered
// walks that either close or end on the grid boundary.  Cells with a
// non-finite corner sample contribute nothing (contour undefined there).
std::vector<ContourChain> marching_squares(const std::vector<double> &xs,
                                           const std::vector<double> &ys,
                                           const std::vector<std::vector<double>> &values);

} // namespace drc
