// spinlight - scalar minimization and quadrature utilities

#pragma once

#include <functional>
#include <vector>

namespace spinlight {

struct GoldenResult {
  double x = 0.0;
  double fx = 0.0;
  int evaluations = 0;
};

// Golden-section minimization of a unimodal function on [a, b]. Terminates
// when the bracket width falls below rel_tol * (|a| + |b|) (plus a tiny
// absolute floor so a == 0 == b brackets terminate). Exact ties between the
// two probes alternate the side that is discarded, so on a numerically flat
// function the bracket contracts toward the interior instead of creeping to
// an endpoint.
GoldenResult golden_section_min(const std::function<double(double)>& f,
                                double a, double b,
                                double rel_tol = 1e-12, int max_iter = 400);

// Adaptive Gauss-Kronrod (G7, K15) quadrature of f over [a, b] with relative
// tolerance rel_tol. Throws NumericalError if the recursion exceeds
// max_depth without meeting the tolerance.
double adaptive_gauss_kronrod(const std::function<double(double)>& f,
                              double a, double b,
                              double rel_tol = 1e-10, int max_depth = 40);

// Decides whether a coarse scan of residuals is pinned at a window boundary:
// true when the best sample sits at an end of the window and the samples
// descend toward that end almost monotonically (so the trend exceeds the
// sampling noise). Pure noise has a descending fraction near 1/2 and is not
// flagged.
bool scan_pinned_at_boundary(const std::vector<double>& residuals,
                             int argmin_index,
                             double monotone_fraction = 0.8);

}  // namespace spinlight
