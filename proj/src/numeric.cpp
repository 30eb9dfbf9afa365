// spinlight - scalar minimization and quadrature utilities

#include "spinlight/numeric.hpp"

#include <cmath>
#include <utility>

#include "spinlight/errors.hpp"

namespace spinlight {

GoldenResult golden_section_min(const std::function<double(double)>& f,
                                double a, double b, double rel_tol,
                                int max_iter) {
  GoldenResult res;
  if (b < a) std::swap(a, b);
  if (a == b) {
    res.x = a;
    res.fx = f(a);
    res.evaluations = 1;
    return res;
  }
  const double inv_phi = 0.6180339887498949;  // 1/phi
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int evals = 2;
  bool drop_right = true;  // tie-break alternator
  const double abs_floor = 1e-300;
  for (int it = 0; it < max_iter; ++it) {
    if (b - a <= rel_tol * (std::abs(a) + std::abs(b)) + abs_floor) break;
    bool take_left;
    if (f1 < f2) {
      take_left = true;
    } else if (f2 < f1) {
      take_left = false;
    } else {
      take_left = drop_right;
      drop_right = !drop_right;
    }
    if (take_left) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
    ++evals;
  }
  if (f1 <= f2) {
    res.x = x1;
    res.fx = f1;
  } else {
    res.x = x2;
    res.fx = f2;
  }
  res.evaluations = evals;
  return res;
}

namespace {

// 15-point Kronrod abscissae on [-1, 1] and weights; the embedded 7-point
// Gauss rule uses the odd-indexed abscissae.
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult gauss_kronrod_panel(const std::function<double(double)>& f,
                                double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(mid - half * kKronrodNodes[i]);
    fv[14 - i] = f(mid + half * kKronrodNodes[i]);
  }
  fv[7] = f(mid);
  double kronrod = 0.0;
  for (int i = 0; i < 7; ++i)
    kronrod += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
  kronrod += kKronrodWeights[7] * fv[7];
  double gauss = kGaussWeights[3] * fv[7];
  for (int i = 0; i < 3; ++i)
    gauss += kGaussWeights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

double integrate_recursive(const std::function<double(double)>& f, double a,
                           double b, double tol_abs, int depth,
                           int max_depth) {
  const PanelResult p = gauss_kronrod_panel(f, a, b);
  if (p.error <= tol_abs || p.error <= 1e-300) return p.kronrod;
  if (depth >= max_depth)
    throw NumericalError("adaptive quadrature did not converge");
  const double mid = 0.5 * (a + b);
  return integrate_recursive(f, a, mid, 0.5 * tol_abs, depth + 1, max_depth) +
         integrate_recursive(f, mid, b, 0.5 * tol_abs, depth + 1, max_depth);
}

}  // namespace

double adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                              double b, double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  const PanelResult first = gauss_kronrod_panel(f, a, b);
  const double scale = std::max(std::abs(first.kronrod), 1e-300);
  if (first.error <= rel_tol * scale) return sign * first.kronrod;
  const double mid = 0.5 * (a + b);
  const double tol_abs = 0.5 * rel_tol * scale;
  return sign * (integrate_recursive(f, a, mid, tol_abs, 1, max_depth) +
                 integrate_recursive(f, mid, b, tol_abs, 1, max_depth));
}

bool scan_pinned_at_boundary(const std::vector<double>& residuals,
                             int argmin_index, double monotone_fraction) {
  const int n = static_cast<int>(residuals.size());
  if (n < 3) return false;
  if (argmin_index != 0 && argmin_index != n - 1) return false;
  int toward = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const bool descending = residuals[i + 1] < residuals[i];
    if (argmin_index == n - 1 ? descending : !descending) ++toward;
  }
  return toward >= monotone_fraction * (n - 1);
}

}  // namespace spinlight
