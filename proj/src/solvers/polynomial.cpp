#include "pnapsac/solvers/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace pnapsac::solvers {

namespace {

constexpr double kPi = 3.14159265358979323846;

void polish(double c3, double c2, double c1, double c0, double& x) {
  for (int iter = 0; iter < 3; ++iter) {
    const double f = ((c3 * x + c2) * x + c1) * x + c0;
    const double df = (3 * c3 * x + 2 * c2) * x + c1;
    if (df == 0) break;
    const double step = f / df;
    if (!std::isfinite(step)) break;
    x -= step;
  }
}

std::vector<double> solve_quadratic(double a, double b, double c) {
  if (std::abs(a) < 1e-14 * std::max(std::abs(b), std::abs(c))) {
    if (b == 0) return {};
    return {-c / b};
  }
  const double disc = b * b - 4 * a * c;
  if (disc < 0) return {};
  const double root = std::sqrt(disc);
  // Citardauq form on the small root avoids cancellation.
  const double q = -0.5 * (b + (b >= 0 ? root : -root));
  std::vector<double> out;
  out.push_back(q / a);
  if (q != 0) out.push_back(c / q);
  return out;
}

}  // namespace

std::vector<double> solve_cubic_real(double c3, double c2, double c1,
                                     double c0) {
  const double scale =
      std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  if (scale == 0) return {};
  const double a3 = c3 / scale, a2 = c2 / scale, a1 = c1 / scale,
               a0 = c0 / scale;

  std::vector<double> roots;
  if (std::abs(a3) < 1e-12) {
    roots = solve_quadratic(a2, a1, a0);
  } else {
    // Depressed form x = y - b/(3a):  y^3 + p y + q = 0.
    const double b = a2 / a3, c = a1 / a3, d = a0 / a3;
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double shift = -b / 3.0;
    const double disc = 0.25 * q * q + p * p * p / 27.0;
    if (disc > 0) {
      const double s = std::sqrt(disc);
      const double u = std::cbrt(-0.5 * q + s);
      const double v = std::cbrt(-0.5 * q - s);
      roots.push_back(u + v + shift);
    } else if (p == 0) {
      roots.push_back(std::cbrt(-q) + shift);
    } else {
      const double r = 2.0 * std::sqrt(-p / 3.0);
      double arg = 3.0 * q / (p * r);
      arg = std::clamp(arg, -1.0, 1.0);
      const double phi = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k)
        roots.push_back(r * std::cos(phi - 2.0 * kPi * k / 3.0) + shift);
    }
  }

  for (double& x : roots) polish(a3, a2, a1, a0, x);
  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double x : roots) {
    if (!std::isfinite(x)) continue;
    if (!merged.empty() &&
        std::abs(x - merged.back()) <= 1e-9 * std::max(1.0, std::abs(x)))
      continue;
    merged.push_back(x);
  }
  return merged;
}

}  // namespace pnapsac::solvers
