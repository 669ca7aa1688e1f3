#include "crlab/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "crlab/geometry.hpp"

namespace crlab {

namespace {

GlRule compute_gl(int n) {
  GlRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev-based initial guess
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

}  // namespace

const GlRule& gauss_legendre(int n) {
  static std::unordered_map<int, GlRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

void QuadratureSpec::validate() const {
  if (z_radius <= 0.0) throw std::invalid_argument("QuadratureSpec: z_radius <= 0");
  if (z_nodes < 2 || lambda_nodes < 2)
    throw std::invalid_argument("QuadratureSpec: node counts must be >= 2");
  if (lambda_nodes % 2 != 0)
    throw std::invalid_argument("QuadratureSpec: lambda_nodes must be even");
}

double QuadratureSpec::taper(double r) const {
  double r0 = taper_start * z_radius;
  if (r <= r0) return 1.0;
  if (r >= z_radius) return 0.0;
  double u = (r - r0) / (z_radius - r0);
  double c = std::cos(0.5 * kPi * u);
  return c * c;
}

}  // namespace crlab
