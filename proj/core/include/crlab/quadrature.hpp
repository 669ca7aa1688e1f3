#pragma once

#include <vector>

namespace crlab {

struct GlRule {
  std::vector<double> x, w;  // nodes/weights on [-1, 1]
};

/** Gauss-Legendre rule with n points (cached). */
const GlRule& gauss_legendre(int n);

/**
 * Quadrature for the (z, lambda) integral defining T: tensor Gauss-Legendre
 * in z over the square circumscribing the truncation disk, with a smooth
 * radial taper near the edge, and Gauss-Legendre in lambda on [-1, 1].
 */
struct QuadratureSpec {
  double z_radius = 10.0;
  int z_nodes = 32;       // per axis
  int lambda_nodes = 16;  // even, symmetric about 0
  double taper_start = 0.85;

  void validate() const;
  static QuadratureSpec coarse() { return {6.0, 16, 8, 0.85}; }
  static QuadratureSpec refined() { return {12.0, 48, 24, 0.85}; }

  /** cos^2 rolloff from taper_start*z_radius to z_radius. */
  double taper(double r) const;
};

}  // namespace crlab
