#pragma once

#include <vector>

#include "crlab/grid_field.hpp"

namespace crlab {

/** Orthonormal Hermite function values h_a(x), a = 0..M, at the given points. */
std::vector<double> hermite_values(int M, const std::vector<double>& xs);

/** Single-point synthesis of a 1D Hermite series (stable recurrence). */
void hermite_point(int M, double x, double* out);

/**
 * Analysis/synthesis between a GridField and the tensor Hermite basis
 * h_a(x) h_b(y), 0 <= a,b <= M. The grid quadrature is spectrally accurate
 * for fields resolved by the grid, and M is capped so that sqrt(2M+1) stays
 * inside both the box and the grid Nyquist frequency.
 */
class HermiteTransform {
 public:
  HermiteTransform(double box_half, int n, int M = -1);  // M = -1: auto cap

  int M() const { return M_; }
  int n() const { return n_; }
  double box_half() const { return box_half_; }

  std::vector<Cplx> analyze(const GridField& f) const;      // (M+1)^2 coeffs
  GridField synthesize(const std::vector<Cplx>& c) const;
  void write_grid(const std::vector<Cplx>& c, GridField& out) const;

  /** Coefficient mass fraction carried by the band edge a+b >= M. */
  double edge_fraction(const std::vector<Cplx>& c) const;

  /** Multiplies coefficients by e^{i s lambda_ab}, lambda_ab = 2(a+b)+2. */
  void oscillator_phase(std::vector<Cplx>& c, double s) const;

  /** Synthesis on an arbitrary rectangle of points (outer product grid). */
  std::vector<Cplx> synthesize_points(const std::vector<Cplx>& c,
                                      const std::vector<double>& xs,
                                      const std::vector<double>& ys) const;

 private:
  double box_half_;
  int n_, M_;
  std::vector<double> table_;  // h_a(x_i), (M+1) x n
};

/**
 * State on one eigenspace E_{2k} of -Laplace + |x|^2 (dimension k), in the
 * tensor basis {h_a(x) h_b(y): a+b = k-1} ordered by a descending, so the
 * x1-type profile of E_4 is (1, 0).
 */
struct HermiteState {
  int level = 2;  // eigenvalue 2k
  std::vector<Cplx> coeffs;
};

HermiteState hermite_project(const GridField& g, int level,
                             const HermiteTransform& ht);
GridField hermite_lift(const HermiteState& st, const HermiteTransform& ht);

}  // namespace crlab
