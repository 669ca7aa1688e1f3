#pragma once

#include <memory>

#include "crlab/hermite.hpp"

namespace crlab {

struct LensParams {
  int s_nodes = 24;       // midpoint nodes over one period of the s-integral
  int hermite_band = -1;  // per-axis Hermite cap; -1 = grid-derived
};

/**
 * The operator T(g,g,g) in its free-propagation form
 *   T(g,g,g) = 2 pi  int_R e^{-it Lap} [ |e^{it Lap} g|^2 e^{it Lap} g ] dt,
 * compactified by the lens change of variables into one period of the
 * harmonic-oscillator flow,
 *   T(g,g,g) = 2 pi int_{-pi/4}^{pi/4} e^{-isH} [ |e^{isH} g|^2 e^{isH} g ] ds,
 * H = -Lap + |x|^2. The s-integrand is exactly (pi/2)-periodic, so the
 * midpoint rule is spectrally exact on the Hermite band; the semi-discrete
 * flow driven by this operator is a finite-dimensional Hamiltonian system
 * that conserves mass and its own Hamiltonian up to roundoff.
 */
class LensOperator {
 public:
  LensOperator(double box_half, int n, LensParams lp = {});

  const HermiteTransform& transform() const { return ht_; }
  int s_nodes() const { return lp_.s_nodes; }

  /** T(g,g,g) in coefficient space. */
  std::vector<Cplx> apply_coeffs(const std::vector<Cplx>& c) const;

  /** Grid-level convenience: analyze, apply, synthesize. */
  GridField apply(const GridField& g) const;

 private:
  LensParams lp_;
  HermiteTransform ht_;
};

}  // namespace crlab
