#pragma once

#include <optional>

#include "crlab/hamiltonian.hpp"

namespace crlab {

/**
 * RK4 time stepping of the continuous resonant flow dg/dt = i T(g,g,g).
 * The right-hand side is evaluated either through the lens/propagator form
 * (default: exactly Hamiltonian on the Hermite band, so conservation drift
 * is pure time-discretization) or through the (z, lambda) quadrature
 * operator for cross-validation.
 */
enum class RhsKind { lens, quadrature };

struct Integrator {
  double dt = 0.02;
  int ledger_every = 10;      // steps between ledger samples
  int snapshot_every = 0;     // 0 = endpoints only
  RhsKind rhs = RhsKind::lens;
  LensParams lens;
  QuadratureSpec quad = QuadratureSpec::refined();
  double mass_guard = 0.0;    // 0 = auto: 10 * dt^5 relative
};

struct LedgerSample {
  double t = 0.0;
  ConservedLedger ledger;
};

struct Trajectory {
  std::vector<double> times;           // snapshot times
  std::vector<GridField> snapshots;
  std::vector<LedgerSample> ledger;
  double hermite_edge_fraction = 0.0;  // band-tail of the initial datum
};

class CrFlow {
 public:
  CrFlow(double box_half, int n, Integrator integ);

  const Integrator& config() const { return integ_; }
  const LensOperator& lens() const { return lens_; }

  /** T(g,g,g) by the configured route. */
  GridField rhs_t(const GridField& g) const;

  /** One RK4 step (rejects on mass-guard violation). */
  GridField step(const GridField& g) const;

  Trajectory evolve(const GridField& g0, double t_final) const;

  /**
   * Evolves g0 and fourier(g0) independently and returns
   * ||F(g(t)) - ghat(t)||_{L^2} on the dual grid.
   */
  double fourier_commutation_check(const GridField& g0, double t_final) const;

 private:
  std::vector<Cplx> rhs_coeffs(const std::vector<Cplx>& c) const;
  Integrator integ_;
  LensOperator lens_;
};

}  // namespace crlab
