#pragma once

#include "crlab/cr_rhs.hpp"
#include "crlab/grid_field.hpp"
#include "crlab/quadrature.hpp"

namespace crlab {

/** H(f) = (1/4) Re <T(f,f,f), f> via the quadrature operator and the grid
 *  inner product. */
double hamiltonian_quadruple(const GridField& f, const QuadratureSpec& quad);

/** Same contraction given a precomputed T(f,f,f). */
double hamiltonian_from_t(const GridField& f, const GridField& tf);

/**
 * Manifestly nonnegative form
 *   H(f) = (1/16) int_{S^1} int int | int f(u w + s w~) conj(f(t w + s w~)) ds |^2 du dt dw
 * evaluated with a trapezoidal angle grid and uniform (u,s,t) grids.
 */
double hamiltonian_sphere_form(const GridField& f, int angle_nodes);

struct StrichartzFormResult {
  double value = 0.0;
  double tail_estimate = 0.0;  // bound on the discarded time tail
  bool tail_warning = false;
};

/**
 * H(f) = (pi/2) int_R || e^{it Lap} fhat ||_{L^4}^4 dt. The time line is
 * compactified by the lens change of variables (one harmonic-oscillator
 * period), so the full integral is computed on a finite window; passing a
 * finite time_window truncates |t| <= T and reports the tail estimate
 * ~ 1/(8T) * mass^2, with a warning when it exceeds tail_tol * value.
 */
StrichartzFormResult hamiltonian_strichartz_form(const GridField& f,
                                                 double time_window,
                                                 int time_nodes,
                                                 double tail_tol = 1e-2);

/** Time series entry of the conserved functionals. */
struct ConservedLedger {
  double mass = 0.0;
  DVec2 momentum{};
  DVec2 position{};
  double first_moment = 0.0;
  double kinetic = 0.0;
  double angular = 0.0;
  double hamiltonian = 0.0;

  /** mass >= 0, H >= -tol, H <= (pi/8) mass^2 + tol. */
  bool valid(double tol) const;
};

/** All seven functionals; H from the supplied T(f,f,f) field. */
ConservedLedger conserved(const GridField& f, const GridField& tf);

/** Convenience: H via the lens operator on f's geometry. */
ConservedLedger conserved(const GridField& f);

}  // namespace crlab
