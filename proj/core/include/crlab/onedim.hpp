#pragma once

#include <functional>
#include <vector>

#include "crlab/geometry.hpp"

namespace crlab {

/** Samples of a 1D profile on the lattice Z_L, k in [-m, m]. */
struct Line1DField {
  int L = 16;
  int m = 0;
  std::vector<Cplx> v;  // index k + m

  Cplx at(std::int64_t k) const {
    return (std::llabs(k) > m) ? Cplx{} : v[static_cast<std::size_t>(k + m)];
  }
  static Line1DField trace_of(int L, int m, const std::function<Cplx(double)>& g0);
};

/** Closed form of the 1D continuum limit: g(t,xi) = g0(xi) e^{i t |g0|^2}. */
std::vector<Cplx> onedim_exact(const std::vector<Cplx>& g0, double t);

/**
 * Gauged per-mode resonant flow -i dc/dt = eps^2 |c|^2 c (the sign chain
 * fixed by forcing the closed form above in the continuum limit); closed
 * form by default, RK4 when closed_form = false for cross-checks.
 */
std::vector<Cplx> onedim_resonant_evolve(const std::vector<Cplx>& c0, double eps,
                                         double t, bool closed_form = true);

struct OnedimPipelinePoint {
  int L = 0;
  double err = 0.0;        // sup_K |c_K(t_b) - exact|
  double mass_drift = 0.0;
};

/**
 * End-to-end oracle: evolve the focusing 1D split-step NLS on T_L with data
 * g0(K), unwind the linear phases and the e^{2 i eps^2 L ||u||^2 t} gauge,
 * and compare against the closed form at the rescaled time. The gap decays
 * as L grows at fixed (eps, t_b).
 */
OnedimPipelinePoint onedim_pipeline(const std::function<Cplx(double)>& g0,
                                    int L, double kmax_phys, double eps,
                                    double t_bassan, double dt_box);

}  // namespace crlab
