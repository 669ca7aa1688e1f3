#pragma once

#include "crlab/lattice.hpp"

namespace crlab {

/**
 * Normalized resonant trilinear operator
 *   T_L(e,f,g)(K) = zeta(2)/(2 L^2 log L) * sum_{R(K)} e_{K1} conj(f_{K2}) g_{K3},
 * degenerate tuples included. Exact truncated sum over tuples with K1, K3
 * in the cutoff ball (K2 falls where it falls; the fields vanish outside).
 * Requires L > 1 and all three fields on the same lattice.
 */
LatticeField t_l_apply(const LatticeField& e, const LatticeField& f,
                       const LatticeField& g);

/**
 * T_L(G,G,G)(K) for the trace of the mass-one Gaussian, without cutoff
 * truncation. The (alpha,beta) sums factor into 1D theta sums per visible
 * direction, so the value is exact up to ~1e-12; cost is O(L^2) per point.
 * Used for the large-L convergence and boundedness scans where tuple
 * enumeration is far out of reach.
 */
double tl_gaussian_trace(const LatticeParams& p, DVec2 K);

struct TlFastOptions {
  // directions with |j| <= j_split_frac*L are summed in closed form via
  // Poisson summation of the interpolated trace; the rest directly
  double j_split_frac = 0.5;
  int angles = 64;          // theta grid for the direction-integral field
  double quad_step = 0.2;   // s-step of the rotated-frame integrals
  double out_step = 0.1;    // (p,q) output grid step
};

/**
 * Hybrid evaluation of T_L for fields that are smooth decaying traces:
 * exact direct sums for sparse (large-|j|) directions, Poisson-summed
 * rotated-frame integrals for the dense small-|j| directions where the
 * lattice sum equals the integral to spectral accuracy. Cross-validated
 * against t_l_apply in the test suite.
 */
LatticeField t_l_apply_fast(const LatticeField& e, const LatticeField& f,
                            const LatticeField& g, const TlFastOptions& opt = {});

/**
 * Periodic Strichartz sum  sum_K sum_{R(K)} phi(K1) conj(phi(K2)) phi(K3)
 * conj(phi(K)) on Z^2 (unit lattice semantics), equal to the fourth power
 * of the L^4 norm of e^{it Laplace} phi over one period. phi must be
 * supported in |k| <= 2N.
 */
double strichartz_sum(const LatticeField& phi_hat, int N);

}  // namespace crlab
