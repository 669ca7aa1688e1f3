#pragma once

#include "crlab/tl_operator.hpp"

namespace crlab {

struct RsOptions {
  bool fast = false;  // direct tuple sums by default; hybrid for large L
  TlFastOptions fopt;
  int steps = 0;      // 0 = auto from tau_final
};

/**
 * Resonant system in the rescaled profile time: -i db/dt = eps^2 T_L(b,b,b),
 * integrated by RK4. Matches the continuous resonant solution g(eps^2 t, K)
 * as L grows.
 */
LatticeField rs_evolve(const LatticeField& b0, double eps, double t_final,
                       const RsOptions& opt = {});

/** Discrete Hamiltonian (1/4) Re sum_K T_L(b,b,b)(K) conj(b_K). */
double rs_hamiltonian(const LatticeField& b, bool fast = false);

}  // namespace crlab
