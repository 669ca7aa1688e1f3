#pragma once

#include <functional>
#include <vector>

#include "crlab/lattice.hpp"

namespace crlab {

/**
 * One element of the resonant set R(K): a rectangle K1 = K+N1,
 * K2 = K+N1+N3, K3 = K+N3 with N1.N3 = 0. All points are stored as scaled
 * integer indices (k = L*K). For non-degenerate tuples N1 = alpha*J and
 * N3 = beta*J^perp with J the visible direction of N1 (canonical
 * half-plane: first nonzero coordinate positive) and alpha, beta nonzero
 * integers. Degenerate tuples carry alpha = beta = 0 and J = 0.
 */
struct ResonantTuple {
  IVec2 k, k1, k2, k3;
  IVec2 n1, n3;
  std::int64_t alpha = 0, beta = 0;
  IVec2 j;

  // frequency mismatch |K1|^2-|K2|^2+|K3|^2-|K|^2, scaled by L^2 (exact)
  std::int64_t scaled_omega() const {
    return k1.norm2() - k2.norm2() + k3.norm2() - k.norm2();
  }
};

/**
 * Enumerates R(K) inside the truncation: tuples with K1 and K3 in the
 * cutoff ball (K2 = K1+K3-K is unconstrained; fields treat it as zero when
 * it falls outside). Output order is deterministic: the (0,0) tuple, then
 * the N1 = 0 family in lexicographic n3 order, then N3 = 0 in n1 order,
 * then non-degenerate tuples sorted by (alpha, beta, J).
 */
std::vector<ResonantTuple> enumerate_resonant(IVec2 k, const LatticeParams& p,
                                              bool include_degenerate);

/** Streaming form of the above (same order, no materialization). */
void for_each_resonant(IVec2 k, const LatticeParams& p, bool include_degenerate,
                       const std::function<void(const ResonantTuple&)>& fn);

/**
 * Level-set key for R_mu(K): mu is the resonance defect, m = L^2*mu/2 the
 * integer that must exist for the set to be nonempty.
 */
struct LevelSetKey {
  double mu = 0.0;

  /** Integrality test: returns true and sets m iff L^2*mu/2 is an integer. */
  bool scaled_index(int L, std::int64_t& m) const;
};

/**
 * Enumerates R_mu(K) = {(K1,K2,K3) in S(K): Omega = mu} with K1, K3 in the
 * cutoff ball; empty when L^2*mu/2 is not an integer.
 */
std::vector<ResonantTuple> enumerate_level_set(IVec2 k, const LevelSetKey& key,
                                               const LatticeParams& p);

}  // namespace crlab
