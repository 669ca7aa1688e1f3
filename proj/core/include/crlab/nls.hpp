#pragma once

#include <functional>

#include "crlab/lattice.hpp"

namespace crlab {

/**
 * Pseudo-spectral cubic NLS on the torus of size L,
 *   -i u_t + Lap u = sign * eps^2 |u|^2 u,
 * advanced by Strang splitting with exact per-mode linear phases
 * e^{4 pi^2 i |K|^2 tau} and the exact pointwise cubic phase
 * e^{i sign eps^2 |u|^2 tau}. Both substeps are unitary, so the l2_L mass
 * is conserved to roundoff. The nonlinear substep runs on a 3/2-padded
 * grid; sign = +1 is defocusing (plane-wave phase 4 pi^2 |K|^2 + eps^2|A|^2).
 */
struct NlsConfig {
  int L = 8;
  double eps = 1e-2;
  int sign = +1;
  int modes = 32;       // per-axis Fourier cutoff: |kx|, |ky| <= modes
  double dt_lin = 1e-3; // default splitting step

  void validate() const;
  double t_star() const;  // zeta(2) L^2 / (2 eps^2 log L)
};

/** Smallest 5-smooth integer >= n. */
int next_smooth(int n);

class SplitStepper {
 public:
  using State = std::vector<Cplx>;  // a_k, row-major over [-m, m]^2

  explicit SplitStepper(const NlsConfig& cfg);

  const NlsConfig& config() const { return cfg_; }
  int pad() const { return pad_; }
  int side() const { return 2 * cfg_.modes + 1; }

  Cplx& at(State& a, std::int64_t kx, std::int64_t ky) const {
    return a[static_cast<std::size_t>((ky + cfg_.modes) * side() + kx + cfg_.modes)];
  }
  Cplx get(const State& a, std::int64_t kx, std::int64_t ky) const {
    if (std::llabs(kx) > cfg_.modes || std::llabs(ky) > cfg_.modes) return {};
    return a[static_cast<std::size_t>((ky + cfg_.modes) * side() + kx + cfg_.modes)];
  }

  State from_profile(const std::function<Cplx(DVec2)>& g0) const;  // a_K = g0(K)
  void step(State& a, double dt) const;
  double l2_mass(const State& a) const;  // L^{-2} sum |a_k|^2

  /** interaction profile a~_k(t) = e^{-4 pi^2 i |K|^2 t} a_k(t) */
  State interaction_profile(const State& a, double t) const;

  /** aliasing guard: fraction of padded-grid mass beyond the mode cutoff */
  double alias_fraction(const State& a) const;

  /** copies the state into a LatticeField window |K| <= cutoff */
  LatticeField to_lattice(const State& a, double cutoff, double sigma) const;

 private:
  NlsConfig cfg_;
  int pad_;
  std::vector<double> lin_phase_;  // 4 pi^2 |K|^2 per mode
};

/** plane-wave closed form: phase rate of u = A e^{2 pi i K.x} */
double plane_wave_rate(const NlsConfig& cfg, DVec2 K, double amplitude);

}  // namespace crlab
