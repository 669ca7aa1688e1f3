#pragma once

#include <string>

#include "crlab/hermite.hpp"

namespace crlab {

/**
 * Galerkin restriction of the resonant flow to one eigenspace E_{2k} of the
 * harmonic oscillator. On a single eigenspace the operator collapses to
 * pi^2 times the projected pointwise product, so the coupling tensor is
 * Gamma[a][b][c][d] = int e_a e_b e_c e_d (real basis) and the flow is
 *   dc_i/dt = i pi^2 sum Gamma[a][b][c][i] c_a conj(c_b) c_c.
 */
class EigenspaceFlow {
 public:
  /** Builds (or loads from cache_dir, when nonempty) the coupling tensor. */
  static EigenspaceFlow build(int level, const std::string& cache_dir = "");

  int level() const { return level_; }
  int dim() const { return dim_; }
  double gamma(int a, int b, int c, int d) const {
    return gamma_[((static_cast<std::size_t>(a) * dim_ + b) * dim_ + c) * dim_ + d];
  }

  std::vector<Cplx> rhs(const std::vector<Cplx>& c) const;
  std::vector<Cplx> flow(std::vector<Cplx> c0, double t_final, double dt) const;

 private:
  int level_ = 2, dim_ = 1;
  std::vector<double> gamma_;
};

}  // namespace crlab
