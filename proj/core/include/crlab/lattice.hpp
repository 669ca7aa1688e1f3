#pragma once

#include <functional>
#include <vector>

#include "crlab/geometry.hpp"

namespace crlab {

/**
 * Parameters of the truncated rescaled lattice Z^2_L. L is restricted to
 * positive integers so that resonance tests run in exact integer arithmetic
 * on the scaled indices k = L*K.
 */
struct LatticeParams {
  int L = 1;             // box size; lattice spacing 1/L
  double cutoff = 4.0;   // sequences are zero beyond |K| > cutoff
  double sigma = 2.5;    // weight exponent of X^sigma_L

  void validate(bool need_log = false) const;
  // largest |k| component that can lie in the cutoff ball
  std::int64_t kmax() const;
  bool in_ball(IVec2 k) const;
  DVec2 to_K(IVec2 k) const {
    return {static_cast<double>(k.x) / L, static_cast<double>(k.y) / L};
  }
};

/**
 * Complex sequence {a_K} on the truncated lattice, stored densely on the
 * window [-kmax, kmax]^2 of scaled indices. Entries outside the cutoff ball
 * are identically zero.
 */
class LatticeField {
 public:
  LatticeField() = default;
  explicit LatticeField(LatticeParams p);

  const LatticeParams& params() const { return params_; }
  std::int64_t kmax() const { return kmax_; }

  Cplx at(IVec2 k) const {
    if (std::llabs(k.x) > kmax_ || std::llabs(k.y) > kmax_) return {};
    return values_[index(k)];
  }
  void set(IVec2 k, Cplx v);

  /** Fills a_K = f(K) for every lattice point of the cutoff ball. */
  static LatticeField trace_of(LatticeParams p,
                               const std::function<Cplx(DVec2)>& f);

  /** Visits every (k, a_k) with a well-defined storage slot. */
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::int64_t ky = -kmax_; ky <= kmax_; ++ky)
      for (std::int64_t kx = -kmax_; kx <= kmax_; ++kx) {
        IVec2 k{kx, ky};
        fn(k, values_[index(k)]);
      }
  }

  std::vector<Cplx>& raw() { return values_; }
  const std::vector<Cplx>& raw() const { return values_; }
  std::size_t index(IVec2 k) const {
    return static_cast<std::size_t>((k.y + kmax_) * (2 * kmax_ + 1) +
                                    (k.x + kmax_));
  }

  /** l^2_L mass: L^{-2} sum |a_K|^2. */
  double l2_mass() const;

 private:
  LatticeParams params_;
  std::int64_t kmax_ = 0;
  std::vector<Cplx> values_;
};

/** sup over stored K of <K>^sigma |a_K|. */
double x_sigma_norm_lattice(const LatticeField& a, double sigma);

/** Same norm for the difference a - b (fields must share params). */
double x_sigma_dist_lattice(const LatticeField& a, const LatticeField& b,
                            double sigma);

}  // namespace crlab
