#include "crlab/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace crlab {

void LatticeParams::validate(bool need_log) const {
  if (L < 1) throw std::invalid_argument("LatticeParams: L must be a positive integer");
  if (cutoff <= 0.0) throw std::invalid_argument("LatticeParams: cutoff must be > 0");
  if (need_log && L <= 1)
    throw std::invalid_argument("LatticeParams: L > 1 required (log L normalization)");
}

std::int64_t LatticeParams::kmax() const {
  return static_cast<std::int64_t>(std::floor(cutoff * L + 1e-9));
}

bool LatticeParams::in_ball(IVec2 k) const {
  double r2max = cutoff * cutoff * static_cast<double>(L) * L;
  return static_cast<double>(k.norm2()) <= r2max + 1e-9;
}

LatticeField::LatticeField(LatticeParams p) : params_(p), kmax_(p.kmax()) {
  params_.validate();
  std::size_t side = static_cast<std::size_t>(2 * kmax_ + 1);
  values_.assign(side * side, Cplx{});
}

void LatticeField::set(IVec2 k, Cplx v) {
  if (std::llabs(k.x) > kmax_ || std::llabs(k.y) > kmax_ ||
      !params_.in_ball(k))
    throw std::out_of_range("LatticeField::set: index outside cutoff ball");
  values_[index(k)] = v;
}

LatticeField LatticeField::trace_of(LatticeParams p,
                                    const std::function<Cplx(DVec2)>& f) {
  LatticeField a(p);
  for (std::int64_t ky = -a.kmax_; ky <= a.kmax_; ++ky)
    for (std::int64_t kx = -a.kmax_; kx <= a.kmax_; ++kx) {
      IVec2 k{kx, ky};
      if (!p.in_ball(k)) continue;
      a.values_[a.index(k)] = f(p.to_K(k));
    }
  return a;
}

double LatticeField::l2_mass() const {
  double s = 0.0;
  for (const Cplx& v : values_) s += std::norm(v);
  return s / (static_cast<double>(params_.L) * params_.L);
}

double x_sigma_norm_lattice(const LatticeField& a, double sigma) {
  double best = 0.0;
  a.for_each([&](IVec2 k, Cplx v) {
    double m = std::abs(v);
    if (m == 0.0) return;
    DVec2 K = a.params().to_K(k);
    double w = std::pow(1.0 + K.norm2(), 0.5 * sigma);
    best = std::max(best, w * m);
  });
  return best;
}

double x_sigma_dist_lattice(const LatticeField& a, const LatticeField& b,
                            double sigma) {
  if (a.params().L != b.params().L || a.kmax() != b.kmax())
    throw std::invalid_argument("x_sigma_dist_lattice: mismatched lattices");
  double best = 0.0;
  a.for_each([&](IVec2 k, Cplx v) {
    double m = std::abs(v - b.at(k));
    if (m == 0.0) return;
    DVec2 K = a.params().to_K(k);
    best = std::max(best, std::pow(1.0 + K.norm2(), 0.5 * sigma) * m);
  });
  return best;
}

}  // namespace crlab
