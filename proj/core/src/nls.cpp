#include "crlab/nls.hpp"

#include <cmath>
#include <stdexcept>

#include "crlab/spectral.hpp"

namespace crlab {

void NlsConfig::validate() const {
  if (L < 2) throw std::invalid_argument("NlsConfig: L must be >= 2");
  if (eps <= 0.0) throw std::invalid_argument("NlsConfig: eps must be > 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("NlsConfig: sign is +-1");
  if (modes < 1) throw std::invalid_argument("NlsConfig: modes must be >= 1");
}

double NlsConfig::t_star() const {
  validate();
  return kZeta2 * L * L / (2.0 * eps * eps * std::log(double(L)));
}

int next_smooth(int n) {
  for (int m = n;; ++m) {
    int r = m;
    for (int p : {2, 3, 5})
      while (r % p == 0) r /= p;
    if (r == 1) return m;
  }
}

SplitStepper::SplitStepper(const NlsConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  pad_ = next_smooth((3 * side() + 1) / 2);
  lin_phase_.resize(static_cast<std::size_t>(side()) * side());
  for (std::int64_t ky = -cfg_.modes; ky <= cfg_.modes; ++ky)
    for (std::int64_t kx = -cfg_.modes; kx <= cfg_.modes; ++kx) {
      double K2 = double(kx * kx + ky * ky) / (double(cfg_.L) * cfg_.L);
      lin_phase_[static_cast<std::size_t>((ky + cfg_.modes) * side() + kx +
                                          cfg_.modes)] = 4.0 * kPi * kPi * K2;
    }
}

SplitStepper::State SplitStepper::from_profile(
    const std::function<Cplx(DVec2)>& g0) const {
  State a(static_cast<std::size_t>(side()) * side());
  for (std::int64_t ky = -cfg_.modes; ky <= cfg_.modes; ++ky)
    for (std::int64_t kx = -cfg_.modes; kx <= cfg_.modes; ++kx)
      at(a, kx, ky) = g0({double(kx) / cfg_.L, double(ky) / cfg_.L});
  return a;
}

void SplitStepper::step(State& a, double dt) const {
  auto linear = [&](double tau) {
    for (std::size_t i = 0; i < a.size(); ++i)
      a[i] *= std::polar(1.0, lin_phase_[i] * tau);
  };
  linear(0.5 * dt);
  // nonlinear substep on the padded grid
  std::vector<Cplx> grid(static_cast<std::size_t>(pad_) * pad_, Cplx{});
  for (std::int64_t ky = -cfg_.modes; ky <= cfg_.modes; ++ky)
    for (std::int64_t kx = -cfg_.modes; kx <= cfg_.modes; ++kx) {
      int bx = static_cast<int>((kx % pad_ + pad_) % pad_);
      int by = static_cast<int>((ky % pad_ + pad_) % pad_);
      grid[static_cast<std::size_t>(by) * pad_ + bx] = get(a, kx, ky);
    }
  fft2_inverse(grid, pad_);  // u(x_p) * L^2
  double inv_l2 = 1.0 / (double(cfg_.L) * cfg_.L);
  double coef = cfg_.sign * cfg_.eps * cfg_.eps * dt;
  for (Cplx& z : grid) {
    Cplx u = z * inv_l2;
    z = u * std::polar(1.0, coef * std::norm(u));
  }
  fft2_forward(grid, pad_);
  double scale = double(cfg_.L) * cfg_.L / (double(pad_) * pad_);
  for (std::int64_t ky = -cfg_.modes; ky <= cfg_.modes; ++ky)
    for (std::int64_t kx = -cfg_.modes; kx <= cfg_.modes; ++kx) {
      int bx = static_cast<int>((kx % pad_ + pad_) % pad_);
      int by = static_cast<int>((ky % pad_ + pad_) % pad_);
      at(a, kx, ky) = grid[static_cast<std::size_t>(by) * pad_ + bx] * scale;
    }
  linear(0.5 * dt);
}

double SplitStepper::l2_mass(const State& a) const {
  double s = 0.0;
  for (const Cplx& z : a) s += std::norm(z);
  return s / (double(cfg_.L) * cfg_.L);
}

SplitStepper::State SplitStepper::interaction_profile(const State& a,
                                                      double t) const {
  State out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] *= std::polar(1.0, -lin_phase_[i] * t);
  return out;
}

double SplitStepper::alias_fraction(const State& a) const {
  // mass within the outer quarter of the mode window, relative to total
  double outer = 0.0, total = 0.0;
  for (std::int64_t ky = -cfg_.modes; ky <= cfg_.modes; ++ky)
    for (std::int64_t kx = -cfg_.modes; kx <= cfg_.modes; ++kx) {
      double m = std::norm(get(a, kx, ky));
      total += m;
      if (std::llabs(kx) > 3 * cfg_.modes / 4 || std::llabs(ky) > 3 * cfg_.modes / 4)
        outer += m;
    }
  return total > 0.0 ? outer / total : 0.0;
}

LatticeField SplitStepper::to_lattice(const State& a, double cutoff,
                                      double sigma) const {
  LatticeParams p{cfg_.L, cutoff, sigma};
  LatticeField f(p);
  std::int64_t R = p.kmax();
  for (std::int64_t ky = -R; ky <= R; ++ky)
    for (std::int64_t kx = -R; kx <= R; ++kx) {
      IVec2 k{kx, ky};
      if (!p.in_ball(k)) continue;
      f.set(k, get(a, kx, ky));
    }
  return f;
}

double plane_wave_rate(const NlsConfig& cfg, DVec2 K, double amplitude) {
  return 4.0 * kPi * kPi * K.norm2() +
         cfg.sign * cfg.eps * cfg.eps * amplitude * amplitude;
}

}  // namespace crlab
