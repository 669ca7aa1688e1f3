#include "crlab/rs.hpp"

#include <cmath>

namespace crlab {

namespace {

LatticeField tl(const LatticeField& b, const RsOptions& opt) {
  return opt.fast ? t_l_apply_fast(b, b, b, opt.fopt) : t_l_apply(b, b, b);
}

}  // namespace

LatticeField rs_evolve(const LatticeField& b0, double eps, double t_final,
                       const RsOptions& opt) {
  // dt on the nonlinear scale: the RHS has size ~ eps^2 ||b||^3
  int steps = opt.steps > 0
                  ? opt.steps
                  : std::max(1, static_cast<int>(std::ceil(
                                    t_final * eps * eps / 0.02)));
  double dt = t_final / steps;
  double e2 = eps * eps;
  LatticeField b = b0;
  auto axpy = [](const LatticeField& x, double a, const LatticeField& y) {
    LatticeField r = x;
    for (std::size_t i = 0; i < r.raw().size(); ++i) r.raw()[i] += a * y.raw()[i];
    return r;
  };
  for (int s = 0; s < steps; ++s) {
    LatticeField k1 = tl(b, opt);
    for (Cplx& z : k1.raw()) z *= Cplx(0.0, e2);
    LatticeField k2 = tl(axpy(b, 0.5 * dt, k1), opt);
    for (Cplx& z : k2.raw()) z *= Cplx(0.0, e2);
    LatticeField k3 = tl(axpy(b, 0.5 * dt, k2), opt);
    for (Cplx& z : k3.raw()) z *= Cplx(0.0, e2);
    LatticeField k4 = tl(axpy(b, dt, k3), opt);
    for (Cplx& z : k4.raw()) z *= Cplx(0.0, e2);
    for (std::size_t i = 0; i < b.raw().size(); ++i)
      b.raw()[i] += dt / 6.0 *
                    (k1.raw()[i] + 2.0 * (k2.raw()[i] + k3.raw()[i]) + k4.raw()[i]);
  }
  return b;
}

double rs_hamiltonian(const LatticeField& b, bool fast) {
  RsOptions opt;
  opt.fast = fast;
  LatticeField t = tl(b, opt);
  Cplx acc{};
  b.for_each([&](IVec2 k, Cplx v) { acc += t.at(k) * std::conj(v); });
  return 0.25 * acc.real();
}

}  // namespace crlab
