#include "crlab/hamiltonian.hpp"

#include <cmath>

#include "crlab/parallel.hpp"
#include "crlab/spectral.hpp"
#include "crlab/t_operator.hpp"

namespace crlab {

double hamiltonian_from_t(const GridField& f, const GridField& tf) {
  return 0.25 * tf.inner(f).real();
}

double hamiltonian_quadruple(const GridField& f, const QuadratureSpec& quad) {
  GridField tf = t_apply_field(f, f, f, quad);
  return hamiltonian_from_t(f, tf);
}

double hamiltonian_sphere_form(const GridField& f, int angle_nodes) {
  // integrand is pi-periodic in the angle, so integrate [0, pi) and double
  const double S = f.box_half();
  const int nu = f.n();  // reuse grid resolution for the rotated lines
  const double du = 2.0 * S / nu;
  double total = 0.0;
  std::vector<double> per_angle(static_cast<std::size_t>(angle_nodes), 0.0);
  parallel_for(static_cast<std::size_t>(angle_nodes), [&](std::size_t ia) {
    double th = kPi * static_cast<double>(ia) / angle_nodes;
    double wx = std::cos(th), wy = std::sin(th);
    // F[u][s] = f(u w + s w_perp)
    std::vector<Cplx> F(static_cast<std::size_t>(nu) * nu);
    for (int iu = 0; iu < nu; ++iu) {
      double u = -S + iu * du;
      for (int is = 0; is < nu; ++is) {
        double s = -S + is * du;
        F[static_cast<std::size_t>(iu) * nu + is] =
            f.eval({u * wx - s * wy, u * wy + s * wx});
      }
    }
    // C[u][t] = int F(u,s) conj(F(t,s)) ds ; accumulate |C|^2 du dt
    double acc = 0.0;
    for (int iu = 0; iu < nu; ++iu)
      for (int it = 0; it <= iu; ++it) {
        Cplx c{};
        const Cplx* ru = &F[static_cast<std::size_t>(iu) * nu];
        const Cplx* rt = &F[static_cast<std::size_t>(it) * nu];
        for (int is = 0; is < nu; ++is) c += ru[is] * std::conj(rt[is]);
        double term = std::norm(c) * du * du;
        acc += (it == iu) ? term : 2.0 * term;  // |C(u,t)| = |C(t,u)|
      }
    per_angle[ia] = acc * du * du;
  });
  for (double v : per_angle) total += v;
  total *= 2.0 * kPi / angle_nodes;  // angle measure, doubled half-circle
  return total / 16.0;
}

StrichartzFormResult hamiltonian_strichartz_form(const GridField& f,
                                                 double time_window,
                                                 int time_nodes,
                                                 double tail_tol) {
  StrichartzFormResult res;
  GridField fh = fourier(f);
  HermiteTransform ht(fh.box_half(), fh.n());
  std::vector<Cplx> c0 = ht.analyze(fh);
  // lens compactification: t in R  <->  s in (-pi/4, pi/4),  s = atan(2t)/2,
  // and || e^{it Lap} g ||_4^4 dt = || e^{isH} g ||_4^4 ds
  double smax = std::isfinite(time_window)
                    ? 0.5 * std::atan(2.0 * time_window)
                    : kPi / 4.0;
  double h2 = fh.h() * fh.h();
  std::vector<double> vals(static_cast<std::size_t>(time_nodes), 0.0);
  parallel_for(static_cast<std::size_t>(time_nodes), [&](std::size_t j) {
    double s = -smax + (static_cast<double>(j) + 0.5) * (2.0 * smax) / time_nodes;
    std::vector<Cplx> d = c0;
    ht.oscillator_phase(d, s);
    GridField v(ht.box_half(), ht.n());
    ht.write_grid(d, v);
    double l4 = 0.0;
    for (const Cplx& z : v.raw()) l4 += std::norm(z) * std::norm(z);
    vals[j] = l4 * h2;
  });
  double integral = 0.0;
  for (double v : vals) integral += v;
  integral *= 2.0 * smax / time_nodes;
  res.value = 0.5 * kPi * integral;
  if (std::isfinite(time_window)) {
    // the discarded |t| > T band has s-measure (pi/4 - smax) per side;
    // bound its integrand by the window-edge values
    double edge = vals.front() + vals.back();
    res.tail_estimate = 0.5 * kPi * (kPi / 4.0 - smax) * edge;
    res.tail_warning = res.tail_estimate > tail_tol * std::max(res.value, 1e-300);
  }
  return res;
}

bool ConservedLedger::valid(double tol) const {
  if (mass < 0.0) return false;
  if (hamiltonian < -tol) return false;
  return hamiltonian <= kPi / 8.0 * mass * mass + tol;
}

ConservedLedger conserved(const GridField& f, const GridField& tf) {
  ConservedLedger led;
  led.mass = f.l2_mass();
  GridField dx = spectral_dx(f), dy = spectral_dy(f);
  double h2 = f.h() * f.h();
  Cplx ang{};
  int n = f.n();
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      double x = f.coord(ix), y = f.coord(iy);
      Cplx v = f.at(ix, iy), gx = dx.at(ix, iy), gy = dy.at(ix, iy);
      double d = std::norm(v);
      led.position.x += x * d;
      led.position.y += y * d;
      led.first_moment += (x * x + y * y) * d;
      led.kinetic += std::norm(gx) + std::norm(gy);
      led.momentum.x += (Cplx(0, -1) * gx * std::conj(v)).real();
      led.momentum.y += (Cplx(0, -1) * gy * std::conj(v)).real();
      ang += Cplx(0, 1) * (x * gy - y * gx) * std::conj(v);
    }
  led.position.x *= h2;
  led.position.y *= h2;
  led.first_moment *= h2;
  led.kinetic *= h2;
  led.momentum.x *= h2;
  led.momentum.y *= h2;
  led.angular = ang.real() * h2;
  led.hamiltonian = hamiltonian_from_t(f, tf);
  return led;
}

ConservedLedger conserved(const GridField& f) {
  LensOperator lens(f.box_half(), f.n());
  return conserved(f, lens.apply(f));
}

}  // namespace crlab
