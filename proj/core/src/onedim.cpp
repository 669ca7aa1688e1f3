#include "crlab/onedim.hpp"

#include <cmath>
#include <stdexcept>

#include "crlab/nls.hpp"
#include "crlab/spectral.hpp"

namespace crlab {

Line1DField Line1DField::trace_of(int L, int m,
                                  const std::function<Cplx(double)>& g0) {
  Line1DField f;
  f.L = L;
  f.m = m;
  f.v.resize(static_cast<std::size_t>(2 * m + 1));
  for (std::int64_t k = -m; k <= m; ++k)
    f.v[static_cast<std::size_t>(k + m)] = g0(double(k) / L);
  return f;
}

std::vector<Cplx> onedim_exact(const std::vector<Cplx>& g0, double t) {
  std::vector<Cplx> out(g0.size());
  for (std::size_t i = 0; i < g0.size(); ++i)
    out[i] = g0[i] * std::polar(1.0, t * std::norm(g0[i]));
  return out;
}

std::vector<Cplx> onedim_resonant_evolve(const std::vector<Cplx>& c0, double eps,
                                         double t, bool closed_form) {
  double e2 = eps * eps;
  if (closed_form) return onedim_exact(c0, e2 * t);
  // decoupled modes: RK4 per mode of dc/dt = i eps^2 |c|^2 c
  std::vector<Cplx> c = c0;
  long nsteps = std::max(1L, std::lround(t * std::max(e2, 1e-12) / 1e-3));
  double dt = t / nsteps;
  auto rhs = [&](Cplx z) { return Cplx(0.0, e2) * std::norm(z) * z; };
  for (long s = 0; s < nsteps; ++s)
    for (Cplx& z : c) {
      Cplx k1 = rhs(z);
      Cplx k2 = rhs(z + 0.5 * dt * k1);
      Cplx k3 = rhs(z + 0.5 * dt * k2);
      Cplx k4 = rhs(z + dt * k3);
      z += dt / 6.0 * (k1 + 2.0 * (k2 + k3) + k4);
    }
  return c;
}

OnedimPipelinePoint onedim_pipeline(const std::function<Cplx(double)>& g0,
                                    int L, double kmax_phys, double eps,
                                    double t_bassan, double dt_box) {
  int m = static_cast<int>(std::ceil(kmax_phys * L));
  int pad = next_smooth(3 * (2 * m + 1) / 2);
  std::vector<Cplx> a(static_cast<std::size_t>(2 * m + 1));
  for (std::int64_t k = -m; k <= m; ++k)
    a[static_cast<std::size_t>(k + m)] = g0(double(k) / L);
  double mass0 = 0.0;
  for (const Cplx& z : a) mass0 += std::norm(z);
  mass0 /= L;

  // focusing sign: the resonant branch then matches g0 e^{+i t |g0|^2}
  double t_box = t_bassan * double(L) * L;
  long nsteps = std::max(1L, std::lround(t_box / dt_box));
  double dt = t_box / nsteps;
  std::vector<Cplx> grid(static_cast<std::size_t>(pad));
  double e2 = eps * eps;
  for (long s = 0; s < nsteps; ++s) {
    // Strang: half linear, cubic phase on the padded grid, half linear
    for (std::int64_t k = -m; k <= m; ++k)
      a[static_cast<std::size_t>(k + m)] *= std::polar(
          1.0, 4.0 * kPi * kPi * double(k * k) / (double(L) * L) * 0.5 * dt);
    std::fill(grid.begin(), grid.end(), Cplx{});
    for (std::int64_t k = -m; k <= m; ++k)
      grid[static_cast<std::size_t>((k % pad + pad) % pad)] =
          a[static_cast<std::size_t>(k + m)];
    fft1_inverse(grid);
    for (Cplx& z : grid) {
      Cplx u = z / double(L);
      z = u * std::polar(1.0, -e2 * dt * std::norm(u));  // focusing
    }
    fft1_forward(grid);
    double scale = double(L) / pad;
    for (std::int64_t k = -m; k <= m; ++k)
      a[static_cast<std::size_t>(k + m)] =
          grid[static_cast<std::size_t>((k % pad + pad) % pad)] * scale;
    for (std::int64_t k = -m; k <= m; ++k)
      a[static_cast<std::size_t>(k + m)] *= std::polar(
          1.0, 4.0 * kPi * kPi * double(k * k) / (double(L) * L) * 0.5 * dt);
  }
  double mass1 = 0.0;
  for (const Cplx& z : a) mass1 += std::norm(z);
  mass1 /= L;

  // unwind: interaction picture, then the mass gauge c = b e^{2 i eps^2 L M t}
  OnedimPipelinePoint pt;
  pt.L = L;
  pt.mass_drift = std::fabs(mass1 - mass0) / mass0;
  double gauge = 2.0 * e2 * double(L) * mass0 * t_bassan;
  double err = 0.0;
  for (std::int64_t k = -m; k <= m; ++k) {
    Cplx ak = a[static_cast<std::size_t>(k + m)];
    Cplx b = ak * std::polar(1.0, -4.0 * kPi * kPi * double(k * k) /
                                      (double(L) * L) * t_box);
    Cplx c = b * std::polar(1.0, gauge);
    Cplx g0k = g0(double(k) / L);
    Cplx exact = g0k * std::polar(1.0, e2 * t_bassan * std::norm(g0k));
    err = std::max(err, std::abs(c - exact));
  }
  pt.err = err;
  return pt;
}

}  // namespace crlab
