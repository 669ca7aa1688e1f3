#include "crlab/t_operator.hpp"

#include <cmath>

#include "crlab/parallel.hpp"

namespace crlab {

Cplx t_apply(const GridField& f, const GridField& g, const GridField& h,
             DVec2 at, const QuadratureSpec& quad) {
  quad.validate();
  const GlRule& zr = gauss_legendre(quad.z_nodes);
  const GlRule& lr = gauss_legendre(quad.lambda_nodes);
  const double Rz = quad.z_radius;
  const double excl = std::max({f.pv_exclusion, g.pv_exclusion, h.pv_exclusion});

  Cplx acc{};
  for (int il = 0; il < quad.lambda_nodes; ++il) {
    double lam = lr.x[il], wl = lr.w[il];
    Cplx zacc{};
    for (int iz = 0; iz < quad.z_nodes; ++iz) {
      double zx = Rz * zr.x[iz];
      double wzx = Rz * zr.w[iz];
      for (int jz = 0; jz < quad.z_nodes; ++jz) {
        double zy = Rz * zr.x[jz];
        double r = std::sqrt(zx * zx + zy * zy);
        double tap = quad.taper(r);
        if (tap == 0.0) continue;
        // z_perp = (-zy, zx)
        DVec2 a1{at.x + zx, at.y + zy};
        DVec2 a3{at.x - lam * zy, at.y + lam * zx};
        DVec2 a2{a1.x - lam * zy, a1.y + lam * zx};
        if (excl > 0.0 &&
            (a1.norm2() < excl * excl || a2.norm2() < excl * excl ||
             a3.norm2() < excl * excl))
          continue;
        Cplx val = f.eval(a1) * std::conj(g.eval(a2)) * h.eval(a3);
        zacc += (wzx * Rz * zr.w[jz] * tap) * val;
      }
    }
    acc += wl * zacc;
  }
  return acc;
}

GridField t_apply_field(const GridField& f, const GridField& g,
                        const GridField& h, const QuadratureSpec& quad) {
  GridField out(f.box_half(), f.n());
  out.interp = Interp::bicubic;
  parallel_for(static_cast<std::size_t>(f.n()), [&](std::size_t iy) {
    for (int ix = 0; ix < f.n(); ++ix)
      out.at(ix, static_cast<int>(iy)) =
          t_apply(f, g, h, {f.coord(ix), f.coord(static_cast<int>(iy))}, quad);
  });
  return out;
}

double gaussian_omega0(const QuadratureSpec& quad) {
  GridField G = GridField::sampled(8.0, 16, gaussian_profile, true);
  Cplx t0 = t_apply(G, G, G, {0.0, 0.0}, quad);
  return t0.real() / gaussian_profile({0.0, 0.0}).real();
}

}  // namespace crlab
