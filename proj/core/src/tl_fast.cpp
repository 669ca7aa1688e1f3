#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "crlab/parallel.hpp"
#include "crlab/tl_operator.hpp"

namespace crlab {

namespace {

// Catmull-Rom bicubic over the scaled-index grid of a LatticeField,
// zero outside the stored window. Coordinates are in k-units (L*K).
class KGridInterp {
 public:
  explicit KGridInterp(const LatticeField& a) : a_(a), R_(a.kmax()) {}

  Cplx operator()(double kx, double ky) const {
    double fx = std::floor(kx), fy = std::floor(ky);
    std::int64_t ix = static_cast<std::int64_t>(fx);
    std::int64_t iy = static_cast<std::int64_t>(fy);
    if (ix < -R_ - 2 || ix > R_ + 1 || iy < -R_ - 2 || iy > R_ + 1) return {};
    double tx = kx - fx, ty = ky - fy;
    double wx[4], wy[4];
    weights(tx, wx);
    weights(ty, wy);
    Cplx acc{};
    for (int dy = -1; dy <= 2; ++dy) {
      Cplx row{};
      for (int dx = -1; dx <= 2; ++dx)
        row += wx[dx + 1] * a_.at({ix + dx, iy + dy});
      acc += wy[dy + 1] * row;
    }
    return acc;
  }

 private:
  static void weights(double t, double w[4]) {
    double t2 = t * t, t3 = t2 * t;
    w[0] = 0.5 * (-t3 + 2 * t2 - t);
    w[1] = 0.5 * (3 * t3 - 5 * t2 + 2);
    w[2] = 0.5 * (-3 * t3 + 4 * t2 + t);
    w[3] = 0.5 * (t3 - t2);
  }
  const LatticeField& a_;
  std::int64_t R_;
};

struct Dir {
  IVec2 j;
  double norm;
};

std::vector<Dir> halfplane_dirs(std::int64_t jmax) {
  std::vector<Dir> out;
  for (std::int64_t jx = 0; jx <= jmax; ++jx)
    for (std::int64_t jy = (jx == 0 ? 1 : -jmax); jy <= jmax; ++jy) {
      if (jx * jx + jy * jy > jmax * jmax) continue;
      if (std::gcd(std::llabs(jx), std::llabs(jy)) != 1) continue;
      out.push_back({{jx, jy}, std::sqrt(double(jx * jx + jy * jy))});
    }
  return out;
}

// trigonometric interpolation kernel on a period-pi grid with n samples
double trig_kernel(double phi, int n) {
  // psi = 2*phi lives on the standard 2*pi period
  double psi = 2.0 * phi;
  double s = std::sin(0.5 * psi);
  if (std::fabs(s) < 1e-12) return 1.0;
  return std::sin(0.5 * n * psi) / std::tan(0.5 * psi) / n;
}

struct AngleData {
  // rotated-frame integral I(p,q) on the output grid, plus the two
  // line-correction profiles
  std::vector<Cplx> I;      // n_o * n_o, [p*n_o + q]
  std::vector<Cplx> rho_par;   // over q: int e conj(f) along v
  std::vector<Cplx> rho_perp;  // over p: int conj(f) g along v_perp
};

}  // namespace

LatticeField t_l_apply_fast(const LatticeField& e, const LatticeField& f,
                            const LatticeField& g, const TlFastOptions& opt) {
  const LatticeParams& p = e.params();
  p.validate(/*need_log=*/true);
  if (f.params().L != p.L || g.params().L != p.L || f.kmax() != e.kmax() ||
      g.kmax() != e.kmax())
    throw std::invalid_argument("t_l_apply_fast: fields must share lattice params");

  const double L = p.L;
  const std::int64_t R = e.kmax();
  const double norm = kZeta2 / (2.0 * L * L * std::log(L));
  const double j_split = std::max(1.0, opt.j_split_frac * L);
  const int n_th = opt.angles;

  auto dirs = halfplane_dirs(2 * R);
  std::vector<Dir> small, large;
  for (const Dir& d : dirs)
    (d.norm <= j_split ? small : large).push_back(d);

  // ---- small-|j| block: Poisson-summed integrals on a theta grid ----
  const double cut = p.cutoff;
  const double s_int = cut + 0.5;
  const double dq = opt.quad_step;
  const int n_q = 2 * static_cast<int>(std::ceil(s_int / dq)) + 1;
  const double s_out = cut + 0.25;
  const double dout = opt.out_step;
  const int n_o = 2 * static_cast<int>(std::ceil(s_out / dout)) + 1;
  auto qcoord = [&](int i) { return (i - (n_q - 1) / 2) * dq; };
  auto ocoord = [&](int i) { return (i - (n_o - 1) / 2) * dout; };

  KGridInterp ei(e), fi(f), gi(g);
  std::vector<AngleData> per_angle(static_cast<std::size_t>(n_th));
  parallel_for(static_cast<std::size_t>(n_th), [&](std::size_t it) {
    double th = kPi * static_cast<double>(it) / n_th;
    double vx = std::cos(th), vy = std::sin(th);
    auto sample = [&](const KGridInterp& field, double a, double b) {
      // point a*v + b*v_perp, in k-units
      return field(L * (a * vx - b * vy), L * (a * vy + b * vx));
    };
    std::vector<Cplx> E_io(n_q * n_o), F_io(n_q * n_o), F_ii(n_q * n_q),
        F_oi(n_o * n_q), G_oi(n_o * n_q);
    for (int s = 0; s < n_q; ++s) {
      for (int q = 0; q < n_o; ++q) {
        E_io[s * n_o + q] = sample(ei, qcoord(s), ocoord(q));
        F_io[s * n_o + q] = sample(fi, qcoord(s), ocoord(q));
      }
      for (int t = 0; t < n_q; ++t)
        F_ii[s * n_q + t] = sample(fi, qcoord(s), qcoord(t));
    }
    for (int o = 0; o < n_o; ++o)
      for (int t = 0; t < n_q; ++t) {
        F_oi[o * n_q + t] = sample(fi, ocoord(o), qcoord(t));
        G_oi[o * n_q + t] = sample(gi, ocoord(o), qcoord(t));
      }
    AngleData& ad = per_angle[it];
    // M[q][t] = dq * sum_s E_io[s][q] * conj(F_ii[s][t])
    std::vector<Cplx> M(n_o * n_q);
    for (int q = 0; q < n_o; ++q)
      for (int t = 0; t < n_q; ++t) {
        Cplx acc{};
        for (int s = 0; s < n_q; ++s)
          acc += E_io[s * n_o + q] * std::conj(F_ii[s * n_q + t]);
        M[q * n_q + t] = dq * acc;
      }
    ad.I.assign(n_o * n_o, Cplx{});
    for (int pp = 0; pp < n_o; ++pp)
      for (int q = 0; q < n_o; ++q) {
        Cplx acc{};
        for (int t = 0; t < n_q; ++t)
          acc += G_oi[pp * n_q + t] * M[q * n_q + t];
        ad.I[pp * n_o + q] = dq * acc;
      }
    ad.rho_par.assign(n_o, Cplx{});
    for (int q = 0; q < n_o; ++q) {
      Cplx acc{};
      for (int s = 0; s < n_q; ++s)
        acc += E_io[s * n_o + q] * std::conj(F_io[s * n_o + q]);
      ad.rho_par[q] = dq * acc;
    }
    ad.rho_perp.assign(n_o, Cplx{});
    for (int pp = 0; pp < n_o; ++pp) {
      Cplx acc{};
      for (int t = 0; t < n_q; ++t)
        acc += std::conj(F_oi[pp * n_q + t]) * G_oi[pp * n_q + t];
      ad.rho_perp[pp] = dq * acc;
    }
  });

  // direction-measure weights contracted onto the theta grid
  std::vector<double> c2(n_th, 0.0), c1(n_th, 0.0);
  for (const Dir& d : small) {
    double th = std::atan2(double(d.j.y), double(d.j.x));
    if (th < 0) th += kPi;
    double w2 = (L / d.norm) * (L / d.norm), w1 = L / d.norm;
    for (int i = 0; i < n_th; ++i) {
      double ker = trig_kernel(th - kPi * i / n_th, n_th);
      c2[i] += w2 * ker;
      c1[i] += w1 * ker;
    }
  }
  const double n_small = static_cast<double>(small.size());

  // cubic interpolation helpers on the output grids
  auto interp2 = [&](const std::vector<Cplx>& grid, double x, double y) {
    double gx = x / dout + (n_o - 1) / 2, gy = y / dout + (n_o - 1) / 2;
    int ix = static_cast<int>(std::floor(gx)), iy = static_cast<int>(std::floor(gy));
    double tx = gx - ix, ty = gy - iy;
    auto at = [&](int a, int b) -> Cplx {
      if (a < 0 || a >= n_o || b < 0 || b >= n_o) return {};
      return grid[a * n_o + b];
    };
    double wx[4], wy[4];
    auto cw = [](double t, double w[4]) {
      double t2 = t * t, t3 = t2 * t;
      w[0] = 0.5 * (-t3 + 2 * t2 - t);
      w[1] = 0.5 * (3 * t3 - 5 * t2 + 2);
      w[2] = 0.5 * (-3 * t3 + 4 * t2 + t);
      w[3] = 0.5 * (t3 - t2);
    };
    cw(tx, wx); cw(ty, wy);
    Cplx acc{};
    for (int a = -1; a <= 2; ++a)
      for (int b = -1; b <= 2; ++b)
        acc += wx[a + 1] * wy[b + 1] * at(ix + a, iy + b);
    return acc;
  };
  auto interp1 = [&](const std::vector<Cplx>& prof, double x) {
    double gx = x / dout + (n_o - 1) / 2;
    int ix = static_cast<int>(std::floor(gx));
    double t = gx - ix;
    auto at = [&](int a) -> Cplx {
      return (a < 0 || a >= n_o) ? Cplx{} : prof[a];
    };
    double w[4];
    double t2 = t * t, t3 = t2 * t;
    w[0] = 0.5 * (-t3 + 2 * t2 - t);
    w[1] = 0.5 * (3 * t3 - 5 * t2 + 2);
    w[2] = 0.5 * (-3 * t3 + 4 * t2 + t);
    w[3] = 0.5 * (t3 - t2);
    return w[0] * at(ix - 1) + w[1] * at(ix) + w[2] * at(ix + 1) + w[3] * at(ix + 2);
  };

  // degenerate families (same collapse as the direct path)
  Cplx s_fg{}, s_ef{};
  e.for_each([&](IVec2 m, Cplx) {
    if (!p.in_ball(m)) return;
    s_fg += std::conj(f.at(m)) * g.at(m);
    s_ef += e.at(m) * std::conj(f.at(m));
  });

  LatticeField out(p);
  std::int64_t side = 2 * R + 1;
  parallel_for(static_cast<std::size_t>(side), [&](std::size_t row) {
    std::int64_t ky = static_cast<std::int64_t>(row) - R;
    for (std::int64_t kx = -R; kx <= R; ++kx) {
      IVec2 k{kx, ky};
      if (!p.in_ball(k)) continue;
      DVec2 K = p.to_K(k);
      Cplx eK = e.at(k), fK = f.at(k), gK = g.at(k);
      Cplx acc = eK * s_fg + gK * s_ef - eK * std::conj(fK) * gK;
      // small-|j| block via the contracted theta weights
      Cplx smallsum{};
      for (int i = 0; i < n_th; ++i) {
        if (c2[i] == 0.0 && c1[i] == 0.0) continue;
        double th = kPi * i / n_th;
        double vx = std::cos(th), vy = std::sin(th);
        double pp = K.x * vx + K.y * vy;
        double qq = -K.x * vy + K.y * vx;
        const AngleData& ad = per_angle[static_cast<std::size_t>(i)];
        smallsum += c2[i] * interp2(ad.I, pp, qq);
        smallsum -= c1[i] * (eK * interp1(ad.rho_perp, pp) +
                             gK * interp1(ad.rho_par, qq));
      }
      smallsum += n_small * eK * std::conj(fK) * gK;
      acc += smallsum;
      // large-|j| block, exact
      for (const Dir& d : large) {
        IVec2 j = d.j, jp = j.perp();
        std::int64_t amax = static_cast<std::int64_t>(2.0 * R / d.norm) + 1;
        for (std::int64_t a = -amax; a <= amax; ++a) {
          if (a == 0) continue;
          IVec2 k1 = k + a * j;
          if (!p.in_ball(k1)) continue;
          Cplx ev = e.at(k1);
          if (ev == Cplx{}) continue;
          for (std::int64_t b = -amax; b <= amax; ++b) {
            if (b == 0) continue;
            IVec2 k3 = k + b * jp;
            if (!p.in_ball(k3)) continue;
            Cplx gv = g.at(k3);
            if (gv == Cplx{}) continue;
            Cplx fv = f.at(k1 + b * jp);
            if (fv != Cplx{}) acc += ev * std::conj(fv) * gv;
          }
        }
      }
      out.raw()[out.index(k)] = norm * acc;
    }
  });
  return out;
}

}  // namespace crlab
