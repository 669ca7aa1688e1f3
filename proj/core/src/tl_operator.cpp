#include "crlab/tl_operator.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "crlab/parallel.hpp"

namespace crlab {

namespace {

struct VisibleDir {
  IVec2 j;
  double norm;
};

// visible points of the canonical half-plane (first nonzero coordinate > 0)
std::vector<VisibleDir> visible_halfplane(std::int64_t jmax) {
  std::vector<VisibleDir> out;
  for (std::int64_t jx = 0; jx <= jmax; ++jx)
    for (std::int64_t jy = (jx == 0 ? 1 : -jmax); jy <= jmax; ++jy) {
      if (jx * jx + jy * jy > jmax * jmax) continue;
      if (std::gcd(std::llabs(jx), std::llabs(jy)) != 1) continue;
      out.push_back({{jx, jy}, std::sqrt(double(jx * jx + jy * jy))});
    }
  return out;
}

void check_shared(const LatticeField& e, const LatticeField& f,
                  const LatticeField& g) {
  const LatticeParams& p = e.params();
  p.validate(/*need_log=*/true);
  if (f.params().L != p.L || g.params().L != p.L || f.kmax() != e.kmax() ||
      g.kmax() != e.kmax())
    throw std::invalid_argument("t_l_apply: fields must share lattice params");
}

}  // namespace

LatticeField t_l_apply(const LatticeField& e, const LatticeField& f,
                       const LatticeField& g) {
  check_shared(e, f, g);
  const LatticeParams& p = e.params();
  std::int64_t R = e.kmax();
  double norm = kZeta2 / (2.0 * p.L * p.L * std::log(double(p.L)));

  // degenerate families collapse to two K-independent sums
  Cplx s_fg{}, s_ef{};
  e.for_each([&](IVec2 m, Cplx) {
    if (!p.in_ball(m)) return;
    s_fg += std::conj(f.at(m)) * g.at(m);
    s_ef += e.at(m) * std::conj(f.at(m));
  });

  auto dirs = visible_halfplane(2 * R);
  LatticeField out(p);
  std::int64_t side = 2 * R + 1;
  parallel_for(static_cast<std::size_t>(side), [&](std::size_t row) {
    std::int64_t ky = static_cast<std::int64_t>(row) - R;
    std::vector<Cplx> evals, gvals;
    std::vector<std::int64_t> alphas, betas;
    for (std::int64_t kx = -R; kx <= R; ++kx) {
      IVec2 k{kx, ky};
      if (!p.in_ball(k)) continue;
      Cplx acc = e.at(k) * s_fg + g.at(k) * s_ef -
                 e.at(k) * std::conj(f.at(k)) * g.at(k);
      for (const VisibleDir& d : dirs) {
        IVec2 j = d.j, jp = j.perp();
        std::int64_t amax = static_cast<std::int64_t>(2.0 * R / d.norm) + 1;
        evals.clear(); alphas.clear();
        for (std::int64_t a = -amax; a <= amax; ++a) {
          if (a == 0) continue;
          IVec2 k1 = k + a * j;
          if (!p.in_ball(k1)) continue;
          Cplx v = e.at(k1);
          if (v != Cplx{}) { evals.push_back(v); alphas.push_back(a); }
        }
        if (evals.empty()) continue;
        gvals.clear(); betas.clear();
        for (std::int64_t b = -amax; b <= amax; ++b) {
          if (b == 0) continue;
          IVec2 k3 = k + b * jp;
          if (!p.in_ball(k3)) continue;
          Cplx v = g.at(k3);
          if (v != Cplx{}) { gvals.push_back(v); betas.push_back(b); }
        }
        for (std::size_t ia = 0; ia < alphas.size(); ++ia) {
          IVec2 base = k + alphas[ia] * j;
          Cplx ev = evals[ia];
          for (std::size_t ib = 0; ib < betas.size(); ++ib) {
            Cplx fv = f.at(base + betas[ib] * jp);
            if (fv != Cplx{}) acc += ev * std::conj(fv) * gvals[ib];
          }
        }
      }
      out.raw()[out.index(k)] = norm * acc;
    }
  });
  return out;
}

namespace {

// sum_{m != 0} exp(-(x+m*h)^2); Poisson limit for small spacing
double theta_minus_center(double x, double h) {
  if (h <= 0.3) return std::sqrt(kPi) / h - std::exp(-x * x);
  double mstar = std::nearbyint(-x / h);
  double acc = 0.0;
  for (int dm = -12; dm <= 12; ++dm) {
    double m = mstar + dm;
    if (m == 0.0) continue;
    double u = x + m * h;
    if (u * u < 700.0) acc += std::exp(-u * u);
  }
  return acc;
}

const std::vector<VisibleDir>& cached_dirs(std::int64_t jmax) {
  static std::unordered_map<std::int64_t, std::vector<VisibleDir>> cache;
  auto it = cache.find(jmax);
  if (it == cache.end()) it = cache.emplace(jmax, visible_halfplane(jmax)).first;
  return it->second;
}

}  // namespace

double tl_gaussian_trace(const LatticeParams& p, DVec2 K) {
  p.validate(/*need_log=*/true);
  double L = p.L;
  double K2 = K.norm2();
  double Kn = std::sqrt(K2);
  std::int64_t jmax = static_cast<std::int64_t>(std::ceil(L * (Kn + 7.0)));
  const auto& dirs = cached_dirs(jmax);
  double nondeg = 0.0;
  for (const VisibleDir& d : dirs) {
    double h = d.norm / L;
    double px = (K.x * d.j.x + K.y * d.j.y) / d.norm;
    double qx = (-K.x * d.j.y + K.y * d.j.x) / d.norm;
    // both theta factors need a nonzero-m lattice hit within ~6.5
    if (h - std::fabs(px) > 6.5 || h - std::fabs(qx) > 6.5) continue;
    double f1 = theta_minus_center(px, h);
    if (f1 == 0.0) continue;
    double f2 = theta_minus_center(qx, h);
    if (f2 == 0.0) continue;
    nondeg += f1 * f2;
  }
  nondeg *= std::pow(kPi, -1.5) * std::exp(-0.5 * K2);
  double GK = std::exp(-0.5 * K2) / std::sqrt(kPi);
  double deg = 2.0 * GK * L * L - GK * GK * GK;  // sum_N G(N)^2 = L^2 exactly
  return kZeta2 / (2.0 * L * L * std::log(L)) * (nondeg + deg);
}

double strichartz_sum(const LatticeField& phi_hat, int N) {
  if (N < 1) throw std::invalid_argument("strichartz_sum: N must be >= 1");
  if (phi_hat.params().L != 1)
    throw std::invalid_argument("strichartz_sum: unit lattice (L = 1) expected");
  struct Mode { IVec2 k; Cplx v; };
  std::vector<Mode> modes;
  phi_hat.for_each([&](IVec2 k, Cplx v) {
    if (v == Cplx{}) return;
    if (k.norm2() > 4LL * N * N)
      throw std::invalid_argument("strichartz_sum: support exceeds |k| <= 2N");
    modes.push_back({k, v});
  });
  // Group ordered pairs by (k_a + k_b, |k_a|^2 + |k_b|^2); the quadruple sum
  // then collapses to sum |A(S,E)|^2, manifestly real and nonnegative.
  std::int64_t off = 4LL * N;
  std::unordered_map<std::uint64_t, Cplx> A;
  A.reserve(modes.size() * 8);
  for (const Mode& a : modes) {
    std::int64_t a2 = a.k.norm2();
    for (const Mode& b : modes) {
      IVec2 S = a.k + b.k;
      std::uint64_t key =
          (static_cast<std::uint64_t>(S.x + off) << 42) |
          (static_cast<std::uint64_t>(S.y + off) << 21) |
          static_cast<std::uint64_t>(a2 + b.k.norm2());
      A[key] += a.v * b.v;
    }
  }
  double sum = 0.0;
  for (const auto& [key, val] : A) sum += std::norm(val);
  return sum;
}

}  // namespace crlab
