#include "crlab/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace crlab {

namespace {

bool half_plane(IVec2 j) { return j.x > 0 || (j.x == 0 && j.y > 0); }

void check_center(IVec2 k, const LatticeParams& p) {
  p.validate();
  if (!p.in_ball(k))
    throw std::invalid_argument("enumerate: K outside the cutoff ball");
}

}  // namespace

std::vector<ResonantTuple> enumerate_resonant(IVec2 k, const LatticeParams& p,
                                              bool include_degenerate) {
  check_center(k, p);
  std::vector<ResonantTuple> out;
  std::int64_t R = p.kmax();

  if (include_degenerate) {
    ResonantTuple zero{k, k, k, k, {0, 0}, {0, 0}, 0, 0, {0, 0}};
    out.push_back(zero);
    // N1 = 0: (K, K+N3, K+N3), N3 != 0
    for (std::int64_t nx = -R - k.x; nx <= R - k.x; ++nx)
      for (std::int64_t ny = -R - k.y; ny <= R - k.y; ++ny) {
        IVec2 n3{nx, ny};
        if (n3.zero() || !p.in_ball(k + n3)) continue;
        out.push_back({k, k, k + n3, k + n3, {0, 0}, n3, 0, 0, {0, 0}});
      }
    // N3 = 0: (K+N1, K+N1, K), N1 != 0
    for (std::int64_t nx = -R - k.x; nx <= R - k.x; ++nx)
      for (std::int64_t ny = -R - k.y; ny <= R - k.y; ++ny) {
        IVec2 n1{nx, ny};
        if (n1.zero() || !p.in_ball(k + n1)) continue;
        out.push_back({k, k + n1, k + n1, k, n1, {0, 0}, 0, 0, {0, 0}});
      }
  }

  // Non-degenerate rectangles: N1 = alpha*J, N3 = beta*J^perp, J visible in
  // the canonical half-plane, alpha and beta nonzero. Each rectangle appears
  // for exactly one (alpha, beta, J).
  std::vector<ResonantTuple> rect;
  std::int64_t jmax = 2 * R;
  for (std::int64_t jx = 0; jx <= jmax; ++jx)
    for (std::int64_t jy = (jx == 0 ? 1 : -jmax); jy <= jmax; ++jy) {
      IVec2 j{jx, jy};
      if (j.norm2() > jmax * jmax) continue;
      if (std::gcd(std::llabs(jx), std::llabs(jy)) != 1) continue;
      IVec2 jp = j.perp();
      double jn = std::sqrt(static_cast<double>(j.norm2()));
      std::int64_t amax = static_cast<std::int64_t>(2.0 * R / jn) + 1;
      for (std::int64_t a = -amax; a <= amax; ++a) {
        if (a == 0) continue;
        IVec2 k1 = k + a * j;
        if (!p.in_ball(k1)) continue;
        for (std::int64_t b = -amax; b <= amax; ++b) {
          if (b == 0) continue;
          IVec2 k3 = k + b * jp;
          if (!p.in_ball(k3)) continue;
          rect.push_back(
              {k, k1, k1 + b * jp, k3, a * j, b * jp, a, b, j});
        }
      }
    }
  std::sort(rect.begin(), rect.end(),
            [](const ResonantTuple& s, const ResonantTuple& t) {
              return std::tie(s.alpha, s.beta, s.j.x, s.j.y) <
                     std::tie(t.alpha, t.beta, t.j.x, t.j.y);
            });
  out.insert(out.end(), rect.begin(), rect.end());
  return out;
}

void for_each_resonant(IVec2 k, const LatticeParams& p, bool include_degenerate,
                       const std::function<void(const ResonantTuple&)>& fn) {
  for (const ResonantTuple& t : enumerate_resonant(k, p, include_degenerate))
    fn(t);
}

bool LevelSetKey::scaled_index(int L, std::int64_t& m) const {
  double scaled = mu * static_cast<double>(L) * L * 0.5;
  double r = std::nearbyint(scaled);
  if (scaled != r) return false;  // exact: L^2*mu/2 must be an integer
  m = static_cast<std::int64_t>(r);
  return true;
}

std::vector<ResonantTuple> enumerate_level_set(IVec2 k, const LevelSetKey& key,
                                               const LatticeParams& p) {
  check_center(k, p);
  std::vector<ResonantTuple> out;
  std::int64_t m = 0;
  if (!key.scaled_index(p.L, m)) return out;  // integrality obstruction
  std::int64_t R = p.kmax();
  // Omega = -2 N1.N3, so the level set is dot(n1,n3) = -m in scaled indices.
  for (std::int64_t ax = -R - k.x; ax <= R - k.x; ++ax)
    for (std::int64_t ay = -R - k.y; ay <= R - k.y; ++ay) {
      IVec2 n1{ax, ay};
      if (!p.in_ball(k + n1)) continue;
      for (std::int64_t bx = -R - k.x; bx <= R - k.x; ++bx)
        for (std::int64_t by = -R - k.y; by <= R - k.y; ++by) {
          IVec2 n3{bx, by};
          if (!p.in_ball(k + n3)) continue;
          if (dot(n1, n3) != -m) continue;
          out.push_back({k, k + n1, k + n1 + n3, k + n3, n1, n3, 0, 0, {0, 0}});
        }
    }
  return out;
}

}  // namespace crlab
