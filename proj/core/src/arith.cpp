#include "crlab/arith.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace crlab {

int mobius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  int k = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;  // squared prime factor
      ++k;
    }
  }
  if (n > 1) ++k;
  return (k % 2 == 0) ? 1 : -1;
}

bool is_visible(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0)
    throw std::invalid_argument("is_visible: (0,0) is not a direction");
  return std::gcd(std::llabs(p), std::llabs(q)) == 1;
}

VisibleCount visible_counts(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("visible_counts: N must be >= 1");
  std::int64_t interior = 0;  // coprime pairs with 1 <= p,q <= N
  for (std::int64_t p = 1; p <= N; ++p)
    for (std::int64_t q = 1; q <= N; ++q)
      if (std::gcd(p, q) == 1) ++interior;
  VisibleCount c;
  c.visible = 4 + 4 * interior;  // four axis points plus four quadrants
  c.nonzero = (2 * N + 1) * (2 * N + 1) - 1;
  return c;
}

double visible_density(std::int64_t N) {
  VisibleCount c = visible_counts(N);
  return static_cast<double>(c.visible) / static_cast<double>(c.nonzero);
}

std::vector<VisibleCount> visible_count_scan(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("visible_count_scan: N must be >= 1");
  // bucket coprime pairs by Chebyshev radius, then prefix-sum
  std::vector<std::int64_t> bucket(static_cast<std::size_t>(N) + 1, 0);
  for (std::int64_t p = 1; p <= N; ++p)
    for (std::int64_t q = 1; q <= N; ++q)
      if (std::gcd(p, q) == 1) ++bucket[static_cast<std::size_t>(std::max(p, q))];
  std::vector<VisibleCount> out(static_cast<std::size_t>(N));
  std::int64_t run = 0;
  for (std::int64_t n = 1; n <= N; ++n) {
    run += bucket[static_cast<std::size_t>(n)];
    out[static_cast<std::size_t>(n - 1)] = {4 + 4 * run,
                                            (2 * n + 1) * (2 * n + 1) - 1};
  }
  return out;
}

std::int64_t circle_lattice_count(IVec2 center, std::int64_t radius_sq,
                                  std::int64_t box_half) {
  if (radius_sq < 0)
    throw std::invalid_argument("circle_lattice_count: radius_sq < 0");
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(radius_sq)));
  while (r * r > radius_sq) --r;
  while ((r + 1) * (r + 1) <= radius_sq) ++r;
  std::int64_t count = 0;
  for (std::int64_t dx = -r; dx <= r; ++dx) {
    std::int64_t rem = radius_sq - dx * dx;
    std::int64_t dy = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rem)));
    while (dy * dy > rem) --dy;
    while ((dy + 1) * (dy + 1) <= rem) ++dy;
    if (dy * dy != rem) continue;
    for (std::int64_t s : {dy, -dy}) {
      if (dy == 0 && s < 0) continue;
      std::int64_t zx = center.x + dx, zy = center.y + s;
      if (std::llabs(zx) <= box_half && std::llabs(zy) <= box_half) ++count;
    }
  }
  return count;
}

}  // namespace crlab
