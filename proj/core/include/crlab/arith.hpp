#pragma once

#include <cstdint>
#include <vector>

#include "crlab/geometry.hpp"

namespace crlab {

/**
 * Moebius function: 1 at n=1, (-1)^k for a product of k distinct primes,
 * 0 when a squared prime divides n.
 */
int mobius(std::int64_t n);

/**
 * Visibility of the lattice point (p,q) from the origin: true iff
 * gcd(|p|,|q|) = 1, with gcd(0,m) = |m| so that (0,+-1) and (+-1,0) are the
 * only visible points on the axes. (0,0) is rejected.
 */
bool is_visible(std::int64_t p, std::int64_t q);

/** Fraction of visible points among the nonzero points of [-N,N]^2. */
double visible_density(std::int64_t N);

struct VisibleCount {
  std::int64_t visible = 0;
  std::int64_t nonzero = 0;
};

/** Exact counts behind visible_density. */
VisibleCount visible_counts(std::int64_t N);

/**
 * Counts for every box half-width 1..N in one pass (cumulative gcd scan);
 * used by the density CLI so a full ladder costs one O(N^2) sweep.
 */
std::vector<VisibleCount> visible_count_scan(std::int64_t N);

/**
 * Number of integer points z with |z - center|^2 = radius_sq lying in the
 * centered box [-box_half, box_half]^2.
 */
std::int64_t circle_lattice_count(IVec2 center, std::int64_t radius_sq,
                                  std::int64_t box_half);

}  // namespace crlab
