#include "crlab/rng_fields.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <random>
#include <vector>

#include "crlab/hermite.hpp"

namespace crlab {

GridField random_hermite_field(std::uint64_t seed, double box_half, int n,
                               int band, double damp, bool unit_mass) {
  if (band < 1 || band > 60)
    throw std::invalid_argument("random_hermite_field: band out of range");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto coeffs = std::make_shared<std::vector<Cplx>>(
      static_cast<std::size_t>(band + 1) * (band + 1));
  for (int a = 0; a <= band; ++a)
    for (int b = 0; b <= band; ++b)
      (*coeffs)[static_cast<std::size_t>(a) * (band + 1) + b] =
          std::pow(damp, a + b) * Cplx{gauss(rng), gauss(rng)};
  if (unit_mass) {
    double m = 0.0;
    for (const Cplx& c : *coeffs) m += std::norm(c);  // basis is orthonormal
    double s = 1.0 / std::sqrt(m);
    for (Cplx& c : *coeffs) c *= s;
  }
  auto closure = [coeffs, band](DVec2 x) {
    double hx[64], hy[64];
    hermite_point(band, x.x, hx);
    hermite_point(band, x.y, hy);
    Cplx acc{};
    for (int a = 0; a <= band; ++a) {
      Cplx row{};
      for (int b = 0; b <= band; ++b)
        row += (*coeffs)[static_cast<std::size_t>(a) * (band + 1) + b] * hy[b];
      acc += hx[a] * row;
    }
    return acc;
  };
  return GridField::sampled(box_half, n, closure, /*attach_closure=*/true);
}

}  // namespace crlab
