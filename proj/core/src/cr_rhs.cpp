#include "crlab/cr_rhs.hpp"

#include <cmath>

#include "crlab/parallel.hpp"

namespace crlab {

LensOperator::LensOperator(double box_half, int n, LensParams lp)
    : lp_(lp), ht_(box_half, n, lp.hermite_band) {}

std::vector<Cplx> LensOperator::apply_coeffs(const std::vector<Cplx>& c) const {
  int ns = lp_.s_nodes;
  int m1 = ht_.M() + 1;
  std::vector<Cplx> acc(static_cast<std::size_t>(m1) * m1, Cplx{});
  std::vector<std::vector<Cplx>> partial(static_cast<std::size_t>(ns));
  parallel_for(static_cast<std::size_t>(ns), [&](std::size_t j) {
    double s = -kPi / 4.0 + (static_cast<double>(j) + 0.5) * (kPi / 2.0) / ns;
    std::vector<Cplx> d = c;
    ht_.oscillator_phase(d, s);
    GridField v(ht_.box_half(), ht_.n());
    ht_.write_grid(d, v);
    for (Cplx& z : v.raw()) z *= std::norm(z);  // |v|^2 v
    std::vector<Cplx> w = ht_.analyze(v);
    ht_.oscillator_phase(w, -s);
    partial[j] = std::move(w);
  });
  double weight = 2.0 * kPi * (kPi / 2.0) / ns;
  for (int j = 0; j < ns; ++j)
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += weight * partial[static_cast<std::size_t>(j)][i];
  return acc;
}

GridField LensOperator::apply(const GridField& g) const {
  return ht_.synthesize(apply_coeffs(ht_.analyze(g)));
}

}  // namespace crlab
