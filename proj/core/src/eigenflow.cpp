#include "crlab/eigenflow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "crlab/quadrature.hpp"

namespace crlab {

namespace {

// 1D quartic integrals int h_a h_b h_c h_d over R; integrands decay like
// exp(-2x^2), so a wide Gauss-Legendre rule is exact to machine precision
std::vector<double> quartic_table(int amax) {
  int n = amax + 1;
  const int qn = 160;
  const double X = 14.0;
  const GlRule& gl = gauss_legendre(qn);
  std::vector<double> xs(qn), ws(qn);
  for (int i = 0; i < qn; ++i) {
    xs[i] = X * gl.x[i];
    ws[i] = X * gl.w[i];
  }
  std::vector<double> hv = hermite_values(amax, xs);
  std::vector<double> t(static_cast<std::size_t>(n) * n * n * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c)
        for (int d = c; d < n; ++d) {
          double acc = 0.0;
          for (int i = 0; i < qn; ++i)
            acc += ws[i] * hv[a * qn + i] * hv[b * qn + i] * hv[c * qn + i] *
                   hv[d * qn + i];
          // fully symmetric: fill every distinct permutation
          int p[4] = {a, b, c, d};
          do {
            t[((static_cast<std::size_t>(p[0]) * n + p[1]) * n + p[2]) * n +
              p[3]] = acc;
          } while (std::next_permutation(p, p + 4));
        }
  return t;
}

}  // namespace

EigenspaceFlow EigenspaceFlow::build(int level, const std::string& cache_dir) {
  if (level < 2 || level % 2 != 0)
    throw std::invalid_argument("EigenspaceFlow: level must be an even integer >= 2");
  EigenspaceFlow ef;
  ef.level_ = level;
  int k = level / 2;
  ef.dim_ = k;
  std::string cache_path;
  if (!cache_dir.empty()) {
    char name[96];
    std::snprintf(name, sizeof name, "/eigenflow_l%d_q160.bin", level);
    cache_path = cache_dir + name;
    std::ifstream in(cache_path, std::ios::binary);
    if (in) {
      ef.gamma_.resize(static_cast<std::size_t>(k) * k * k * k);
      in.read(reinterpret_cast<char*>(ef.gamma_.data()),
              static_cast<std::streamsize>(ef.gamma_.size() * sizeof(double)));
      if (in) return ef;
    }
  }
  // basis vector i of E_{2k} is h_{k-1-i}(x) h_i(y)
  std::vector<double> q = quartic_table(k - 1);
  auto I4 = [&](int a, int b, int c, int d) {
    int n = k;
    return q[((static_cast<std::size_t>(a) * n + b) * n + c) * n + d];
  };
  ef.gamma_.assign(static_cast<std::size_t>(k) * k * k * k, 0.0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d)
          ef.gamma_[((static_cast<std::size_t>(a) * k + b) * k + c) * k + d] =
              I4(k - 1 - a, k - 1 - b, k - 1 - c, k - 1 - d) * I4(a, b, c, d);
  if (!cache_path.empty()) {
    std::ofstream out(cache_path, std::ios::binary);
    if (out)
      out.write(reinterpret_cast<const char*>(ef.gamma_.data()),
                static_cast<std::streamsize>(ef.gamma_.size() * sizeof(double)));
  }
  return ef;
}

std::vector<Cplx> EigenspaceFlow::rhs(const std::vector<Cplx>& c) const {
  int k = dim_;
  std::vector<Cplx> out(static_cast<std::size_t>(k), Cplx{});
  for (int i = 0; i < k; ++i) {
    Cplx acc{};
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int cc = 0; cc < k; ++cc)
          acc += gamma(a, b, cc, i) * c[static_cast<std::size_t>(a)] *
                 std::conj(c[static_cast<std::size_t>(b)]) *
                 c[static_cast<std::size_t>(cc)];
    out[static_cast<std::size_t>(i)] = Cplx(0.0, kPi * kPi) * acc;
  }
  return out;
}

std::vector<Cplx> EigenspaceFlow::flow(std::vector<Cplx> c, double t_final,
                                       double dt) const {
  long nsteps = std::lround(t_final / dt);
  if (nsteps < 1) nsteps = 1;
  double h = t_final / nsteps;
  std::size_t k = c.size();
  for (long s = 0; s < nsteps; ++s) {
    std::vector<Cplx> k1 = rhs(c), u(k);
    for (std::size_t i = 0; i < k; ++i) u[i] = c[i] + 0.5 * h * k1[i];
    std::vector<Cplx> k2 = rhs(u);
    for (std::size_t i = 0; i < k; ++i) u[i] = c[i] + 0.5 * h * k2[i];
    std::vector<Cplx> k3 = rhs(u);
    for (std::size_t i = 0; i < k; ++i) u[i] = c[i] + h * k3[i];
    std::vector<Cplx> k4 = rhs(u);
    for (std::size_t i = 0; i < k; ++i)
      c[i] += h / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
  }
  return c;
}

}  // namespace crlab
