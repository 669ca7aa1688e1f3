#include "crlab/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace crlab {

std::vector<double> hermite_values(int M, const std::vector<double>& xs) {
  std::size_t n = xs.size();
  std::vector<double> t(static_cast<std::size_t>(M + 1) * n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = xs[i];
    double h0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    t[i] = h0;
    if (M >= 1) t[n + i] = std::sqrt(2.0) * x * h0;
    for (int a = 2; a <= M; ++a)
      t[static_cast<std::size_t>(a) * n + i] =
          std::sqrt(2.0 / a) * x * t[static_cast<std::size_t>(a - 1) * n + i] -
          std::sqrt((a - 1.0) / a) * t[static_cast<std::size_t>(a - 2) * n + i];
  }
  return t;
}

void hermite_point(int M, double x, double* out) {
  double h0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  out[0] = h0;
  if (M >= 1) out[1] = std::sqrt(2.0) * x * h0;
  for (int a = 2; a <= M; ++a)
    out[a] = std::sqrt(2.0 / a) * x * out[a - 1] -
             std::sqrt((a - 1.0) / a) * out[a - 2];
}

HermiteTransform::HermiteTransform(double box_half, int n, int M)
    : box_half_(box_half), n_(n) {
  double nyquist = kPi * n / (2.0 * box_half);
  double reach = 0.92 * std::min(box_half, nyquist);
  int cap = static_cast<int>(std::floor(0.5 * (reach * reach - 1.0)));
  M_ = (M < 0) ? cap : std::min(M, cap);
  if (M_ < 2) throw std::invalid_argument("HermiteTransform: grid too coarse");
  std::vector<double> xs(static_cast<std::size_t>(n));
  double h = 2.0 * box_half / n;
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = -box_half + i * h;
  table_ = hermite_values(M_, xs);
}

std::vector<Cplx> HermiteTransform::analyze(const GridField& f) const {
  int m1 = M_ + 1, n = n_;
  double h = f.h();
  // tmp[a][iy] = sum_ix h_a(x) f(x,y)
  std::vector<Cplx> tmp(static_cast<std::size_t>(m1) * n);
  for (int a = 0; a < m1; ++a) {
    const double* row = &table_[static_cast<std::size_t>(a) * n];
    for (int iy = 0; iy < n; ++iy) {
      Cplx acc{};
      const Cplx* frow = &f.raw()[static_cast<std::size_t>(iy) * n];
      for (int ix = 0; ix < n; ++ix) acc += row[ix] * frow[ix];
      tmp[static_cast<std::size_t>(a) * n + iy] = acc;
    }
  }
  std::vector<Cplx> c(static_cast<std::size_t>(m1) * m1);
  for (int a = 0; a < m1; ++a)
    for (int b = 0; b < m1; ++b) {
      Cplx acc{};
      const double* row = &table_[static_cast<std::size_t>(b) * n];
      const Cplx* trow = &tmp[static_cast<std::size_t>(a) * n];
      for (int iy = 0; iy < n; ++iy) acc += row[iy] * trow[iy];
      c[static_cast<std::size_t>(a) * m1 + b] = acc * (h * h);
    }
  return c;
}

void HermiteTransform::write_grid(const std::vector<Cplx>& c, GridField& out) const {
  int m1 = M_ + 1, n = n_;
  // tmp[a][iy] = sum_b c[a][b] h_b(y)
  std::vector<Cplx> tmp(static_cast<std::size_t>(m1) * n, Cplx{});
  for (int a = 0; a < m1; ++a)
    for (int b = 0; b < m1; ++b) {
      Cplx cv = c[static_cast<std::size_t>(a) * m1 + b];
      if (cv == Cplx{}) continue;
      const double* row = &table_[static_cast<std::size_t>(b) * n];
      Cplx* trow = &tmp[static_cast<std::size_t>(a) * n];
      for (int iy = 0; iy < n; ++iy) trow[iy] += cv * row[iy];
    }
  for (std::size_t i = 0; i < out.raw().size(); ++i) out.raw()[i] = Cplx{};
  for (int a = 0; a < m1; ++a) {
    const double* row = &table_[static_cast<std::size_t>(a) * n];
    const Cplx* trow = &tmp[static_cast<std::size_t>(a) * n];
    for (int iy = 0; iy < n; ++iy) {
      Cplx cv = trow[iy];
      if (cv == Cplx{}) continue;
      Cplx* orow = &out.raw()[static_cast<std::size_t>(iy) * n];
      for (int ix = 0; ix < n; ++ix) orow[ix] += cv * row[ix];
    }
  }
}

GridField HermiteTransform::synthesize(const std::vector<Cplx>& c) const {
  GridField out(box_half_, n_);
  write_grid(c, out);
  return out;
}

double HermiteTransform::edge_fraction(const std::vector<Cplx>& c) const {
  int m1 = M_ + 1;
  double total = 0.0, edge = 0.0;
  for (int a = 0; a < m1; ++a)
    for (int b = 0; b < m1; ++b) {
      double m = std::norm(c[static_cast<std::size_t>(a) * m1 + b]);
      total += m;
      if (a + b >= M_) edge += m;
    }
  return total > 0.0 ? edge / total : 0.0;
}

void HermiteTransform::oscillator_phase(std::vector<Cplx>& c, double s) const {
  int m1 = M_ + 1;
  for (int a = 0; a < m1; ++a)
    for (int b = 0; b < m1; ++b)
      c[static_cast<std::size_t>(a) * m1 + b] *=
          std::polar(1.0, s * (2.0 * (a + b) + 2.0));
}

std::vector<Cplx> HermiteTransform::synthesize_points(
    const std::vector<Cplx>& c, const std::vector<double>& xs,
    const std::vector<double>& ys) const {
  int m1 = M_ + 1;
  std::vector<double> hx = hermite_values(M_, xs), hy = hermite_values(M_, ys);
  std::size_t nx = xs.size(), ny = ys.size();
  std::vector<Cplx> tmp(static_cast<std::size_t>(m1) * ny, Cplx{});
  for (int a = 0; a < m1; ++a)
    for (int b = 0; b < m1; ++b) {
      Cplx cv = c[static_cast<std::size_t>(a) * m1 + b];
      if (cv == Cplx{}) continue;
      for (std::size_t iy = 0; iy < ny; ++iy)
        tmp[static_cast<std::size_t>(a) * ny + iy] +=
            cv * hy[static_cast<std::size_t>(b) * ny + iy];
    }
  std::vector<Cplx> out(nx * ny, Cplx{});
  for (int a = 0; a < m1; ++a)
    for (std::size_t ix = 0; ix < nx; ++ix) {
      double hv = hx[static_cast<std::size_t>(a) * nx + ix];
      for (std::size_t iy = 0; iy < ny; ++iy)
        out[ix * ny + iy] += hv * tmp[static_cast<std::size_t>(a) * ny + iy];
    }
  return out;
}

HermiteState hermite_project(const GridField& g, int level,
                             const HermiteTransform& ht) {
  if (level < 2 || level % 2 != 0)
    throw std::invalid_argument("hermite_project: level must be even and >= 2");
  int k = level / 2;
  if (k - 1 > ht.M())
    throw std::invalid_argument("hermite_project: level exceeds the band");
  std::vector<Cplx> c = ht.analyze(g);
  HermiteState st;
  st.level = level;
  st.coeffs.resize(static_cast<std::size_t>(k));
  int m1 = ht.M() + 1;
  for (int i = 0; i < k; ++i) {
    int a = k - 1 - i, b = i;
    st.coeffs[static_cast<std::size_t>(i)] =
        c[static_cast<std::size_t>(a) * m1 + b];
  }
  return st;
}

GridField hermite_lift(const HermiteState& st, const HermiteTransform& ht) {
  int k = st.level / 2, m1 = ht.M() + 1;
  std::vector<Cplx> c(static_cast<std::size_t>(m1) * m1, Cplx{});
  for (int i = 0; i < k; ++i) {
    int a = k - 1 - i, b = i;
    c[static_cast<std::size_t>(a) * m1 + b] = st.coeffs[static_cast<std::size_t>(i)];
  }
  return ht.synthesize(c);
}

}  // namespace crlab
