#include "crlab/grid_field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "crlab/quadrature.hpp"
#include "crlab/t_operator.hpp"
#include "json.hpp"

namespace crlab {

GridField::GridField(double box_half, int n) : box_half_(box_half), n_(n) {
  if (box_half <= 0.0 || n < 4 || n % 2 != 0)
    throw std::invalid_argument("GridField: need box_half > 0 and even n >= 4");
  v_.assign(static_cast<std::size_t>(n) * n, Cplx{});
}

namespace {
inline void cubic_weights(double t, double w[4]) {
  double t2 = t * t, t3 = t2 * t;
  w[0] = 0.5 * (-t3 + 2 * t2 - t);
  w[1] = 0.5 * (3 * t3 - 5 * t2 + 2);
  w[2] = 0.5 * (-3 * t3 + 4 * t2 + t);
  w[3] = 0.5 * (t3 - t2);
}
}  // namespace

Cplx GridField::eval(DVec2 x) const {
  if (interp == Interp::analytic_closure && closure) return closure(x);
  if (std::fabs(x.x) >= box_half_ || std::fabs(x.y) >= box_half_) return {};
  double gx = (x.x + box_half_) / h(), gy = (x.y + box_half_) / h();
  int ix = static_cast<int>(std::floor(gx)), iy = static_cast<int>(std::floor(gy));
  double wx[4], wy[4];
  cubic_weights(gx - ix, wx);
  cubic_weights(gy - iy, wy);
  Cplx acc{};
  for (int dy = -1; dy <= 2; ++dy) {
    int jy = iy + dy;
    if (jy < 0 || jy >= n_) continue;
    Cplx row{};
    for (int dx = -1; dx <= 2; ++dx) {
      int jx = ix + dx;
      if (jx < 0 || jx >= n_) continue;
      row += wx[dx + 1] * at(jx, jy);
    }
    acc += wy[dy + 1] * row;
  }
  return acc;
}

GridField GridField::sampled(double box_half, int n,
                             const std::function<Cplx(DVec2)>& fn,
                             bool attach_closure) {
  GridField f(box_half, n);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      f.at(ix, iy) = fn({f.coord(ix), f.coord(iy)});
  if (attach_closure) {
    f.interp = Interp::analytic_closure;
    f.closure = fn;
  }
  return f;
}

double GridField::closure_mismatch() const {
  if (!closure) return 0.0;
  double worst = 0.0;
  for (int iy = 0; iy < n_; ++iy)
    for (int ix = 0; ix < n_; ++ix)
      worst = std::max(worst,
                       std::abs(at(ix, iy) - closure({coord(ix), coord(iy)})));
  return worst;
}

double GridField::l2_mass() const {
  double s = 0.0;
  for (const Cplx& z : v_) s += std::norm(z);
  return s * h() * h();
}

double GridField::lp_norm(double p) const {
  double s = 0.0;
  for (const Cplx& z : v_) s += std::pow(std::abs(z), p);
  return std::pow(s * h() * h(), 1.0 / p);
}

Cplx GridField::inner(const GridField& other) const {
  if (other.n_ != n_) throw std::invalid_argument("GridField::inner: size mismatch");
  Cplx s{};
  for (std::size_t i = 0; i < v_.size(); ++i) s += v_[i] * std::conj(other.v_[i]);
  return s * (h() * h());
}

void GridField::save(const std::string& path_base, bool csv) const {
  nlohmann::json hdr;
  hdr["box_half"] = box_half_;
  hdr["n"] = n_;
  hdr["interp"] = interp == Interp::bicubic ? "bicubic" : "analytic-closure";
  hdr["format"] = csv ? "csv" : "bin";
  std::ofstream jf(path_base + ".json");
  jf << hdr.dump(2) << "\n";
  if (csv) {
    std::ofstream cf(path_base + ".csv");
    cf << "i,j,re,im\n";
    char line[96];
    for (int iy = 0; iy < n_; ++iy)
      for (int ix = 0; ix < n_; ++ix) {
        std::snprintf(line, sizeof line, "%d,%d,%.17g,%.17g\n", ix, iy,
                      at(ix, iy).real(), at(ix, iy).imag());
        cf << line;
      }
  } else {
    std::ofstream bf(path_base + ".bin", std::ios::binary);
    bf.write(reinterpret_cast<const char*>(v_.data()),
             static_cast<std::streamsize>(v_.size() * sizeof(Cplx)));
  }
}

GridField GridField::load(const std::string& path_base) {
  std::ifstream jf(path_base + ".json");
  if (!jf) throw std::runtime_error("GridField::load: missing " + path_base + ".json");
  nlohmann::json hdr;
  jf >> hdr;
  GridField f(hdr.at("box_half").get<double>(), hdr.at("n").get<int>());
  std::string fmt = hdr.value("format", "bin");
  if (fmt == "csv") {
    std::ifstream cf(path_base + ".csv");
    if (!cf) throw std::runtime_error("GridField::load: missing csv payload");
    std::string header;
    std::getline(cf, header);
    int i, j;
    double re, im;
    char comma;
    while (cf >> i >> comma >> j >> comma >> re >> comma >> im)
      f.at(i, j) = {re, im};
  } else {
    std::ifstream bf(path_base + ".bin", std::ios::binary);
    if (!bf) throw std::runtime_error("GridField::load: missing bin payload");
    bf.read(reinterpret_cast<char*>(f.raw().data()),
            static_cast<std::streamsize>(f.raw().size() * sizeof(Cplx)));
  }
  return f;
}

double x_sigma_norm(const GridField& f, double sigma) {
  double best = 0.0;
  for (int iy = 0; iy < f.n(); ++iy)
    for (int ix = 0; ix < f.n(); ++ix) {
      double m = std::abs(f.at(ix, iy));
      if (m == 0.0) continue;
      double r2 = f.coord(ix) * f.coord(ix) + f.coord(iy) * f.coord(iy);
      best = std::max(best, std::pow(1.0 + r2, 0.5 * sigma) * m);
    }
  return best;
}

double x_sigma_dist(const GridField& f, const GridField& g, double sigma) {
  if (f.n() != g.n()) throw std::invalid_argument("x_sigma_dist: size mismatch");
  double best = 0.0;
  for (int iy = 0; iy < f.n(); ++iy)
    for (int ix = 0; ix < f.n(); ++ix) {
      double m = std::abs(f.at(ix, iy) - g.at(ix, iy));
      if (m == 0.0) continue;
      double r2 = f.coord(ix) * f.coord(ix) + f.coord(iy) * f.coord(iy);
      best = std::max(best, std::pow(1.0 + r2, 0.5 * sigma) * m);
    }
  return best;
}

Cplx gaussian_profile(DVec2 x) {
  return Cplx{std::exp(-0.5 * x.norm2()) / std::sqrt(kPi), 0.0};
}

CatalogSolution catalog_solution(CatalogProfile which, double box_half, int n,
                                 const QuadratureSpec& quad) {
  std::function<Cplx(DVec2)> fn;
  double r0 = 2.0 * (2.0 * box_half / n);
  switch (which) {
    case CatalogProfile::gaussian:
      fn = gaussian_profile;
      break;
    case CatalogProfile::hermite_e4:
      // h1(x1) h0(x2), mass one
      fn = [](DVec2 x) {
        return Cplx{std::sqrt(2.0 / kPi) * x.x * std::exp(-0.5 * x.norm2()), 0.0};
      };
      break;
    case CatalogProfile::hermite_e6_radial:
      // radial element of the third eigenspace, mass one
      fn = [](DVec2 x) {
        double r2 = x.norm2();
        return Cplx{(1.0 - r2) * std::exp(-0.5 * r2) / std::sqrt(kPi), 0.0};
      };
      break;
    case CatalogProfile::inverse_x:
      fn = [r0](DVec2 x) {
        return Cplx{1.0 / std::max(x.norm(), r0), 0.0};
      };
      break;
  }
  CatalogSolution sol;
  sol.field = GridField::sampled(box_half, n, fn, /*attach_closure=*/true);
  if (which == CatalogProfile::inverse_x) sol.field.pv_exclusion = r0;
  if (which == CatalogProfile::inverse_x) {
    // scale-invariant profile: rate from the ratio at |x| = 1
    DVec2 e1{1.0, 0.0};
    Cplx t = t_apply(sol.field, sol.field, sol.field, e1, quad);
    sol.rotation_rate = t.real() / sol.field.eval(e1).real();
  } else {
    GridField tf = t_apply_field(sol.field, sol.field, sol.field, quad);
    Cplx num = tf.inner(sol.field);
    sol.rotation_rate = num.real() / sol.field.l2_mass();
  }
  return sol;
}

}  // namespace crlab
