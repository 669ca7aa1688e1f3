#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crlab/geometry.hpp"

namespace crlab {

enum class Interp { bicubic, analytic_closure };

/**
 * Complex field on a uniform grid over [-box_half, box_half)^2 with nodes
 * x_i = -box_half + i*h, h = 2*box_half/n (the +box_half edge is excluded,
 * matching the discrete Fourier conventions). Off-grid evaluation uses the
 * analytic closure when one is attached, bicubic interpolation otherwise;
 * both return 0 outside the box.
 */
class GridField {
 public:
  GridField() = default;
  GridField(double box_half, int n);

  double box_half() const { return box_half_; }
  int n() const { return n_; }
  double h() const { return 2.0 * box_half_ / n_; }
  double coord(int i) const { return -box_half_ + i * h(); }

  Cplx& at(int ix, int iy) { return v_[static_cast<std::size_t>(iy) * n_ + ix]; }
  Cplx at(int ix, int iy) const { return v_[static_cast<std::size_t>(iy) * n_ + ix]; }
  std::vector<Cplx>& raw() { return v_; }
  const std::vector<Cplx>& raw() const { return v_; }

  Interp interp = Interp::bicubic;
  std::function<Cplx(DVec2)> closure;  // set iff interp == analytic_closure
  double pv_exclusion = 0.0;  // quadrature skips arguments inside this radius

  /** Point evaluation (closure or bicubic; zero outside the box). */
  Cplx eval(DVec2 x) const;

  /** Fills grid values from fn; optionally attaches it as the closure. */
  static GridField sampled(double box_half, int n,
                           const std::function<Cplx(DVec2)>& fn,
                           bool attach_closure);

  /** Checks node values against the closure (analytic-closure invariant). */
  double closure_mismatch() const;

  double l2_mass() const;       // h^2 sum |f|^2
  double lp_norm(double p) const;
  Cplx inner(const GridField& other) const;  // h^2 sum f conj(g)

  void save(const std::string& path_base, bool csv = false) const;
  static GridField load(const std::string& path_base);

 private:
  double box_half_ = 0.0;
  int n_ = 0;
  std::vector<Cplx> v_;
};

/** max over nodes of <x>^sigma |f(x)|. */
double x_sigma_norm(const GridField& f, double sigma);
double x_sigma_dist(const GridField& f, const GridField& g, double sigma);

/** mass-one Gaussian G(x) = pi^{-1/2} exp(-|x|^2/2). */
Cplx gaussian_profile(DVec2 x);

enum class CatalogProfile { gaussian, hermite_e4, hermite_e6_radial, inverse_x };

struct CatalogSolution {
  GridField field;      // mass-one profile with analytic closure
  double rotation_rate; // omega computed by quadrature at construction
};

/**
 * Stationary-wave catalog. Profiles are L^2-normalized; rotation rates are
 * Rayleigh quotients Re<T(f,f,f),f>/<f,f> computed with the supplied
 * quadrature. The 1/|x| profile is capped at r0 = 2h and tagged with a
 * principal-value exclusion of the same radius.
 */
CatalogSolution catalog_solution(CatalogProfile which, double box_half, int n,
                                 const struct QuadratureSpec& quad);

}  // namespace crlab
