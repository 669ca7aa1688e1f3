#include "crlab/integrator.hpp"

#include <cmath>
#include <stdexcept>

#include "crlab/spectral.hpp"
#include "crlab/t_operator.hpp"

namespace crlab {

CrFlow::CrFlow(double box_half, int n, Integrator integ)
    : integ_(integ), lens_(box_half, n, integ.lens) {
  if (integ_.dt <= 0.0) throw std::invalid_argument("CrFlow: dt must be > 0");
}

GridField CrFlow::rhs_t(const GridField& g) const {
  if (integ_.rhs == RhsKind::lens) return lens_.apply(g);
  return t_apply_field(g, g, g, integ_.quad);
}

std::vector<Cplx> CrFlow::rhs_coeffs(const std::vector<Cplx>& c) const {
  std::vector<Cplx> t = lens_.apply_coeffs(c);
  for (Cplx& z : t) z *= Cplx(0.0, 1.0);  // dg/dt = i T(g,g,g)
  return t;
}

namespace {

std::vector<Cplx> axpy(const std::vector<Cplx>& x, double a,
                       const std::vector<Cplx>& y) {
  std::vector<Cplx> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + a * y[i];
  return r;
}

double coeff_mass(const std::vector<Cplx>& c) {
  double s = 0.0;
  for (const Cplx& z : c) s += std::norm(z);
  return s;
}

}  // namespace

GridField CrFlow::step(const GridField& g) const {
  if (integ_.rhs == RhsKind::quadrature) {
    double dt = integ_.dt;
    auto rhs = [&](const GridField& f) {
      GridField t = t_apply_field(f, f, f, integ_.quad);
      for (Cplx& z : t.raw()) z *= Cplx(0.0, 1.0);
      return t;
    };
    GridField k1 = rhs(g);
    GridField u2 = g;
    for (std::size_t i = 0; i < u2.raw().size(); ++i)
      u2.raw()[i] += 0.5 * dt * k1.raw()[i];
    GridField k2 = rhs(u2);
    GridField u3 = g;
    for (std::size_t i = 0; i < u3.raw().size(); ++i)
      u3.raw()[i] += 0.5 * dt * k2.raw()[i];
    GridField k3 = rhs(u3);
    GridField u4 = g;
    for (std::size_t i = 0; i < u4.raw().size(); ++i)
      u4.raw()[i] += dt * k3.raw()[i];
    GridField k4 = rhs(u4);
    GridField out = g;
    for (std::size_t i = 0; i < out.raw().size(); ++i)
      out.raw()[i] += dt / 6.0 * (k1.raw()[i] + 2.0 * (k2.raw()[i] + k3.raw()[i]) +
                                  k4.raw()[i]);
    return out;
  }
  const HermiteTransform& ht = lens_.transform();
  std::vector<Cplx> c = ht.analyze(g);
  double dt = integ_.dt;
  std::vector<Cplx> k1 = rhs_coeffs(c);
  std::vector<Cplx> k2 = rhs_coeffs(axpy(c, 0.5 * dt, k1));
  std::vector<Cplx> k3 = rhs_coeffs(axpy(c, 0.5 * dt, k2));
  std::vector<Cplx> k4 = rhs_coeffs(axpy(c, dt, k3));
  std::vector<Cplx> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out[i] = c[i] + dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
  double m0 = coeff_mass(c), m1 = coeff_mass(out);
  double guard = integ_.mass_guard > 0.0
                     ? integ_.mass_guard
                     : 10.0 * std::pow(dt, 5) + 1e-12;
  if (m0 > 0.0 && std::fabs(m1 - m0) / m0 > guard)
    throw std::runtime_error("CrFlow::step: mass drift exceeded the guard");
  return ht.synthesize(out);
}

Trajectory CrFlow::evolve(const GridField& g0, double t_final) const {
  const HermiteTransform& ht = lens_.transform();
  Trajectory traj;
  std::vector<Cplx> c = ht.analyze(g0);
  traj.hermite_edge_fraction = ht.edge_fraction(c);
  double dt = integ_.dt;
  long nsteps = std::lround(t_final / dt);
  if (std::fabs(nsteps * dt - t_final) > 1e-9 * std::max(1.0, t_final))
    nsteps = static_cast<long>(std::ceil(t_final / dt));
  double guard = integ_.mass_guard > 0.0
                     ? integ_.mass_guard
                     : 10.0 * std::pow(dt, 5) + 1e-12;
  double m_prev = coeff_mass(c);

  auto record_ledger = [&](double t) {
    GridField g = ht.synthesize(c);
    std::vector<Cplx> tc = lens_.apply_coeffs(c);
    GridField tg = ht.synthesize(tc);
    traj.ledger.push_back({t, conserved(g, tg)});
  };
  auto record_snapshot = [&](double t) {
    traj.times.push_back(t);
    traj.snapshots.push_back(ht.synthesize(c));
  };

  record_ledger(0.0);
  record_snapshot(0.0);
  for (long s = 1; s <= nsteps; ++s) {
    std::vector<Cplx> k1 = rhs_coeffs(c);
    std::vector<Cplx> k2 = rhs_coeffs(axpy(c, 0.5 * dt, k1));
    std::vector<Cplx> k3 = rhs_coeffs(axpy(c, 0.5 * dt, k2));
    std::vector<Cplx> k4 = rhs_coeffs(axpy(c, dt, k3));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] += dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    double m = coeff_mass(c);
    if (m_prev > 0.0 && std::fabs(m - m_prev) / m_prev > guard)
      throw std::runtime_error("CrFlow::evolve: mass drift exceeded the guard");
    m_prev = m;
    double t = s * dt;
    if (integ_.ledger_every > 0 && (s % integ_.ledger_every == 0 || s == nsteps))
      record_ledger(t);
    if ((integ_.snapshot_every > 0 && s % integ_.snapshot_every == 0) ||
        s == nsteps)
      record_snapshot(t);
  }
  return traj;
}

double CrFlow::fourier_commutation_check(const GridField& g0,
                                         double t_final) const {
  Trajectory a = evolve(g0, t_final);
  GridField ghat0 = fourier(g0);
  Integrator dual_cfg = integ_;
  CrFlow dual(ghat0.box_half(), ghat0.n(), dual_cfg);
  Trajectory b = dual.evolve(ghat0, t_final);
  GridField lhs = fourier(a.snapshots.back());
  return l2_dist(lhs, b.snapshots.back());
}

}  // namespace crlab
