#include "crlab/approx.hpp"

#include <cmath>
#include <stdexcept>

#include "crlab/integrator.hpp"
#include "crlab/parallel.hpp"
#include "crlab/spectral.hpp"
#include "crlab/t_operator.hpp"
#include "crlab/tl_operator.hpp"

namespace crlab {

std::vector<GapPoint> tl_vs_t_gap_gaussian(const std::vector<int>& Ls,
                                           double sigma, double kmax_phys,
                                           double sample_step) {
  std::vector<GapPoint> out;
  for (int L : Ls) {
    LatticeParams p{L, kmax_phys, sigma};
    p.validate(true);
    // sample K on the step grid, restricted to lattice points
    std::vector<DVec2> samples;
    for (double ky = 0.0; ky <= kmax_phys; ky += sample_step)
      for (double kx = 0.0; kx <= kmax_phys; kx += sample_step) {
        if (kx * kx + ky * ky > kmax_phys * kmax_phys) continue;
        double sx = kx * L, sy = ky * L;
        if (std::fabs(sx - std::nearbyint(sx)) > 1e-9 ||
            std::fabs(sy - std::nearbyint(sy)) > 1e-9)
          continue;
        samples.push_back({kx, ky});  // symmetry: G is radial, quadrant suffices
      }
    std::vector<double> vals(samples.size(), 0.0);
    parallel_for(samples.size(), [&](std::size_t i) {
      DVec2 K = samples[i];
      double tl = tl_gaussian_trace(p, K);
      double t = 0.5 * kPi * gaussian_profile(K).real();
      vals[i] = std::pow(1.0 + K.norm2(), 0.5 * sigma) * std::fabs(tl - t);
    });
    double gap = 0.0;
    for (double v : vals) gap = std::max(gap, v);
    out.push_back({L, gap, gap * std::log(double(L))});
  }
  return out;
}

double tl_vs_t_gap(const GridField& g, const LatticeParams& p,
                   const QuadratureSpec& quad, double sample_step) {
  p.validate(true);
  auto eval = [&](DVec2 K) { return g.eval(K); };
  LatticeField trace = LatticeField::trace_of(p, eval);
  LatticeField tl = (p.L <= 8) ? t_l_apply(trace, trace, trace)
                               : t_l_apply_fast(trace, trace, trace);
  std::vector<IVec2> samples;
  std::int64_t stride = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::nearbyint(sample_step * p.L)));
  for (std::int64_t ky = -p.kmax(); ky <= p.kmax(); ky += stride)
    for (std::int64_t kx = -p.kmax(); kx <= p.kmax(); kx += stride)
      if (p.in_ball({kx, ky})) samples.push_back({kx, ky});
  std::vector<double> vals(samples.size(), 0.0);
  parallel_for(samples.size(), [&](std::size_t i) {
    IVec2 k = samples[i];
    DVec2 K = p.to_K(k);
    Cplx t = t_apply(g, g, g, K, quad);
    vals[i] = std::pow(1.0 + K.norm2(), 0.5 * p.sigma) * std::abs(t - tl.at(k));
  });
  double gap = 0.0;
  for (double v : vals) gap = std::max(gap, v);
  return gap;
}

namespace {

LatticeField lattice_from_coeffs(const HermiteTransform& ht,
                                 const std::vector<Cplx>& c,
                                 const LatticeParams& p) {
  std::int64_t R = p.kmax();
  std::vector<double> xs(static_cast<std::size_t>(2 * R + 1));
  for (std::int64_t i = -R; i <= R; ++i)
    xs[static_cast<std::size_t>(i + R)] = double(i) / p.L;
  std::vector<Cplx> vals = ht.synthesize_points(c, xs, xs);
  LatticeField f(p);
  for (std::int64_t ky = -R; ky <= R; ++ky)
    for (std::int64_t kx = -R; kx <= R; ++kx) {
      IVec2 k{kx, ky};
      if (!p.in_ball(k)) continue;
      // synthesize_points is [x][y]
      f.set(k, vals[static_cast<std::size_t>(kx + R) * (2 * R + 1) +
                    static_cast<std::size_t>(ky + R)]);
    }
  return f;
}

}  // namespace

ApproxReport approx_experiment(const ApproxRun& run, const NlsConfig& cfg,
                               const std::vector<double>& taus,
                               double compare_cutoff, bool rs_fast) {
  cfg.validate();
  if (taus.empty()) throw std::invalid_argument("approx_experiment: no sample times");
  ApproxReport rep;
  rep.cfg = cfg;
  rep.t_star = cfg.t_star();
  rep.compare_cutoff = compare_cutoff;

  // --- CR leg (Hermite-band flow), B recomputed along the way ---
  Integrator integ;
  integ.dt = std::min(0.01, taus.back() / 4.0);
  integ.ledger_every = 0;
  CrFlow flow(run.g0.box_half(), run.g0.n(), integ);
  const HermiteTransform& ht = flow.lens().transform();
  LatticeParams cmp{cfg.L, compare_cutoff, run.sigma};

  double B = 0.0;
  auto measure_b = [&](const GridField& g) {
    double bx = x_sigma_norm(g, run.sigma + 1.0) +
                x_sigma_norm(spectral_dx(g), run.sigma + 1.0) +
                x_sigma_norm(spectral_dy(g), run.sigma + 1.0);
    B = std::max(B, bx);
  };
  measure_b(run.g0);
  std::vector<LatticeField> cr_traces;
  {
    GridField g = run.g0;
    double tau_prev = 0.0;
    for (double tau : taus) {
      double span = tau - tau_prev;
      if (span > 0.0) {
        Integrator seg = integ;
        int nst = std::max(1, static_cast<int>(std::ceil(span / integ.dt)));
        seg.dt = span / nst;
        CrFlow sflow(run.g0.box_half(), run.g0.n(), seg);
        Trajectory tr = sflow.evolve(g, span);
        g = tr.snapshots.back();
      }
      measure_b(g);
      cr_traces.push_back(lattice_from_coeffs(ht, ht.analyze(g), cmp));
      tau_prev = tau;
    }
  }
  rep.B = B;
  rep.regime_ratio = cfg.eps * std::pow(double(cfg.L), 1.0 + run.gamma) * B;
  rep.avg_ratio = cfg.eps * cfg.eps * double(cfg.L) * cfg.L;
  rep.outside_regime = rep.regime_ratio > 1.0;

  // --- NLS leg ---
  SplitStepper stepper(cfg);
  auto g0c = run.g0.closure ? run.g0.closure
                            : std::function<Cplx(DVec2)>(
                                  [&](DVec2 x) { return run.g0.eval(x); });
  SplitStepper::State a = stepper.from_profile(g0c);
  double mass0 = stepper.l2_mass(a);
  LatticeField free_trace = LatticeField::trace_of(cmp, g0c);

  // --- RS leg (chained between sample times) ---
  LatticeField b = LatticeField::trace_of(cmp, g0c);
  RsOptions ropt;
  ropt.fast = rs_fast;

  double t_now = 0.0, tau_prev = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    double t_target = taus[i] * rep.t_star;
    long nst = std::lround((t_target - t_now) / cfg.dt_lin);
    double dt = nst > 0 ? (t_target - t_now) / nst : 0.0;
    for (long s = 0; s < nst; ++s) stepper.step(a, dt);
    t_now = t_target;
    // resonant system in the bassan time t_b = tau / eps^2
    double tb_span = (taus[i] - tau_prev) / (cfg.eps * cfg.eps);
    if (tb_span > 0.0) {
      RsOptions seg = ropt;
      seg.steps = std::max(2, static_cast<int>(std::ceil((taus[i] - tau_prev) / 5e-3)));
      b = rs_evolve(b, cfg.eps, tb_span, seg);
    }
    tau_prev = taus[i];

    SplitStepper::State prof = stepper.interaction_profile(a, t_now);
    LatticeField atilde = stepper.to_lattice(prof, compare_cutoff, run.sigma);
    ApproxSample smp;
    smp.tau = taus[i];
    smp.t_abs = t_now;
    smp.err_cr = x_sigma_dist_lattice(atilde, cr_traces[i], run.sigma);
    smp.err_rs = x_sigma_dist_lattice(atilde, b, run.sigma);
    smp.err_free = x_sigma_dist_lattice(atilde, free_trace, run.sigma);
    smp.rs_cr_gap = x_sigma_dist_lattice(b, cr_traces[i], run.sigma);
    smp.mass_drift = std::fabs(stepper.l2_mass(a) - mass0) / mass0;
    smp.alias_fraction = stepper.alias_fraction(a);
    rep.samples.push_back(smp);
  }
  return rep;
}

RescaleSetup unit_torus_rescale(const GridField& g0, int N, double s,
                                double kmax_phys) {
  if (s <= 1.0)
    throw std::invalid_argument("unit_torus_rescale: s > 1 required");
  if (N < 2) throw std::invalid_argument("unit_torus_rescale: N >= 2");
  RescaleSetup rs;
  rs.N = N;
  rs.s = s;
  rs.T_N = kZeta2 * std::pow(double(N), 2.0 * s) / (2.0 * std::log(double(N)));
  int modes = static_cast<int>(std::ceil(kmax_phys * N));
  rs.box_cfg = NlsConfig{N, std::pow(double(N), -s), +1, modes, 1e-3};
  rs.unit_cfg = NlsConfig{1, 1.0, +1, modes, 1e-3 / (double(N) * N)};
  int side = 2 * modes + 1;
  rs.v0_hat.assign(static_cast<std::size_t>(side) * side, Cplx{});
  double amp = std::pow(double(N), -s - 1.0);
  double hs2 = 0.0;
  for (int ky = -modes; ky <= modes; ++ky)
    for (int kx = -modes; kx <= modes; ++kx) {
      Cplx v = amp * g0.eval({double(kx) / N, double(ky) / N});
      rs.v0_hat[static_cast<std::size_t>(ky + modes) * side + kx + modes] = v;
      hs2 += std::pow(1.0 + double(kx) * kx + double(ky) * ky, s) * std::norm(v);
    }
  rs.v0_hs_norm = std::sqrt(hs2);
  // continuum norm || <xi>^s g0 ||_2 by Riemann sum on a fine grid
  double cont = 0.0;
  const int nn = 400;
  double H = 2.0 * kmax_phys / nn;
  for (int iy = 0; iy < nn; ++iy)
    for (int ix = 0; ix < nn; ++ix) {
      DVec2 x{-kmax_phys + (ix + 0.5) * H, -kmax_phys + (iy + 0.5) * H};
      cont += std::pow(1.0 + x.norm2(), s) * std::norm(g0.eval(x)) * H * H;
    }
  rs.g0_hs_norm = std::sqrt(cont);
  return rs;
}

PhaseProbeReport phase_shift_probe(int N, double s, double t_final_box,
                                   int samples, double dt, bool disable_nl) {
  PhaseProbeReport rep;
  double kmax_phys = 2.5;
  NlsConfig cfg{N, std::pow(double(N), -s), +1,
                static_cast<int>(std::ceil(kmax_phys * N)), dt};
  if (disable_nl) cfg.eps = 1e-300;  // free flow
  SplitStepper st(cfg);
  SplitStepper::State a = st.from_profile(gaussian_profile);
  SplitStepper::State a0 = a;
  double mass0 = st.l2_mass(a);
  double T_N = kZeta2 * std::pow(double(N), 2.0 * s) / (2.0 * std::log(double(N)));
  rep.C_pred = 0.5 * kPi / T_N;

  // least-squares slope of the aggregated profile phase
  double sum_t2 = 0.0, sum_ty = 0.0, t_now = 0.0;
  for (int j = 1; j <= samples; ++j) {
    double t_target = t_final_box * j / samples;
    long nst = std::lround((t_target - t_now) / dt);
    for (long q = 0; q < nst; ++q) st.step(a, dt);
    t_now = t_target;
    SplitStepper::State prof = st.interaction_profile(a, t_now);
    Cplx corr{};
    for (std::size_t i = 0; i < prof.size(); ++i)
      corr += prof[i] * std::conj(a0[i]);
    double theta = std::arg(corr);
    sum_t2 += t_now * t_now;
    sum_ty += t_now * theta;
  }
  double slope_box = sum_ty / sum_t2;  // omega0 / T* in box time
  rep.C_fit = slope_box * double(N) * N;  // unit-torus time units
  rep.rel_err = std::fabs(rep.C_fit - rep.C_pred) /
                std::max(rep.C_pred, 1e-300);
  rep.mass_drift = std::fabs(st.l2_mass(a) - mass0) / mass0;
  return rep;
}

}  // namespace crlab
