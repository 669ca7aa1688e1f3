#include "crlab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace crlab {

namespace {

// FFTW_ESTIMATE keeps plan selection deterministic run to run
class PlanCache {
 public:
  static PlanCache& get() {
    static PlanCache pc;
    return pc;
  }

  void run2(std::vector<Cplx>& data, int n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(n, sign);
    auto it = plans2_.find(pack(n, sign));
    if (it == plans2_.end()) {
      fftw_plan p = fftw_plan_dft_2d(
          n, n, reinterpret_cast<fftw_complex*>(data.data()),
          reinterpret_cast<fftw_complex*>(data.data()), sign,
          FFTW_ESTIMATE | FFTW_UNALIGNED);
      it = plans2_.emplace(pack(n, sign), p).first;
    }
    (void)key;
    fftw_execute_dft(it->second,
                     reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
  }

  void run1(std::vector<Cplx>& data, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    int n = static_cast<int>(data.size());
    auto it = plans1_.find(pack(n, sign));
    if (it == plans1_.end()) {
      fftw_plan p = fftw_plan_dft_1d(
          n, reinterpret_cast<fftw_complex*>(data.data()),
          reinterpret_cast<fftw_complex*>(data.data()), sign,
          FFTW_ESTIMATE | FFTW_UNALIGNED);
      it = plans1_.emplace(pack(n, sign), p).first;
    }
    fftw_execute_dft(it->second,
                     reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
  }

 private:
  static long long pack(int n, int sign) { return 2LL * n + (sign > 0 ? 1 : 0); }
  std::unordered_map<long long, fftw_plan> plans2_, plans1_;
  std::mutex mu_;
};

}  // namespace

void fft2_forward(std::vector<Cplx>& data, int n) {
  PlanCache::get().run2(data, n, FFTW_FORWARD);
}
void fft2_inverse(std::vector<Cplx>& data, int n) {
  PlanCache::get().run2(data, n, FFTW_BACKWARD);
}
void fft1_forward(std::vector<Cplx>& data) { PlanCache::get().run1(data, FFTW_FORWARD); }
void fft1_inverse(std::vector<Cplx>& data) { PlanCache::get().run1(data, FFTW_BACKWARD); }

namespace {

GridField transform_impl(const GridField& f, bool inverse) {
  int n = f.n();
  double h = f.h();
  std::vector<Cplx> buf = f.raw();
  // checkerboard phases realize the centered-index DFT
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      if ((ix + iy) & 1) buf[static_cast<std::size_t>(iy) * n + ix] *= -1.0;
  if (inverse)
    fft2_inverse(buf, n);
  else
    fft2_forward(buf, n);
  // dual grid: spacing dxi = 2*pi/(n*h); both directions scale by h^2/(2*pi)
  double dxi = 2.0 * kPi / (n * h);
  double scale = h * h / (2.0 * kPi);
  GridField out(0.5 * n * dxi, n);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      Cplx v = buf[static_cast<std::size_t>(iy) * n + ix] * scale;
      if ((ix + iy) & 1) v *= -1.0;
      out.at(ix, iy) = v;
    }
  return out;
}

}  // namespace

GridField fourier(const GridField& f) { return transform_impl(f, false); }

GridField fourier_inverse(const GridField& fhat) {
  // dual of the dual grid is the original: spacing h = 2*pi/(n*dxi)
  return transform_impl(fhat, true);
}

namespace {

GridField spectral_deriv(const GridField& f, bool ydir) {
  int n = f.n();
  std::vector<Cplx> buf = f.raw();
  fft2_forward(buf, n);
  double base = kPi / f.box_half();  // 2*pi / (2*box_half)
  for (int iy = 0; iy < n; ++iy) {
    int my = iy < n / 2 ? iy : iy - n;
    for (int ix = 0; ix < n; ++ix) {
      int mx = ix < n / 2 ? ix : ix - n;
      int m = ydir ? my : mx;
      double kk = (std::abs(m) == n / 2) ? 0.0 : base * m;  // drop Nyquist
      buf[static_cast<std::size_t>(iy) * n + ix] *= Cplx{0.0, kk};
    }
  }
  fft2_inverse(buf, n);
  GridField out(f.box_half(), n);
  double inv = 1.0 / (static_cast<double>(n) * n);
  for (std::size_t i = 0; i < buf.size(); ++i) out.raw()[i] = buf[i] * inv;
  return out;
}

}  // namespace

GridField spectral_dx(const GridField& f) { return spectral_deriv(f, false); }
GridField spectral_dy(const GridField& f) { return spectral_deriv(f, true); }

double l2_dist(const GridField& f, const GridField& g) {
  if (f.n() != g.n()) throw std::invalid_argument("l2_dist: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < f.raw().size(); ++i)
    s += std::norm(f.raw()[i] - g.raw()[i]);
  return std::sqrt(s) * f.h();
}

}  // namespace crlab
