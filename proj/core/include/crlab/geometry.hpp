#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace crlab {

using Cplx = std::complex<double>;

/** Integer lattice vector (coordinates of L*K on Z^2). */
struct IVec2 {
  std::int64_t x = 0, y = 0;
  friend IVec2 operator+(IVec2 a, IVec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend IVec2 operator-(IVec2 a, IVec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend IVec2 operator*(std::int64_t s, IVec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(IVec2 a, IVec2 b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(IVec2 a, IVec2 b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  std::int64_t norm2() const { return x * x + y * y; }
  bool zero() const { return x == 0 && y == 0; }
  // counter-clockwise rotation by pi/2
  IVec2 perp() const { return {-y, x}; }
};

struct DVec2 {
  double x = 0.0, y = 0.0;
  friend DVec2 operator+(DVec2 a, DVec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend DVec2 operator-(DVec2 a, DVec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend DVec2 operator*(double s, DVec2 a) { return {s * a.x, s * a.y}; }
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
  DVec2 perp() const { return {-y, x}; }
};

inline double dot(DVec2 a, DVec2 b) { return a.x * b.x + a.y * b.y; }
inline std::int64_t dot(IVec2 a, IVec2 b) { return a.x * b.x + a.y * b.y; }

/** Japanese bracket <x> = sqrt(1+|x|^2). */
inline double jbracket(double r2) { return std::sqrt(1.0 + r2); }
inline double jbracket(DVec2 x) { return jbracket(x.norm2()); }

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kZeta2 = kPi * kPi / 6.0;

}  // namespace crlab
