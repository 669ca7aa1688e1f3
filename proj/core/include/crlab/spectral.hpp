#pragma once

#include "crlab/grid_field.hpp"

namespace crlab {

/** In-place unnormalized 2D FFTs with cached plans (sizes may differ). */
void fft2_forward(std::vector<Cplx>& data, int n);
void fft2_inverse(std::vector<Cplx>& data, int n);
void fft1_forward(std::vector<Cplx>& data);
void fft1_inverse(std::vector<Cplx>& data);

/**
 * Continuum Fourier transform on the grid, convention
 *   fhat(xi) = (2 pi)^{-1} int e^{-i x.xi} f(x) dx,
 * discretized so Plancherel holds exactly. The result lives on the dual
 * grid: same n, box_half' = pi * n / (2 * box_half) ... i.e. spacing
 * dxi = pi / box_half. Applying it twice returns the parity-reflected field
 * on the original grid.
 */
GridField fourier(const GridField& f);

/** Inverse of the above (e^{+i x.xi} convention). */
GridField fourier_inverse(const GridField& fhat);

/** Spectral partial derivatives (periodic; fields must decay at the edge). */
GridField spectral_dx(const GridField& f);
GridField spectral_dy(const GridField& f);

/** l2 norm of f - g on a shared grid. */
double l2_dist(const GridField& f, const GridField& g);

}  // namespace crlab
