#pragma once

#include "crlab/grid_field.hpp"
#include "crlab/quadrature.hpp"

namespace crlab {

/**
 * Continuous resonant trilinear operator
 *   T(f,g,h)(xi) = int_{-1}^{1} int_{R^2} f(xi+z) conj(g(xi+z+l*z_perp))
 *                  h(xi+l*z_perp) dz dl
 * evaluated at one point by the configured tensor Gauss-Legendre rule.
 * Fields carrying a pv_exclusion radius have quadrature nodes whose
 * arguments land inside that radius skipped.
 */
Cplx t_apply(const GridField& f, const GridField& g, const GridField& h,
             DVec2 at, const QuadratureSpec& quad);

/** t_apply at every grid node (parallel over rows of f's grid). */
GridField t_apply_field(const GridField& f, const GridField& g,
                        const GridField& h, const QuadratureSpec& quad);

/**
 * Rotation rate of the Gaussian stationary wave:
 * t_apply(G,G,G)(0) / G(0). Reference value pi/2.
 */
double gaussian_omega0(const QuadratureSpec& quad);

}  // namespace crlab
