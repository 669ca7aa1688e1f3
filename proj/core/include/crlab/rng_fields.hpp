#pragma once

#include <cstdint>

#include "crlab/grid_field.hpp"

namespace crlab {

/**
 * Seeded random smooth decaying test field: a Hermite-band series with
 * geometrically damped complex-normal coefficients (Schwartz-class, so the
 * X^sigma and quadrature tails are controlled). Closure-backed, optionally
 * mass-one.
 */
GridField random_hermite_field(std::uint64_t seed, double box_half, int n,
                               int band = 10, double damp = 0.55,
                               bool unit_mass = true);

}  // namespace crlab
