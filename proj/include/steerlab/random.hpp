#pragma once

#include <cstdint>
#include <random>

#include "steerlab/qmat.hpp"

namespace steerlab {

using Rng = std::mt19937_64;

/// Vector of iid standard complex Gaussians (re and im each N(0,1)).
Vec gaussian_vector(int dim, Rng& rng);

/// Haar-distributed unit vector: normalized complex Gaussian.
Vec haar_unit_vector(int dim, Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phase correction.
Mat haar_unitary(int dim, Rng& rng);

} // namespace steerlab
