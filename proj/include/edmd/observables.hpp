#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "edmd/dynamics.hpp"
#include "edmd/sampling.hpp"

namespace edmd {

/// Row-major N x M matrix of observable evaluations; row index = mode,
/// column index = sample. Row-major keeps each mode's samples contiguous
/// for the accumulation kernels.
using DataMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Fourier mode dictionary. 1-d: indices (k, 0) for k = -nbar..nbar
/// ascending, N = 2 nbar + 1. 2-d: row-major grid (k1, k2) over
/// {-nbar..nbar}^2, N = (2 nbar + 1)^2. Symmetric under negation, so the
/// dictionary is closed under complex conjugation on the circle/torus.
struct Dictionary {
    int dimension = 1;
    int nbar = 0;
    std::vector<std::array<int, 2>> modes;

    std::size_t size() const { return modes.size(); }
};

Dictionary fourier_dictionary(int nbar, int dimension);

/// Entry (k, m) = exp(i <mode_k, phi_m>): z^k on the circle,
/// exp(i (k1 p1 + k2 p2)) on the torus. Every entry has unit modulus.
DataMatrix evaluate_dictionary(const Dictionary& dict, const SampleSet& samples);

/// Same, evaluated on the images tau(z_m) instead of the points.
DataMatrix evaluate_dictionary_on_images(const Dictionary& dict,
                                         const SampleSet& samples);

} // namespace edmd
