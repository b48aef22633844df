#pragma once

#include <Eigen/Core>

namespace edmd {

/// Moore-Penrose pseudoinverse with a relative singular-value cutoff.
struct PinvResult {
    Eigen::MatrixXcd pinv;
    int rank = 0;          // singular values kept
    int truncated = 0;     // singular values dropped by the cutoff
    double condition = 0;  // sigma_max / sigma_min over the kept values
    double sigma_max = 0;
};

/// SVD-based pseudoinverse; singular values below rel_cutoff * sigma_max are
/// treated as zero. rank == 0 signals a numerically zero matrix.
PinvResult pseudoinverse(const Eigen::MatrixXcd& m, double rel_cutoff);

} // namespace edmd
