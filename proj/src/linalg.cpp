#include "edmd/linalg.hpp"

#include <Eigen/SVD>

namespace edmd {

PinvResult pseudoinverse(const Eigen::MatrixXcd& m, double rel_cutoff) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();

    PinvResult result;
    if (sv.size() == 0) return result;
    result.sigma_max = sv(0);
    const double cutoff = rel_cutoff * sv(0);

    Eigen::VectorXd inv_sv = Eigen::VectorXd::Zero(sv.size());
    double sigma_min_kept = 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff && sv(i) > 0.0) {
            inv_sv(i) = 1.0 / sv(i);
            sigma_min_kept = sv(i); // singular values are ordered descending
            ++result.rank;
        } else {
            ++result.truncated;
        }
    }
    if (result.rank > 0) {
        result.condition = result.sigma_max / sigma_min_kept;
        result.pinv = svd.matrixV() * inv_sv.asDiagonal() *
                      svd.matrixU().adjoint();
    }
    return result;
}

} // namespace edmd
