#pragma once

#include <cstddef>
#include <utility>

#include <Eigen/Core>

#include "edmd/kernels.hpp"
#include "edmd/observables.hpp"
#include "edmd/sampling.hpp"

namespace edmd {

/// Default relative singular-value cutoff for pseudoinverses. Grid sampling
/// yields an orthogonal (perfectly conditioned) H; trajectory sampling does
/// not, hence the truncation policy.
inline constexpr double kDefaultPinvCutoff = 1e-10;

struct PinvInfo {
    double rel_cutoff = kDefaultPinvCutoff;
    int truncated = 0;
    double condition = 0.0;
};

/// The three matrices of the decomposition, A = G * pinv(H), plus metadata
/// about the H inversion.
struct EdmdMatrices {
    Eigen::MatrixXcd G;
    Eigen::MatrixXcd H;
    Eigen::MatrixXcd A;
    PinvInfo pinv;
};

/// G(k,l) = (1/M) sum_m psi_k(tau(z_m)) psi_l(z_m) and
/// H(k,l) = (1/M) sum_m psi_k(z_m) psi_l(z_m), with no complex conjugation
/// of psi_l; the dictionary's closure under negation makes this equivalent
/// to the Hermitian form. Summation ascends in m.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> build_gram_matrices(
    const Dictionary& dict, const SampleSet& samples,
    const kernels::KernelOptions& options = {});

/// A = G * pinv(H) with a relative singular-value cutoff. Throws
/// SingularGram when every singular value of H falls below the cutoff.
EdmdMatrices assemble_edmd(Eigen::MatrixXcd G, Eigen::MatrixXcd H,
                           double rel_cutoff = kDefaultPinvCutoff);

/// Least-squares route A = Y * pinv(X), the minimizer of ||A X - Y||_F.
/// Throws SingularData when X has numerical rank zero. Coincides with
/// assemble_edmd on the paired Gram matrices whenever H has full rank.
Eigen::MatrixXcd least_squares_edmd(const DataMatrix& X, const DataMatrix& Y,
                                    double rel_cutoff = kDefaultPinvCutoff);

enum class OperatorRepresentation {
    RawTransfer, // entries L(k,l) straight from the quadrature rule
    Galerkin     // row-reversed entries L(-k,l)
};

/// Matrix elements of the transfer operator in the Fourier basis, together
/// with the quadrature node count that produced them.
struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    std::size_t quadrature_nodes = 0;
    OperatorRepresentation representation = OperatorRepresentation::RawTransfer;
};

/// L(k,l) = (1/2 pi) int psi_k(tau(exp(i phi))) psi_l(exp(i phi)) d phi,
/// approximated by the m-point equal-weight rule on the equidistant grid.
/// The rule converges exponentially in m for analytic maps, and the matrix
/// is the same sum as G on the grid samples.
OperatorMatrix transfer_matrix_quadrature(
    const MapSpec& map, const Dictionary& dict, std::size_t m,
    const kernels::KernelOptions& options = {});

/// Row-index reversal M(k,l) = L(-k,l): the matrix of the projected
/// transfer operator whose eigenvalues converge to the operator spectrum.
OperatorMatrix galerkin_representation(const OperatorMatrix& raw);

/// Independent construction of the same Galerkin matrix through the inverse
/// branches: evaluates the transfer operator applied to each basis mode,
///   (L f)(z) = sum_j w_j(z) f(phi_j(z)),   w_j(z) = z phi_j'(z) / phi_j(z),
/// on the m-point grid and projects back onto the modes with the same
/// quadrature rule. On the circle w_j equals 1/|tau'| at the preimage, the
/// transfer-operator weight for arc length; branch derivatives come from the
/// closed form phi_j'(z) = 1/tau'(phi_j(z)).
OperatorMatrix transfer_apply_inverse_branches(const MapSpec& map,
                                               const Dictionary& dict,
                                               std::size_t m);

} // namespace edmd
