#include "edmd/edmd.hpp"

#include <cmath>
#include <complex>

#include "edmd/errors.hpp"
#include "edmd/linalg.hpp"

namespace edmd {

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> build_gram_matrices(
    const Dictionary& dict, const SampleSet& samples,
    const kernels::KernelOptions& options) {
    const DataMatrix X = evaluate_dictionary(dict, samples);
    const DataMatrix Y = evaluate_dictionary_on_images(dict, samples);

    Eigen::MatrixXcd G, H;
    kernels::pair_sums(Y, X, G, options);
    kernels::pair_sums(X, X, H, options);
    return {std::move(G), std::move(H)};
}

EdmdMatrices assemble_edmd(Eigen::MatrixXcd G, Eigen::MatrixXcd H,
                           double rel_cutoff) {
    if (G.rows() != H.rows() || G.cols() != H.cols()) {
        throw DimensionMismatch("assemble_edmd: G and H must have equal shape");
    }
    PinvResult p = pseudoinverse(H, rel_cutoff);
    if (p.rank == 0) {
        throw SingularGram("all singular values of H fall below the cutoff");
    }

    EdmdMatrices out;
    out.A = G * p.pinv;
    out.G = std::move(G);
    out.H = std::move(H);
    out.pinv = PinvInfo{rel_cutoff, p.truncated, p.condition};
    return out;
}

Eigen::MatrixXcd least_squares_edmd(const DataMatrix& X, const DataMatrix& Y,
                                    double rel_cutoff) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols()) {
        throw DimensionMismatch("least_squares_edmd: X and Y must have equal shape");
    }
    PinvResult p = pseudoinverse(X, rel_cutoff);
    if (p.rank == 0) {
        throw SingularData("data matrix X has numerical rank zero");
    }
    return Y * p.pinv;
}

OperatorMatrix transfer_matrix_quadrature(const MapSpec& map,
                                          const Dictionary& dict,
                                          std::size_t m,
                                          const kernels::KernelOptions& options) {
    if (!map.is_circle() || dict.dimension != 1) {
        throw DimensionMismatch(
            "transfer_matrix_quadrature handles 1-d maps; use the lattice "
            "Gram matrices for torus maps");
    }
    // Same sum as G on the equidistant grid.
    const SampleSet grid = equidistant_circle_nodes(map, m);
    auto [G, H] = build_gram_matrices(dict, grid, options);
    (void)H;
    return OperatorMatrix{std::move(G), m, OperatorRepresentation::RawTransfer};
}

OperatorMatrix galerkin_representation(const OperatorMatrix& raw) {
    if (raw.representation != OperatorRepresentation::RawTransfer) {
        throw DomainError("galerkin_representation expects a raw transfer matrix");
    }
    OperatorMatrix out;
    out.entries = raw.entries.colwise().reverse();
    out.quadrature_nodes = raw.quadrature_nodes;
    out.representation = OperatorRepresentation::Galerkin;
    return out;
}

OperatorMatrix transfer_apply_inverse_branches(const MapSpec& map,
                                               const Dictionary& dict,
                                               std::size_t m) {
    if (!map.is_circle() || dict.dimension != 1) {
        throw DimensionMismatch("transfer_apply_inverse_branches requires a 1-d map");
    }
    const auto& params = map.blaschke();
    const auto n = static_cast<Eigen::Index>(dict.size());
    const auto nodes = static_cast<Eigen::Index>(m);

    // applied(m, l) = (L psi_l)(z_m) as a weighted sum over the preimages.
    Eigen::MatrixXcd applied = Eigen::MatrixXcd::Zero(nodes, n);
    for (Eigen::Index i = 0; i < nodes; ++i) {
        const double phi = kTwoPi * static_cast<double>(i) / static_cast<double>(m);
        const Complex z = std::polar(1.0, phi);
        for (const Complex branch : inverse_branches(params, z)) {
            const Complex weight = z / (blaschke_derivative(params, branch) * branch);
            for (Eigen::Index l = 0; l < n; ++l) {
                const int mode = dict.modes[static_cast<std::size_t>(l)][0];
                applied(i, l) += weight * std::pow(branch, mode);
            }
        }
    }

    // Project back onto the modes: entry (k, l) is the k-th Fourier
    // coefficient of (L psi_l) under the same m-point rule.
    Eigen::MatrixXcd out(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const int mode = dict.modes[static_cast<std::size_t>(k)][0];
        for (Eigen::Index l = 0; l < n; ++l) {
            Complex acc(0.0, 0.0);
            for (Eigen::Index i = 0; i < nodes; ++i) {
                const double phi =
                    kTwoPi * static_cast<double>(i) / static_cast<double>(m);
                acc += std::polar(1.0, -mode * phi) * applied(i, l);
            }
            out(k, l) = acc / static_cast<double>(m);
        }
    }
    return OperatorMatrix{std::move(out), m, OperatorRepresentation::Galerkin};
}

} // namespace edmd
