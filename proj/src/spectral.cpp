#include "edmd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "edmd/errors.hpp"

namespace edmd {

bool spectrum_order_less(Complex a, Complex b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma > mb;
    const double aa = std::abs(std::arg(a));
    const double ab = std::abs(std::arg(b));
    if (aa != ab) return aa < ab;
    return a.imag() > b.imag();
}

namespace {

std::vector<std::size_t> sorted_order(const Eigen::VectorXcd& values) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(values.size()));
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return spectrum_order_less(values(static_cast<Eigen::Index>(i)),
                                   values(static_cast<Eigen::Index>(j)));
    });
    return idx;
}

} // namespace

Spectrum make_spectrum(std::vector<Complex> values) {
    std::stable_sort(values.begin(), values.end(), spectrum_order_less);
    Spectrum s;
    s.eigenvalues.resize(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        s.eigenvalues(static_cast<Eigen::Index>(i)) = values[i];
    }
    return s;
}

Spectrum eigendecompose(const Eigen::MatrixXcd& matrix, bool keep_eigenvectors) {
    if (matrix.rows() != matrix.cols()) {
        throw DimensionMismatch("eigendecompose requires a square matrix");
    }
    if (!matrix.allFinite()) {
        throw ConvergenceFailure("eigendecompose: matrix has non-finite entries");
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(matrix, true);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("complex eigensolver did not converge");
    }

    const Eigen::VectorXcd& values = solver.eigenvalues();
    const Eigen::MatrixXcd& vectors = solver.eigenvectors();
    const double norm_a = matrix.norm(); // Frobenius
    const auto order = sorted_order(values);

    Spectrum s;
    const auto n = values.size();
    s.eigenvalues.resize(n);
    s.residuals.resize(static_cast<std::size_t>(n));
    if (keep_eigenvectors) s.eigenvectors.emplace(n, n);

    for (Eigen::Index out = 0; out < n; ++out) {
        const auto src = static_cast<Eigen::Index>(order[static_cast<std::size_t>(out)]);
        const Complex lambda = values(src);
        const Eigen::VectorXcd v = vectors.col(src);
        const double residual =
            norm_a > 0.0 ? (matrix * v - lambda * v).norm() / (norm_a * v.norm())
                         : 0.0;
        if (!(residual <= 1e-8)) {
            throw ConvergenceFailure("eigenpair " + std::to_string(out) +
                                     " violates the residual contract: " +
                                     std::to_string(residual));
        }
        s.eigenvalues(out) = lambda;
        s.residuals[static_cast<std::size_t>(out)] = residual;
        if (keep_eigenvectors) s.eigenvectors->col(out) = v;
    }
    return s;
}

SpectrumMatch match_spectra(const Spectrum& computed, const Spectrum& reference,
                            std::size_t p) {
    if (p > computed.size() || p > reference.size()) {
        throw DomainError("match_spectra: p exceeds a spectrum size");
    }

    std::vector<Complex> pool(computed.eigenvalues.data(),
                              computed.eigenvalues.data() + computed.size());
    std::vector<bool> taken(pool.size(), false);

    SpectrumMatch match;
    match.pairs.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
        const Complex ref = reference.eigenvalues(static_cast<Eigen::Index>(i));
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = pool.size();
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (taken[j]) continue;
            const double d = std::abs(ref - pool[j]);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        taken[best_j] = true;
        match.pairs.push_back(MatchedPair{ref, pool[best_j], best});
    }
    for (std::size_t j = 0; j < pool.size(); ++j) {
        if (!taken[j]) match.unmatched_computed.push_back(pool[j]);
    }
    return match;
}

double conjugate_symmetry_distance(const Spectrum& spectrum) {
    const auto n = spectrum.eigenvalues.size();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex target = std::conj(spectrum.eigenvalues(i));
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < n; ++j) {
            best = std::min(best, std::abs(spectrum.eigenvalues(j) - target));
        }
        worst = std::max(worst, best);
    }
    // Conjugation is an involution, so one direction of the Hausdorff
    // distance equals the other.
    return n == 0 ? 0.0 : worst;
}

std::vector<bool> stability_flags(const Spectrum& at_n,
                                  const Spectrum& at_n_plus_4, double tol) {
    std::vector<bool> spurious(at_n.size(), false);
    for (std::size_t i = 0; i < at_n.size(); ++i) {
        const Complex lambda = at_n.eigenvalues(static_cast<Eigen::Index>(i));
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < at_n_plus_4.size(); ++j) {
            best = std::min(best, std::abs(lambda - at_n_plus_4.eigenvalues(
                                                        static_cast<Eigen::Index>(j))));
        }
        spurious[i] = !(best <= tol);
    }
    return spurious;
}

} // namespace edmd
