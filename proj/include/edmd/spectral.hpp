#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "edmd/dynamics.hpp"

namespace edmd {

/// Ordering convention for eigenvalues: descending modulus; ties by
/// ascending distance of the principal argument from the positive real
/// axis; conjugate pairs with the positive imaginary part first.
bool spectrum_order_less(Complex a, Complex b);

/// Eigenvalues ordered by the convention above, optionally with matching
/// right eigenvectors (as columns) and per-pair relative residuals
/// ||A v - lambda v|| / ||A||_F.
struct Spectrum {
    Eigen::VectorXcd eigenvalues;
    std::optional<Eigen::MatrixXcd> eigenvectors;
    std::vector<double> residuals;

    std::size_t size() const {
        return static_cast<std::size_t>(eigenvalues.size());
    }
};

/// All eigenvalues of a dense complex matrix, ordered deterministically.
/// Residuals are checked against the 1e-8 accuracy contract; a violation or
/// solver failure throws ConvergenceFailure naming the eigenvalue index.
Spectrum eigendecompose(const Eigen::MatrixXcd& matrix,
                        bool keep_eigenvectors = false);

/// Build a Spectrum from raw values (applies the ordering convention; no
/// residual data). Used for closed-form reference spectra.
Spectrum make_spectrum(std::vector<Complex> values);

struct MatchedPair {
    Complex reference;
    Complex computed;
    double error; // |reference - computed|
};

/// Greedy nearest-neighbour matching: the first p reference eigenvalues, in
/// descending-modulus order, each claim the closest unmatched computed
/// eigenvalue. Leftover computed eigenvalues are reported as spurious
/// candidates.
struct SpectrumMatch {
    std::vector<MatchedPair> pairs;
    std::vector<Complex> unmatched_computed;
};

SpectrumMatch match_spectra(const Spectrum& computed, const Spectrum& reference,
                            std::size_t p);

/// Hausdorff distance between the eigenvalue multiset and its complex
/// conjugate; near zero for symmetrically sampled real-coefficient dynamics.
double conjugate_symmetry_distance(const Spectrum& spectrum);

/// Stability classifier: an eigenvalue counts as non-converged (spurious
/// candidate) when it moves by more than tol between dictionary sizes N and
/// N + 4, measured as the distance to the nearest eigenvalue of the larger
/// decomposition. A heuristic, reported as such.
std::vector<bool> stability_flags(const Spectrum& at_n,
                                  const Spectrum& at_n_plus_4,
                                  double tol = 1e-2);

} // namespace edmd
