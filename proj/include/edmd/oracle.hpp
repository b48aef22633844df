#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "edmd/dynamics.hpp"
#include "edmd/spectral.hpp"

namespace edmd {

/// The unique attracting fixed point of a Blaschke map inside the unit disk
/// and its multiplier tau'(z_star). Existence of such a point is the
/// criterion for the map to be eventually expanding on the circle.
struct FixedPointData {
    Complex z_star;
    Complex multiplier;
    double residual = 0.0; // |tau(z_star) - z_star|
};

/// Solves tau(z) = z through the cubic
///   conj(mu) conj(rho) z^3 - (conj(mu) + conj(rho) + 1) z^2
///     + (1 + mu + rho) z - mu rho = 0
/// via companion-matrix eigenvalues, keeps the unique root with |z| < 1,
/// and cross-validates with fixed-point iteration started at z = 0.
/// Throws NoInteriorFixedPoint when zero or several interior roots exist,
/// when the solvers disagree beyond 1e-10, or when the point is not
/// attracting.
FixedPointData blaschke_fixed_point(const BlaschkeParams& params);

/// Closed-form transfer-operator spectrum of a Blaschke map: 1 followed by
/// the conjugate pairs (multiplier^n, conj(multiplier)^n), n = 1, 2, ...,
/// truncated to count values and ordered by the Spectrum convention.
Spectrum blaschke_exact_spectrum(const BlaschkeParams& params, std::size_t count);

/// Closed-form spectrum of the deformed toral automorphism: 1 together with
/// the conjugate pairs ((-mu)^n, conj(-mu)^n), n = 1, 2, ..., truncated to
/// count values.
Spectrum catmap_exact_spectrum(const TorusMapParams& params, std::size_t count);

/// Closed-form Gram and decomposition matrices for the angle-doubling map
/// on the m-node equidistant grid. The geometric node sums evaluate exactly:
///   G(k,l) = 1 iff m divides 2k + l,
///   H(k,l) = 1 iff m divides k + l,
///   A(k,l) = 1 iff m divides 2k - l.
/// `exact` marks 2m >= 3N, below which aliased entries appear; the A formula
/// additionally needs m >= N so that H is the index-reversal permutation.
struct BernoulliMatrices {
    Eigen::MatrixXcd G;
    Eigen::MatrixXcd H;
    Eigen::MatrixXcd A;
    bool exact = true;
};

BernoulliMatrices bernoulli_exact_matrices(int nbar, std::size_t m);

} // namespace edmd
