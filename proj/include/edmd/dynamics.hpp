#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "edmd/errors.hpp"

namespace edmd {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

/// Reduce an angle to the half-open interval [0, 2*pi).
double wrap_angle(double phi);

/// Parameters of a degree-two Blaschke product
///   tau(z) = (z - mu)/(1 - conj(mu) z) * (z - rho)/(1 - conj(rho) z).
/// Requires |mu| < 1 and |rho| < 1; mu = rho = 0 gives the angle-doubling
/// map tau(z) = z^2.
class BlaschkeParams {
public:
    BlaschkeParams(Complex mu, Complex rho);

    Complex mu() const { return mu_; }
    Complex rho() const { return rho_; }

private:
    Complex mu_;
    Complex rho_;
};

/// Parameters of the analytically deformed toral automorphism; |mu| < 1.
/// mu = 0 gives the linear map (p1, p2) -> (2 p1 + p2, p1 + p2) mod 2*pi.
class TorusMapParams {
public:
    explicit TorusMapParams(Complex mu);

    Complex mu() const { return mu_; }

private:
    Complex mu_;
};

/// Phase point in angle coordinates. Circle maps use only the first
/// component; torus maps use both.
using PhasePoint = std::array<double, 2>;

/// A map together with its phase-space dimension (1 = circle, 2 = torus).
struct MapSpec {
    std::variant<BlaschkeParams, TorusMapParams> map;

    int dimension() const {
        return std::holds_alternative<BlaschkeParams>(map) ? 1 : 2;
    }
    bool is_circle() const { return dimension() == 1; }

    const BlaschkeParams& blaschke() const;
    const TorusMapParams& torus() const;

    static MapSpec make_blaschke(Complex mu, Complex rho);
    static MapSpec make_bernoulli(); // mu = rho = 0
    static MapSpec make_torus(Complex mu);
};

/// tau(z) for the Blaschke product. |tau(z)| = 1 whenever |z| = 1.
/// Throws DomainError when z comes within 1e-12 of a pole 1/conj(mu),
/// 1/conj(rho); this cannot happen on the closed unit disk.
Complex blaschke_eval(const BlaschkeParams& params, Complex z);

/// Closed-form tau'(z) from the product rule on the two Moebius factors,
/// each factor having derivative (1 - |a|^2) / (1 - conj(a) z)^2.
Complex blaschke_derivative(const BlaschkeParams& params, Complex z);

/// Angle-coordinate form of the circle map:
///   phi -> 2 phi + 2 atan2(|mu| sin(phi-alpha), 1 - |mu| cos(phi-alpha))
///              + 2 atan2(|rho| sin(phi-beta), 1 - |rho| cos(phi-beta))
/// reduced mod 2*pi, where alpha = arg(mu), beta = arg(rho).
/// Satisfies exp(i * angle_map(phi)) = blaschke_eval(exp(i phi)).
double angle_map(const BlaschkeParams& params, double phi);

/// The two preimages of w under tau, for w on the unit circle
/// (checked within 1e-10). Solves the quadratic
///   (1 - w conj(mu) conj(rho)) z^2 + (w (conj(mu)+conj(rho)) - (mu+rho)) z
///     + (mu rho - w) = 0
/// with the numerically stable root pairing (larger-magnitude root via the
/// quadratic formula, the other via the product of roots). Both results lie
/// on the unit circle; returned in ascending principal argument.
/// Throws DegenerateBranch when the roots coincide within 1e-12.
std::array<Complex, 2> inverse_branches(const BlaschkeParams& params, Complex w);

/// Deformed toral automorphism in angle coordinates, reduced mod 2*pi.
/// Both components share a single correction term
///   2 atan2(|mu| sin(p1+p2-alpha), 1 - |mu| cos(p1+p2-alpha)).
std::array<double, 2> torus_map(const TorusMapParams& params,
                                std::array<double, 2> phi);

/// Apply one step of the map to a phase point (angle coordinates).
PhasePoint apply_map(const MapSpec& map, const PhasePoint& x);

/// Iterate the map burn_in times without recording, then record length
/// consecutive points. Deterministic given (map, start).
std::vector<PhasePoint> iterate_trajectory(const MapSpec& map, PhasePoint start,
                                           std::size_t burn_in,
                                           std::size_t length);

} // namespace edmd
