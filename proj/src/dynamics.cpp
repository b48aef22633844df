#include "edmd/dynamics.hpp"

#include <cmath>
#include <utility>

namespace edmd {

double wrap_angle(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

namespace {

void require_unit_disk(Complex a, const char* name) {
    if (!(std::abs(a) < 1.0)) {
        throw DomainError(std::string(name) + " must satisfy |" + name +
                          "| < 1, got modulus " + std::to_string(std::abs(a)));
    }
}

// One Moebius factor (z - a)/(1 - conj(a) z); throws near the pole.
Complex moebius_factor(Complex a, Complex z) {
    const Complex denom = 1.0 - std::conj(a) * z;
    if (std::abs(denom) < 1e-12) {
        throw DomainError("Blaschke evaluation within 1e-12 of pole at 1/conj(a), |1 - conj(a) z| = " +
                          std::to_string(std::abs(denom)));
    }
    return (z - a) / denom;
}

// Derivative of the factor: (1 - |a|^2)/(1 - conj(a) z)^2.
Complex moebius_factor_derivative(Complex a, Complex z) {
    const Complex denom = 1.0 - std::conj(a) * z;
    if (std::abs(denom) < 1e-12) {
        throw DomainError("Blaschke derivative within 1e-12 of pole at 1/conj(a)");
    }
    return (1.0 - std::norm(a)) / (denom * denom);
}

// 2 atan2(|a| sin(phi - arg a), 1 - |a| cos(phi - arg a)); the two-argument
// arctangent keeps the correct branch as |a| -> 1.
double angle_correction(Complex a, double phi) {
    const double r = std::abs(a);
    const double d = phi - std::arg(a);
    return 2.0 * std::atan2(r * std::sin(d), 1.0 - r * std::cos(d));
}

} // namespace

BlaschkeParams::BlaschkeParams(Complex mu, Complex rho) : mu_(mu), rho_(rho) {
    require_unit_disk(mu, "mu");
    require_unit_disk(rho, "rho");
}

TorusMapParams::TorusMapParams(Complex mu) : mu_(mu) {
    require_unit_disk(mu, "mu");
}

const BlaschkeParams& MapSpec::blaschke() const {
    if (!std::holds_alternative<BlaschkeParams>(map)) {
        throw DimensionMismatch("expected a circle map, got a torus map");
    }
    return std::get<BlaschkeParams>(map);
}

const TorusMapParams& MapSpec::torus() const {
    if (!std::holds_alternative<TorusMapParams>(map)) {
        throw DimensionMismatch("expected a torus map, got a circle map");
    }
    return std::get<TorusMapParams>(map);
}

MapSpec MapSpec::make_blaschke(Complex mu, Complex rho) {
    return MapSpec{BlaschkeParams(mu, rho)};
}

MapSpec MapSpec::make_bernoulli() {
    return MapSpec{BlaschkeParams(0.0, 0.0)};
}

MapSpec MapSpec::make_torus(Complex mu) {
    return MapSpec{TorusMapParams(mu)};
}

Complex blaschke_eval(const BlaschkeParams& params, Complex z) {
    return moebius_factor(params.mu(), z) * moebius_factor(params.rho(), z);
}

Complex blaschke_derivative(const BlaschkeParams& params, Complex z) {
    const Complex f = moebius_factor(params.mu(), z);
    const Complex g = moebius_factor(params.rho(), z);
    const Complex fp = moebius_factor_derivative(params.mu(), z);
    const Complex gp = moebius_factor_derivative(params.rho(), z);
    return fp * g + f * gp;
}

double angle_map(const BlaschkeParams& params, double phi) {
    return wrap_angle(2.0 * phi + angle_correction(params.mu(), phi) +
                      angle_correction(params.rho(), phi));
}

std::array<Complex, 2> inverse_branches(const BlaschkeParams& params, Complex w) {
    if (std::abs(std::abs(w) - 1.0) > 1e-10) {
        throw DomainError("inverse_branches requires |w| = 1 within 1e-10, got " +
                          std::to_string(std::abs(w)));
    }
    const Complex mu = params.mu();
    const Complex rho = params.rho();

    const Complex a = 1.0 - w * std::conj(mu) * std::conj(rho);
    const Complex b = w * (std::conj(mu) + std::conj(rho)) - (mu + rho);
    const Complex c = mu * rho - w;

    const Complex disc = std::sqrt(b * b - 4.0 * a * c);
    // Pick the sign that avoids cancellation in b + s*disc.
    const Complex q = (std::abs(b + disc) >= std::abs(b - disc))
                          ? -0.5 * (b + disc)
                          : -0.5 * (b - disc);
    Complex z1 = q / a;
    Complex z2 = c / q;

    if (std::abs(z1 - z2) < 1e-12) {
        throw DegenerateBranch("inverse branches coincide at w = (" +
                               std::to_string(w.real()) + ", " +
                               std::to_string(w.imag()) + ")");
    }
    if (std::arg(z1) > std::arg(z2)) std::swap(z1, z2);
    return {z1, z2};
}

std::array<double, 2> torus_map(const TorusMapParams& params,
                                std::array<double, 2> phi) {
    const double corr = angle_correction(params.mu(), phi[0] + phi[1]);
    return {wrap_angle(2.0 * phi[0] + phi[1] + corr),
            wrap_angle(phi[0] + phi[1] + corr)};
}

PhasePoint apply_map(const MapSpec& map, const PhasePoint& x) {
    if (map.is_circle()) {
        return {angle_map(map.blaschke(), x[0]), 0.0};
    }
    const auto y = torus_map(map.torus(), {x[0], x[1]});
    return {y[0], y[1]};
}

std::vector<PhasePoint> iterate_trajectory(const MapSpec& map, PhasePoint start,
                                           std::size_t burn_in,
                                           std::size_t length) {
    PhasePoint x = start;
    if (map.is_circle()) x[1] = 0.0;
    for (std::size_t i = 0; i < burn_in; ++i) x = apply_map(map, x);

    std::vector<PhasePoint> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(x);
        x = apply_map(map, x);
    }
    return out;
}

} // namespace edmd
