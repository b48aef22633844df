#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "edmd/dynamics.hpp"

namespace edmd {

enum class Provenance { EquidistantGrid, TorusLattice, Trajectory };

/// Phase-space nodes paired with their images under the map. Angles are
/// stored node-major with stride = dimension; complex values are derived on
/// demand so |z| = 1 holds exactly.
struct SampleSet {
    int dimension = 1;
    Provenance provenance = Provenance::EquidistantGrid;
    std::size_t count = 0;

    std::vector<double> points; // dimension * count angles
    std::vector<double> images; // map applied pointwise, same layout

    // lattice shape when provenance == TorusLattice
    std::size_t lattice_m1 = 0;
    std::size_t lattice_m2 = 0;

    // trajectory metadata when provenance == Trajectory
    PhasePoint start{0.0, 0.0};
    std::size_t burn_in = 0;
    std::optional<std::uint64_t> seed; // set when the start was drawn from a seed

    double point_angle(std::size_t m, int axis = 0) const {
        return points[m * static_cast<std::size_t>(dimension) +
                      static_cast<std::size_t>(axis)];
    }
    double image_angle(std::size_t m, int axis = 0) const {
        return images[m * static_cast<std::size_t>(dimension) +
                      static_cast<std::size_t>(axis)];
    }
};

/// M equidistant circle nodes phi_m = 2 pi m / M with paired images.
SampleSet equidistant_circle_nodes(const MapSpec& map, std::size_t m);

/// Row-major torus lattice (2 pi j / m1, 2 pi k / m2) with paired images.
SampleSet torus_lattice_nodes(const MapSpec& map, std::size_t m1, std::size_t m2);

/// m consecutive trajectory points after burn_in discarded iterates. The
/// image list is the one-step shift of the points (the last image comes from
/// one extra map application).
SampleSet trajectory_nodes(const MapSpec& map, PhasePoint start,
                           std::size_t burn_in, std::size_t m);

/// Same, with the start drawn uniformly from the phase space using a
/// recorded seed.
SampleSet trajectory_nodes_seeded(const MapSpec& map, std::uint64_t seed,
                                  std::size_t burn_in, std::size_t m);

} // namespace edmd
