#include "edmd/sampling.hpp"

#include <random>
#include <string>

namespace edmd {

namespace {

void append_point(std::vector<double>& flat, const PhasePoint& x, int dim) {
    flat.push_back(x[0]);
    if (dim == 2) flat.push_back(x[1]);
}

} // namespace

SampleSet equidistant_circle_nodes(const MapSpec& map, std::size_t m) {
    if (!map.is_circle()) {
        throw DimensionMismatch("equidistant_circle_nodes requires a 1-d map");
    }
    if (m == 0) throw DomainError("node count must be >= 1");

    SampleSet s;
    s.dimension = 1;
    s.provenance = Provenance::EquidistantGrid;
    s.count = m;
    s.points.reserve(m);
    s.images.reserve(m);
    const auto& params = map.blaschke();
    for (std::size_t i = 0; i < m; ++i) {
        const double phi = kTwoPi * static_cast<double>(i) / static_cast<double>(m);
        s.points.push_back(phi);
        s.images.push_back(angle_map(params, phi));
    }
    return s;
}

SampleSet torus_lattice_nodes(const MapSpec& map, std::size_t m1, std::size_t m2) {
    if (map.is_circle()) {
        throw DimensionMismatch("torus_lattice_nodes requires a 2-d map");
    }
    if (m1 == 0 || m2 == 0) throw DomainError("lattice extents must be >= 1");

    SampleSet s;
    s.dimension = 2;
    s.provenance = Provenance::TorusLattice;
    s.count = m1 * m2;
    s.lattice_m1 = m1;
    s.lattice_m2 = m2;
    s.points.reserve(2 * s.count);
    s.images.reserve(2 * s.count);
    const auto& params = map.torus();
    for (std::size_t j = 0; j < m1; ++j) {
        const double p1 = kTwoPi * static_cast<double>(j) / static_cast<double>(m1);
        for (std::size_t k = 0; k < m2; ++k) {
            const double p2 = kTwoPi * static_cast<double>(k) / static_cast<double>(m2);
            const auto img = torus_map(params, {p1, p2});
            s.points.push_back(p1);
            s.points.push_back(p2);
            s.images.push_back(img[0]);
            s.images.push_back(img[1]);
        }
    }
    return s;
}

SampleSet trajectory_nodes(const MapSpec& map, PhasePoint start,
                           std::size_t burn_in, std::size_t m) {
    if (m == 0) throw DomainError("trajectory length must be >= 1");

    const int dim = map.dimension();
    SampleSet s;
    s.dimension = dim;
    s.provenance = Provenance::Trajectory;
    s.count = m;
    s.start = start;
    s.burn_in = burn_in;
    s.points.reserve(static_cast<std::size_t>(dim) * m);
    s.images.reserve(static_cast<std::size_t>(dim) * m);

    // One extra point so the image list is the shift of the point list.
    const auto orbit = iterate_trajectory(map, start, burn_in, m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        append_point(s.points, orbit[i], dim);
        append_point(s.images, orbit[i + 1], dim);
    }
    return s;
}

SampleSet trajectory_nodes_seeded(const MapSpec& map, std::uint64_t seed,
                                  std::size_t burn_in, std::size_t m) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
    PhasePoint start{uniform(rng), 0.0};
    if (map.dimension() == 2) start[1] = uniform(rng);

    SampleSet s = trajectory_nodes(map, start, burn_in, m);
    s.seed = seed;
    return s;
}

} // namespace edmd
