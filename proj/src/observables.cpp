#include "edmd/observables.hpp"

#include "edmd/errors.hpp"
#include "edmd/kernels.hpp"

namespace edmd {

Dictionary fourier_dictionary(int nbar, int dimension) {
    if (nbar < 0) throw DomainError("nbar must be >= 0");
    if (dimension != 1 && dimension != 2) {
        throw DimensionMismatch("dictionary dimension must be 1 or 2");
    }

    Dictionary d;
    d.dimension = dimension;
    d.nbar = nbar;
    if (dimension == 1) {
        d.modes.reserve(static_cast<std::size_t>(2 * nbar + 1));
        for (int k = -nbar; k <= nbar; ++k) d.modes.push_back({k, 0});
    } else {
        const auto side = static_cast<std::size_t>(2 * nbar + 1);
        d.modes.reserve(side * side);
        for (int k1 = -nbar; k1 <= nbar; ++k1) {
            for (int k2 = -nbar; k2 <= nbar; ++k2) d.modes.push_back({k1, k2});
        }
    }
    return d;
}

namespace {

void check_compatible(const Dictionary& dict, const SampleSet& samples) {
    if (dict.dimension != samples.dimension) {
        throw DimensionMismatch("dictionary dimension " +
                                std::to_string(dict.dimension) +
                                " does not match sample dimension " +
                                std::to_string(samples.dimension));
    }
}

} // namespace

DataMatrix evaluate_dictionary(const Dictionary& dict, const SampleSet& samples) {
    check_compatible(dict, samples);
    DataMatrix out;
    kernels::fourier_rows(dict, samples.points.data(), samples.count, out);
    return out;
}

DataMatrix evaluate_dictionary_on_images(const Dictionary& dict,
                                         const SampleSet& samples) {
    check_compatible(dict, samples);
    DataMatrix out;
    kernels::fourier_rows(dict, samples.images.data(), samples.count, out);
    return out;
}

} // namespace edmd
