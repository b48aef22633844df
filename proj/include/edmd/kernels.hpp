#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "edmd/observables.hpp"

namespace edmd::kernels {

/// Knobs for the accumulation kernels. The parallel variants split work
/// across matrix entries (or matrix rows); the per-entry summation order is
/// ascending in the sample index either way, so serial and parallel results
/// are bitwise identical.
struct KernelOptions {
    bool parallel = true;
    bool compensated = false; // Kahan-compensated inner sums
};

/// out(k, l) = (1/M) sum_m Y(k, m) X(l, m), ascending m, no conjugation.
/// Serial reference implementation.
void pair_sums_serial(const DataMatrix& Y, const DataMatrix& X,
                      Eigen::MatrixXcd& out, bool compensated = false);

/// OpenMP variant of pair_sums_serial, parallel over (k, l) entries.
void pair_sums_parallel(const DataMatrix& Y, const DataMatrix& X,
                        Eigen::MatrixXcd& out, bool compensated = false);

/// Dispatch on options.parallel.
void pair_sums(const DataMatrix& Y, const DataMatrix& X, Eigen::MatrixXcd& out,
               const KernelOptions& options = {});

/// out(k, m) = exp(i <mode_k, angles_m>), angles node-major with stride dim.
/// Serial reference implementation.
void fourier_rows_serial(const Dictionary& dict, const double* angles,
                         std::size_t count, DataMatrix& out);

/// OpenMP variant, parallel over sample columns.
void fourier_rows_parallel(const Dictionary& dict, const double* angles,
                           std::size_t count, DataMatrix& out);

void fourier_rows(const Dictionary& dict, const double* angles,
                  std::size_t count, DataMatrix& out,
                  const KernelOptions& options = {});

} // namespace edmd::kernels
