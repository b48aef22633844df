#include "edmd/kernels.hpp"

#include <cmath>

#include "edmd/errors.hpp"

namespace edmd::kernels {

namespace {

// Plain left-to-right sum of Y(k, .) * X(l, .).
inline Complex row_product_sum(const Complex* y, const Complex* x,
                               std::size_t m) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) acc += y[i] * x[i];
    return acc;
}

// Kahan-compensated version with the same summation order.
inline Complex row_product_sum_compensated(const Complex* y, const Complex* x,
                                           std::size_t m) {
    Complex acc(0.0, 0.0);
    Complex comp(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const Complex term = y[i] * x[i] - comp;
        const Complex next = acc + term;
        comp = (next - acc) - term;
        acc = next;
    }
    return acc;
}

inline void check_shapes(const DataMatrix& Y, const DataMatrix& X) {
    if (Y.rows() != X.rows() || Y.cols() != X.cols()) {
        throw DimensionMismatch("pair_sums: Y and X must have equal shape");
    }
}

inline Complex mode_value(const std::array<int, 2>& mode, const double* angles,
                          int dim) {
    double phase = static_cast<double>(mode[0]) * angles[0];
    if (dim == 2) phase += static_cast<double>(mode[1]) * angles[1];
    return std::polar(1.0, phase);
}

} // namespace

void pair_sums_serial(const DataMatrix& Y, const DataMatrix& X,
                      Eigen::MatrixXcd& out, bool compensated) {
    check_shapes(Y, X);
    const auto n = Y.rows();
    const auto m = static_cast<std::size_t>(Y.cols());
    const double inv_m = 1.0 / static_cast<double>(m);
    out.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex* yrow = Y.row(k).data();
        for (Eigen::Index l = 0; l < n; ++l) {
            const Complex* xrow = X.row(l).data();
            const Complex s = compensated
                                  ? row_product_sum_compensated(yrow, xrow, m)
                                  : row_product_sum(yrow, xrow, m);
            out(k, l) = s * inv_m;
        }
    }
}

void pair_sums_parallel(const DataMatrix& Y, const DataMatrix& X,
                        Eigen::MatrixXcd& out, bool compensated) {
    check_shapes(Y, X);
    const auto n = Y.rows();
    const auto m = static_cast<std::size_t>(Y.cols());
    const double inv_m = 1.0 / static_cast<double>(m);
    out.resize(n, n);
#pragma omp parallel for collapse(2) schedule(static)
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            const Complex* yrow = Y.row(k).data();
            const Complex* xrow = X.row(l).data();
            const Complex s = compensated
                                  ? row_product_sum_compensated(yrow, xrow, m)
                                  : row_product_sum(yrow, xrow, m);
            out(k, l) = s * inv_m;
        }
    }
}

void pair_sums(const DataMatrix& Y, const DataMatrix& X, Eigen::MatrixXcd& out,
               const KernelOptions& options) {
    if (options.parallel) {
        pair_sums_parallel(Y, X, out, options.compensated);
    } else {
        pair_sums_serial(Y, X, out, options.compensated);
    }
}

void fourier_rows_serial(const Dictionary& dict, const double* angles,
                         std::size_t count, DataMatrix& out) {
    const auto n = static_cast<Eigen::Index>(dict.size());
    out.resize(n, static_cast<Eigen::Index>(count));
    const int dim = dict.dimension;
    for (std::size_t m = 0; m < count; ++m) {
        const double* a = angles + m * static_cast<std::size_t>(dim);
        for (Eigen::Index k = 0; k < n; ++k) {
            out(k, static_cast<Eigen::Index>(m)) =
                mode_value(dict.modes[static_cast<std::size_t>(k)], a, dim);
        }
    }
}

void fourier_rows_parallel(const Dictionary& dict, const double* angles,
                           std::size_t count, DataMatrix& out) {
    const auto n = static_cast<Eigen::Index>(dict.size());
    out.resize(n, static_cast<Eigen::Index>(count));
    const int dim = dict.dimension;
#pragma omp parallel for schedule(static)
    for (std::size_t m = 0; m < count; ++m) {
        const double* a = angles + m * static_cast<std::size_t>(dim);
        for (Eigen::Index k = 0; k < n; ++k) {
            out(k, static_cast<Eigen::Index>(m)) =
                mode_value(dict.modes[static_cast<std::size_t>(k)], a, dim);
        }
    }
}

void fourier_rows(const Dictionary& dict, const double* angles,
                  std::size_t count, DataMatrix& out,
                  const KernelOptions& options) {
    if (options.parallel) {
        fourier_rows_parallel(dict, angles, count, out);
    } else {
        fourier_rows_serial(dict, angles, count, out);
    }
}

} // namespace edmd::kernels
