#pragma once

#include <complex>
#include <vector>

#include "pzx/diagram.hpp"

namespace pzx {

/// Dense linear map of a diagram: 2^n_out x 2^n_in complex matrix, row-major,
/// with qubit 0 as the most significant bit on both sides.
struct DenseMatrix {
    std::size_t n_out = 0;
    std::size_t n_in = 0;
    std::vector<std::complex<double>> m;

    std::complex<double>& at(std::size_t row, std::size_t col) {
        return m[row * (std::size_t{1} << n_in) + col];
    }
    const std::complex<double>& at(std::size_t row, std::size_t col) const {
        return m[row * (std::size_t{1} << n_in) + col];
    }
    /// Value of a closed diagram (1x1 matrix).
    std::complex<double> scalar_value() const { return m.at(0); }
};

/// Exact-as-floating-point tensor contraction of the spider matrices.
/// Requires a parameter-free diagram with at most 12 boundary wires.
DenseMatrix dense_semantics(const ZXDiagram& d);

} // namespace pzx
