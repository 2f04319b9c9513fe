#pragma once

#include <cstddef>
#include <vector>

#include "vvjack/rational.hpp"

namespace vvjack {

/// Dense row-major complex matrix for floating-point evaluation paths.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    ComplexScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const ComplexScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(ComplexScalar s);
    /// this += s * o
    void axpy(ComplexScalar s, const ComplexMatrix& o);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexScalar s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ComplexScalar> data_;
};

/// Eigenvalues (ascending) of (H + H^*)/2 by cyclic Jacobi rotations on the
/// real symmetric embedding [[Re, -Im], [Im, Re]].
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol = 1e-14, int max_sweeps = 100);

}  // namespace vvjack
