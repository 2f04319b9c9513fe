#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vvjack/rational.hpp"

namespace vvjack {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals. Sizes here are dim V_tau, which
/// stays small (<= a few dozen), so no blocking or sparsity is attempted.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix diagonal(const RationalVector& d);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    bool is_zero() const;
    bool is_diagonal() const;
    bool is_identity() const;
    RationalVector diagonal_entries() const;

    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);
    RationalMatrix& operator*=(const Rational& s);

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
    RationalMatrix operator-() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    /// Largest |entry| as a double; used for residual reports.
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalVector operator+(RationalVector a, const RationalVector& b);
RationalVector operator-(RationalVector a, const RationalVector& b);
RationalVector operator*(const Rational& s, RationalVector v);
bool is_zero(const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace vvjack
