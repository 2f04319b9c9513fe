#include "vvjack/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "vvjack/errors.hpp"

namespace vvjack {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& d) {
    RationalMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return {};
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool RationalMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && !(*this)(r, c).is_zero()) return false;
        }
    }
    return true;
}

bool RationalMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((*this)(r, c) != Rational(r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

RationalVector RationalMatrix::diagonal_entries() const {
    RationalVector d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
    return d;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix size mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix size mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix size mismatch in *");
    RationalMatrix m(a.rows_, b.cols_);
    mpq_class acc;
    mpq_class term;
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < b.cols_; ++c) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(r, k).raw();
                if (sgn(x) == 0) continue;
                const auto& y = b(k, c).raw();
                if (sgn(y) == 0) continue;
                term = x * y;
                acc += term;
            }
            m(r, c) = Rational(acc);
        }
    }
    return m;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
    if (a.cols_ != v.size()) throw InvalidArgument("matrix/vector size mismatch");
    RationalVector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        mpq_class acc = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (sgn(v[k].raw()) == 0 || sgn(a(r, k).raw()) == 0) continue;
            acc += a(r, k).raw() * v[k].raw();
        }
        out[r] = Rational(acc);
    }
    return out;
}

double RationalMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::fabs(x.to_double()));
    return m;
}

RationalVector operator+(RationalVector a, const RationalVector& b) {
    if (a.size() != b.size()) throw InvalidArgument("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

RationalVector operator-(RationalVector a, const RationalVector& b) {
    if (a.size() != b.size()) throw InvalidArgument("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

RationalVector operator*(const Rational& s, RationalVector v) {
    for (auto& x : v) x *= s;
    return v;
}

bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw InvalidArgument("vector size mismatch");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
    return Rational(acc);
}

}  // namespace vvjack
