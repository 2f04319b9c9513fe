#include "vvjack/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "vvjack/errors.hpp"

namespace vvjack {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("complex matrix size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("complex matrix size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(ComplexScalar s) {
    for (auto& x : data_) x *= s;
    return *this;
}

void ComplexMatrix::axpy(ComplexScalar s, const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("complex matrix size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("complex matrix size mismatch");
    ComplexMatrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const ComplexScalar x = a(r, k);
            for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
        }
    }
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::abs(x));
    return m;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol, int max_sweeps) {
    if (h.rows() != h.cols()) throw InvalidArgument("eigenvalues need a square matrix");
    const std::size_t n = h.rows();
    const std::size_t m = 2 * n;
    std::vector<double> a(m * m);
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * m + c]; };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const ComplexScalar z = 0.5 * (h(r, c) + std::conj(h(c, r)));
            at(r, c) = z.real();
            at(r + n, c + n) = z.real();
            at(r, c + n) = -z.imag();
            at(r + n, c) = z.imag();
        }
    }
    double scale = 0.0;
    for (double x : a) scale = std::max(scale, std::fabs(x));
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) off = std::max(off, std::fabs(at(p, q)));
        }
        if (off <= tol * std::max(scale, 1.0)) break;
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = at(i, i);
    std::sort(all.begin(), all.end());
    // each eigenvalue of H appears twice in the embedding
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (all[2 * i] + all[2 * i + 1]);
    return out;
}

}  // namespace vvjack
