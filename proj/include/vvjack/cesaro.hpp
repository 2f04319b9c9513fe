#pragma once

#include <cstdint>
#include <vector>

#include "vvjack/coeff_store.hpp"
#include "vvjack/numeric.hpp"

namespace vvjack {

/// A point of the N-torus given by its angles; x_i = exp(i theta_i).
struct TorusPoint {
    std::vector<double> theta;

    std::vector<ComplexScalar> coords() const;
    /// (x w)_j = x_{w(j)}, so that (x w)^a = x^{w a}.
    TorusPoint permuted(const Permutation& w) const;
    /// u x with u = exp(i phi).
    TorusPoint rotated(double phi) const;
};

/// x^g = exp(i sum g_j theta_j).
ComplexScalar torus_monomial(const MultiIndex& g, const TorusPoint& x);

/// Seeded uniform angles; identical output for identical (n_vars, count, seed).
std::vector<TorusPoint> sample_points(int n_vars, int count, std::uint64_t seed);

/// (-n)_m / (-n - delta)_m for m <= n, zero beyond.
Rational cesaro_weight(int n, int m, int delta);

/// sum_{g in Z_{N,k}} x^g
ComplexScalar s_sum(int n_vars, int k, const TorusPoint& x);
/// sigma_n^{N-1}(x) = sum_k cesaro_weight(n, k, N-1) S_k(x)
ComplexScalar cesaro_kernel(int n_vars, int n, const TorusPoint& x);
/// The complete symmetric polynomial h_n at x.
ComplexScalar complete_symmetric(int n, const std::vector<ComplexScalar>& x);

struct IdentityCheck {
    double residual;  ///< |h_n(1/x) h_n(x) - ((N)_n / n!) sigma_n^{N-1}(x)|
    double sigma;     ///< Re sigma_n^{N-1}(x)
    double sigma_imag;
};
IdentityCheck sigma_identity(int n, const TorusPoint& x);
double sigma_identity_residual(int n, const TorusPoint& x);

/// Floating-point evaluation of H_n and K_n from a coefficient store. The
/// orthonormal-basis coefficients of each grade are materialized once.
class KernelEvaluator {
public:
    explicit KernelEvaluator(CoeffStore& store);

    std::size_t dim() const noexcept { return dim_; }
    int n_vars() const noexcept { return n_vars_; }
    /// tau(w) = D^{1/2} sigma(w) D^{-1/2}
    ComplexMatrix tau(const Permutation& w) const;

    ComplexMatrix h_matrix(int n, const TorusPoint& x);
    ComplexMatrix kernel_eval(int n, const TorusPoint& x);

private:
    const std::vector<std::pair<MultiIndex, ComplexMatrix>>& grade(int n);

    CoeffStore& store_;
    std::size_t dim_;
    int n_vars_;
    std::vector<std::vector<std::pair<MultiIndex, ComplexMatrix>>> grades_;
};

struct KernelReport {
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<double> min_eigenvalues;  ///< per sample
    double worst_min_eigenvalue = 0.0;
    double hermiticity_residual = 0.0;     ///< max |K - K^*|
    double covariance_residual = 0.0;      ///< max |K(xw) - tau(w)^{-1} K(x) tau(w)|
    double homogeneity_residual = 0.0;     ///< max |K(u x) - K(x)|
    double cyclic_residual = 0.0;          ///< |K(x0) tau(w0) - tau(w0) K(x0)|
};

/// Evaluates K_n at seeded samples and collects positivity and symmetry data.
KernelReport kernel_report(KernelEvaluator& eval, int n, int samples, std::uint64_t seed);

}  // namespace vvjack
