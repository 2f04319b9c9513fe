#include "vvjack/cesaro.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "vvjack/compositions.hpp"
#include "vvjack/errors.hpp"

namespace vvjack {

std::vector<ComplexScalar> TorusPoint::coords() const {
    std::vector<ComplexScalar> x;
    x.reserve(theta.size());
    for (double t : theta) x.push_back(std::polar(1.0, t));
    return x;
}

TorusPoint TorusPoint::permuted(const Permutation& w) const {
    TorusPoint y{std::vector<double>(theta.size())};
    for (std::size_t j = 0; j < theta.size(); ++j) y.theta[j] = theta[static_cast<std::size_t>(w(static_cast<int>(j)))];
    return y;
}

TorusPoint TorusPoint::rotated(double phi) const {
    TorusPoint y = *this;
    for (auto& t : y.theta) t += phi;
    return y;
}

ComplexScalar torus_monomial(const MultiIndex& g, const TorusPoint& x) {
    double phase = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) phase += g[j] * x.theta[j];
    return std::polar(1.0, phase);
}

std::vector<TorusPoint> sample_points(int n_vars, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TorusPoint> out;
    for (int k = 0; k < count; ++k) {
        TorusPoint p{std::vector<double>(static_cast<std::size_t>(n_vars))};
        // 53 random bits mapped to [0, 2 pi); avoids library-specific distributions
        for (auto& t : p.theta) t = 2.0 * std::numbers::pi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        out.push_back(std::move(p));
    }
    return out;
}

Rational cesaro_weight(int n, int m, int delta) {
    if (m < 0) throw InvalidArgument("cesaro weight needs m >= 0");
    if (m > n) return Rational(0);
    Rational w(1);
    for (int i = 0; i < m; ++i) w *= Rational(-n + i, -n - delta + i);
    return w;
}

ComplexScalar s_sum(int n_vars, int k, const TorusPoint& x) {
    ComplexScalar s = 0.0;
    for_each_Z(n_vars, k, [&](const MultiIndex& g) { s += torus_monomial(g, x); });
    return s;
}

ComplexScalar cesaro_kernel(int n_vars, int n, const TorusPoint& x) {
    ComplexScalar s = 0.0;
    for (int k = 0; k <= n; ++k) s += cesaro_weight(n, k, n_vars - 1).to_double() * s_sum(n_vars, k, x);
    return s;
}

ComplexScalar complete_symmetric(int n, const std::vector<ComplexScalar>& x) {
    // h_n(x_1..x_N) by the recurrence h_n(x_1..x_k) = h_n(x_1..x_{k-1}) + x_k h_{n-1}(x_1..x_k)
    std::vector<ComplexScalar> h(static_cast<std::size_t>(n + 1), 0.0);
    h[0] = 1.0;
    for (const auto& xk : x) {
        for (int d = 1; d <= n; ++d) h[static_cast<std::size_t>(d)] += xk * h[static_cast<std::size_t>(d - 1)];
    }
    return h[static_cast<std::size_t>(n)];
}

IdentityCheck sigma_identity(int n, const TorusPoint& x) {
    const int n_vars = static_cast<int>(x.theta.size());
    const auto pts = x.coords();
    std::vector<ComplexScalar> inv;
    for (const auto& z : pts) inv.push_back(1.0 / z);
    const ComplexScalar lhs = complete_symmetric(n, inv) * complete_symmetric(n, pts);
    // (N)_n / n!
    double count = 1.0;
    for (int i = 0; i < n; ++i) count *= static_cast<double>(n_vars + i) / static_cast<double>(i + 1);
    const ComplexScalar sigma = cesaro_kernel(n_vars, n, x);
    return {std::abs(lhs - count * sigma), sigma.real(), sigma.imag()};
}

double sigma_identity_residual(int n, const TorusPoint& x) { return sigma_identity(n, x).residual; }

KernelEvaluator::KernelEvaluator(CoeffStore& store)
    : store_(store), dim_(store.rep().dim()), n_vars_(store.rep().n()) {}

ComplexMatrix KernelEvaluator::tau(const Permutation& w) const {
    const RationalMatrix s = store_.rep().rep_matrix(w);
    const auto& d = store_.rep().norm0_diagonal();
    ComplexMatrix t(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) t(r, c) = s(r, c).to_double() * std::sqrt(d[r].to_double() / d[c].to_double());
    }
    return t;
}

const std::vector<std::pair<MultiIndex, ComplexMatrix>>& KernelEvaluator::grade(int n) {
    if (n < 0) throw InvalidArgument("grade must be nonnegative");
    while (static_cast<int>(grades_.size()) <= n) {
        const int k = static_cast<int>(grades_.size());
        store_.ensure_grade(k);
        std::vector<std::pair<MultiIndex, ComplexMatrix>> entries;
        for_each_Z(n_vars_, k, [&](const MultiIndex& g) { entries.emplace_back(g, store_.orthonormal(g)); });
        grades_.push_back(std::move(entries));
    }
    return grades_[static_cast<std::size_t>(n)];
}

ComplexMatrix KernelEvaluator::h_matrix(int n, const TorusPoint& x) {
    if (static_cast<int>(x.theta.size()) != n_vars_) throw InvalidArgument("torus point has the wrong dimension");
    ComplexMatrix h(dim_, dim_);
    for (const auto& [g, a] : grade(n)) h.axpy(torus_monomial(g, x), a);
    return h;
}

ComplexMatrix KernelEvaluator::kernel_eval(int n, const TorusPoint& x) {
    ComplexMatrix k(dim_, dim_);
    for (int m = 0; m <= n; ++m) k.axpy(cesaro_weight(n, m, n_vars_ - 1).to_double(), h_matrix(m, x));
    return k;
}

KernelReport kernel_report(KernelEvaluator& eval, int n, int samples, std::uint64_t seed) {
    KernelReport rep;
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;
    const int n_vars = eval.n_vars();
    const auto perms = all_permutations(n_vars);
    std::vector<ComplexMatrix> taus;
    for (const auto& w : perms) taus.push_back(eval.tau(w));
    rep.worst_min_eigenvalue = INFINITY;
    const auto points = sample_points(n_vars, samples, seed);
    for (std::size_t s = 0; s < points.size(); ++s) {
        const auto& x = points[s];
        const ComplexMatrix k = eval.kernel_eval(n, x);
        const double lo = hermitian_eigenvalues(k).front();
        rep.min_eigenvalues.push_back(lo);
        rep.worst_min_eigenvalue = std::min(rep.worst_min_eigenvalue, lo);
        rep.hermiticity_residual = std::max(rep.hermiticity_residual, (k - k.adjoint()).max_abs());
        // one permutation per sample keeps the cost linear in the sample count
        const std::size_t wi = s % perms.size();
        const ComplexMatrix kw = eval.kernel_eval(n, x.permuted(perms[wi]));
        const ComplexMatrix rhs = taus[wi].adjoint() * k * taus[wi];
        rep.covariance_residual = std::max(rep.covariance_residual, (kw - rhs).max_abs());
        const ComplexMatrix ku = eval.kernel_eval(n, x.rotated(0.37 + 0.1 * static_cast<double>(s % 7)));
        rep.homogeneity_residual = std::max(rep.homogeneity_residual, (ku - k).max_abs());
    }
    TorusPoint x0{std::vector<double>(static_cast<std::size_t>(n_vars))};
    for (int j = 0; j < n_vars; ++j) x0.theta[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / n_vars;
    const ComplexMatrix k0 = eval.kernel_eval(n, x0);
    const ComplexMatrix t0 = eval.tau(Permutation::cycle(n_vars));
    rep.cyclic_residual = (k0 * t0 - t0 * k0).max_abs();
    return rep;
}

}  // namespace vvjack
