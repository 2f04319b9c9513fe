#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "doctest.h"
#include "vvjack/cesaro.hpp"
#include "vvjack/compositions.hpp"
#include "vvjack/errors.hpp"

using namespace vvjack;

namespace {

ComplexMatrix random_hermitian(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix h(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        h(r, r) = u(rng);
        for (std::size_t c = r + 1; c < n; ++c) {
            h(r, c) = ComplexScalar(u(rng), u(rng));
            h(c, r) = std::conj(h(r, c));
        }
    }
    return h;
}

// Falling Pochhammer quotient for delta = N-1 in its rising form.
Rational rising_form(int n, int m, int n_vars) {
    Rational num(1), den(1);
    for (int i = 0; i < n_vars - 1; ++i) {
        num *= Rational(n - m + 1 + i);
        den *= Rational(n + 1 + i);
    }
    return num / den;
}

}  // namespace

TEST_CASE("Jacobi eigenvalues match trace invariants and closed 2x2 forms") {
    std::mt19937 rng(11);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u}) {
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexMatrix h = random_hermitian(rng, n);
            const auto ev = hermitian_eigenvalues(h);
            REQUIRE(ev.size() == n);
            CHECK(std::is_sorted(ev.begin(), ev.end()));
            double tr = 0.0, fro = 0.0, s1 = 0.0, s2 = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                tr += h(r, r).real();
                for (std::size_t c = 0; c < n; ++c) fro += std::norm(h(r, c));
            }
            for (double l : ev) {
                s1 += l;
                s2 += l * l;
            }
            CHECK(std::abs(tr - s1) < 1e-12);
            CHECK(std::abs(fro - s2) < 1e-11);
            // det(H - l I) vanishes for each eigenvalue: checked through the 2x2 closed form
            if (n == 2) {
                const double a = h(0, 0).real(), d = h(1, 1).real();
                const double disc = std::sqrt((a - d) * (a - d) / 4.0 + std::norm(h(0, 1)));
                CHECK(std::abs(ev[0] - ((a + d) / 2.0 - disc)) < 1e-13);
                CHECK(std::abs(ev[1] - ((a + d) / 2.0 + disc)) < 1e-13);
            }
        }
    }
    ComplexMatrix diag(3, 3);
    diag(0, 0) = 3.0;
    diag(1, 1) = -1.0;
    diag(2, 2) = 0.5;
    const auto ev = hermitian_eigenvalues(diag);
    CHECK(ev[0] == doctest::Approx(-1.0));
    CHECK(ev[1] == doctest::Approx(0.5));
    CHECK(ev[2] == doctest::Approx(3.0));
}

TEST_CASE("Cesaro weights") {
    CHECK(cesaro_weight(3, 2, 2) == Rational(3, 10));
    CHECK(cesaro_weight(3, 0, 2) == Rational(1));
    CHECK(cesaro_weight(3, 4, 2) == Rational(0));
    for (int n_vars = 2; n_vars <= 5; ++n_vars) {
        for (int n = 0; n <= 9; ++n) {
            for (int m = 0; m <= n; ++m) CHECK(cesaro_weight(n, m, n_vars - 1) == rising_form(n, m, n_vars));
        }
    }
    CHECK_THROWS_AS(cesaro_weight(2, -1, 1), InvalidArgument);
}

TEST_CASE("complete symmetric polynomial against composition enumeration") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n_vars = 1; n_vars <= 4; ++n_vars) {
        std::vector<ComplexScalar> x;
        for (int i = 0; i < n_vars; ++i) x.emplace_back(u(rng), u(rng));
        for (int n = 0; n <= 5; ++n) {
            ComplexScalar brute = 0.0;
            MultiIndex a(static_cast<std::size_t>(n_vars), 0);
            std::function<void(int, int)> rec = [&](int pos, int left) {
                if (pos == n_vars - 1) {
                    a[static_cast<std::size_t>(pos)] = left;
                    ComplexScalar m = 1.0;
                    for (int i = 0; i < n_vars; ++i) m *= std::pow(x[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i)]);
                    brute += m;
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    a[static_cast<std::size_t>(pos)] = v;
                    rec(pos + 1, left - v);
                }
            };
            rec(0, n);
            CHECK(std::abs(complete_symmetric(n, x) - brute) < 1e-12);
        }
    }
}

TEST_CASE("h_n(1/x) h_n(x) equals the Cesaro mean of the Dirichlet sums") {
    for (int n_vars = 2; n_vars <= 4; ++n_vars) {
        const auto pts = sample_points(n_vars, 20, 99);
        for (int n = 0; n <= 8; ++n) {
            for (const auto& x : pts) {
                const auto r = sigma_identity(n, x);
                CHECK(r.residual < 1e-10);
                CHECK(std::abs(r.sigma_imag) < 1e-10);
                CHECK(r.sigma > -1e-10);
            }
        }
    }
    // at x = 1 every monomial is 1, so sigma equals (N)_n / n!
    TorusPoint one{{0.0, 0.0, 0.0}};
    CHECK(sigma_identity(4, one).sigma == doctest::Approx(15.0));
}

TEST_CASE("sampling is reproducible") {
    const auto a = sample_points(3, 5, 7);
    const auto b = sample_points(3, 5, 7);
    const auto c = sample_points(3, 5, 8);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].theta == b[i].theta);
    CHECK(a[0].theta != c[0].theta);
    for (const auto& p : a)
        for (double t : p.theta) CHECK((t >= 0.0 && t < 2.0 * std::numbers::pi));
}

TEST_CASE("H_n and K_n symmetries for (2,1)") {
    const Partition shape({2, 1});
    auto rep = Representation::of(shape);
    const auto kappa = make_kappa(1, 5, shape);
    CoeffStore store(rep, kappa);
    KernelEvaluator eval(store);
    const auto pts = sample_points(3, 6, 5);
    // H_0 is the identity
    const ComplexMatrix h0 = eval.h_matrix(0, pts[0]);
    CHECK((h0 - ComplexMatrix::identity(rep->dim())).max_abs() < 1e-14);
    for (const auto& w : all_permutations(3)) {
        const ComplexMatrix t = eval.tau(w);
        CHECK((t * t.adjoint() - ComplexMatrix::identity(rep->dim())).max_abs() < 1e-13);
    }
    for (int n = 1; n <= 4; ++n) {
        for (const auto& x : pts) {
            const ComplexMatrix h = eval.h_matrix(n, x);
            // coefficient adjointness makes H_n Hermitian on the torus
            CHECK((h - h.adjoint()).max_abs() < 1e-12);
            for (const auto& w : all_permutations(3)) {
                const ComplexMatrix t = eval.tau(w);
                CHECK((eval.h_matrix(n, x.permuted(w)) - t.adjoint() * h * t).max_abs() < 1e-12);
            }
            CHECK((eval.h_matrix(n, x.rotated(1.1)) - h).max_abs() < 1e-12);
        }
    }
    const auto report = kernel_report(eval, 4, 10, 123);
    CHECK(report.min_eigenvalues.size() == 10);
    CHECK(report.worst_min_eigenvalue > 0.0);
    CHECK(report.hermiticity_residual < 1e-12);
    CHECK(report.covariance_residual < 1e-12);
    CHECK(report.homogeneity_residual < 1e-12);
    CHECK(report.cyclic_residual < 1e-12);
}

TEST_CASE("torus points of the wrong length are rejected") {
    const Partition shape({2, 1});
    CoeffStore store(Representation::of(shape), make_kappa(1, 5, shape));
    KernelEvaluator eval(store);
    CHECK_THROWS_AS(eval.h_matrix(1, TorusPoint{{0.0, 1.0}}), InvalidArgument);
}

TEST_CASE("Cesaro weight closed form for three variables and its limit") {
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n; ++m)
            CHECK(cesaro_weight(n, m, 2) == (Rational(1) - Rational(m, n + 1)) * (Rational(1) - Rational(m, n + 2)));
    for (int m = 0; m <= 5; ++m) CHECK(std::abs(cesaro_weight(1000000, m, 3).to_double() - 1.0) < 1e-4 * (m + 1));
    CHECK(std::abs(cesaro_weight(1000000, 1, 2).to_double() - 1.0) < 1e-5);
    CHECK(std::abs(cesaro_weight(1000000, 3, 2).to_double() - 1.0) < 1e-5);
}

TEST_CASE("identity residual at the unit point and at grade zero") {
    for (int n_vars = 2; n_vars <= 5; ++n_vars) {
        const TorusPoint one{std::vector<double>(static_cast<std::size_t>(n_vars), 0.0)};
        for (int n = 0; n <= 8; ++n) CHECK(sigma_identity_residual(n, one) < 1e-9);
        for (const auto& x : sample_points(n_vars, 5, 1)) CHECK(sigma_identity_residual(0, x) == 0.0);
    }
}
