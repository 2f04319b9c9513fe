#include <cmath>
#include <random>

#include "doctest.h"
#include "vvjack/diff_system.hpp"
#include "vvjack/errors.hpp"

using namespace vvjack;

namespace {

RationalVector rv(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

RationalVector random_regular_point(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    for (;;) {
        RationalVector x;
        for (int i = 0; i < n; ++i) x.emplace_back(num(rng), den(rng));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (x[static_cast<std::size_t>(i)].is_zero()) ok = false;
            for (int j = i + 1; j < n && ok; ++j)
                if (x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)]) ok = false;
        }
        if (ok) return x;
    }
}

// M_i assembled from the group representation directly.
RationalMatrix termwise(const Representation& rep, const Rational& gamma, int i, const RationalVector& x) {
    RationalMatrix m(rep.dim(), rep.dim());
    for (int j = 1; j <= rep.n(); ++j) {
        if (j == i) continue;
        const RationalMatrix s = rep.rep_matrix(Permutation::transposition(rep.n(), i - 1, j - 1));
        m += s * (Rational(1) / (x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)]));
    }
    m -= RationalMatrix::identity(rep.dim()) * (gamma / x[static_cast<std::size_t>(i - 1)]);
    return m;
}

TorusPoint angles(std::initializer_list<double> t) { return TorusPoint{std::vector<double>(t)}; }

double defect(const ComplexMatrix& l) { return (l - ComplexMatrix::identity(l.rows())).max_abs(); }

}  // namespace

TEST_CASE("gamma constant") {
    CHECK(gamma_const(Partition({2, 1})) == Rational(0));
    CHECK(gamma_const(Partition({3, 3, 1})) == Rational(1, 7));
    CHECK(gamma_const(Partition({3, 1})) == Rational(1, 2));
    for (int n = 3; n <= 7; ++n) {
        for (const auto& shape : admissible_shapes(n)) CHECK(gamma_from_rows(shape) == gamma_from_contents(shape));
    }
    CHECK_THROWS_AS(gamma_const(Partition::raw({3})), InvalidShape);
    CHECK_THROWS_AS(gamma_const(Partition::raw({1, 1, 1})), InvalidShape);
}

TEST_CASE("connection matrices at rational points") {
    const Partition shape({2, 1});
    DiffSystem sys(Representation::of(shape), make_kappa(1, 4, shape));
    const auto x = rv({1, 2, 3});
    for (int i = 1; i <= 3; ++i) CHECK(sys.connection(i, x) == termwise(sys.rep(), sys.gamma(), i, x));
    CHECK(sys.euler_residual(x).is_zero());
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(sys.integrability_residual(i, j, x).is_zero());
    CHECK_THROWS_AS(sys.connection(1, rv({1, 1, 2})), SingularPoint);
    CHECK_THROWS_AS(sys.connection(1, rv({0, 1, 2})), SingularPoint);
    CHECK_THROWS_AS(sys.integrability_residual(1, 2, rv({1, 2, 2})), SingularPoint);
    CHECK_THROWS_AS(sys.connection(4, x), IndexOutOfRange);
}

TEST_CASE("closed-form partials against central differences") {
    const Partition shape({3, 1});
    DiffSystem sys(Representation::of(shape), make_kappa(1, 7, shape));
    const auto x = rv({1, -2, 3, 5});
    const Rational eps(1, 1000000);
    for (int i = 1; i <= 4; ++i) {
        auto xp = x, xm = x;
        xp[static_cast<std::size_t>(i - 1)] += eps;
        xm[static_cast<std::size_t>(i - 1)] -= eps;
        for (int j = 1; j <= 4; ++j) {
            const RationalMatrix fd = (sys.connection(j, xp) - sys.connection(j, xm)) * (Rational(1) / (Rational(2) * eps));
            CHECK((fd - sys.partial(i, j, x)).max_abs() < 1e-9);
        }
    }
}

TEST_CASE("integrability and Euler identity at random rational points") {
    std::mt19937 rng(2024);
    for (const auto& parts : {std::vector<int>{2, 1}, std::vector<int>{3, 1}}) {
        const Partition shape(parts);
        DiffSystem sys(Representation::of(shape), make_kappa(1, 5, shape));
        const int n = shape.size();
        for (int s = 0; s < 20; ++s) {
            const auto x = random_regular_point(rng, n);
            CHECK(sys.euler_residual(x).is_zero());
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) CHECK(sys.integrability_residual(i, j, x).is_zero());
        }
    }
}

TEST_CASE("numeric connection agrees with the rational one") {
    const Partition shape({2, 2});
    DiffSystem sys(Representation::of(shape), make_kappa(1, 5, shape));
    const auto x = rv({1, 2, -3, 5});
    std::vector<ComplexScalar> xc;
    for (const auto& v : x) xc.emplace_back(v.to_double(), 0.0);
    for (int i = 1; i <= 4; ++i) {
        const RationalMatrix m = sys.connection(i, x);
        const ComplexMatrix mc = sys.connection(i, xc);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) CHECK(std::abs(mc(r, c) - m(r, c).to_double()) < 1e-14);
    }
}

TEST_CASE("transport along paths") {
    const Partition shape({2, 1});
    DiffSystem sys(Representation::of(shape), make_kappa(1, 5, shape));
    const auto x0 = angles({0.0, 2.0, 4.0});
    CHECK(defect(sys.integrate_path(x0, x0, 10).transport) < 1e-15);

    // rotation x0 -> u x0 is tangent to the Euler field
    CHECK(defect(sys.integrate_path(x0, x0.rotated(0.9), 10000).transport) < 1e-6);

    // a generic open path transports nontrivially
    const auto far = angles({0.3, 2.0, 3.5});
    CHECK(defect(sys.integrate_path(x0, far, 200).transport) > 1e-3);

    // closed square loop in the (theta_1, theta_2) plane around x0
    const std::vector<TorusPoint> loop = {angles({-0.3, 1.7, 4.0}), angles({0.3, 1.7, 4.0}),
                                          angles({0.3, 2.3, 4.0}), angles({-0.3, 2.3, 4.0})};
    const auto fine = sys.integrate_loop(loop, 2500);
    CHECK(fine.steps == 10000);
    CHECK(defect(fine.transport) < 1e-6);
    CHECK(fine.min_separation > fine.clearance);

    // fourth-order convergence of the loop defect
    const double d1 = defect(sys.integrate_loop(loop, 4).transport);
    const double d2 = defect(sys.integrate_loop(loop, 8).transport);
    const double ratio = d1 / d2;
    MESSAGE("loop defect ratio " << ratio);
    CHECK(ratio > 8.0);
    CHECK(ratio < 32.0);

    CHECK_THROWS_AS(sys.integrate_path(angles({0.0, 0.02, 3.0}), angles({0.0, 1.0, 3.0}), 10), PathNearSingular);
    CHECK_THROWS_AS(sys.integrate_path(x0, angles({0.0, 1.0}), 10), InvalidArgument);
}
