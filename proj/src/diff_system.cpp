#include "vvjack/diff_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vvjack/errors.hpp"
#include "vvjack/tableau.hpp"

namespace vvjack {

namespace {

void require_admissible(const Partition& shape) {
    if (!shape.admissible()) throw InvalidShape("shape " + shape.to_string() + " needs at least two rows and two columns");
}

std::string point_text(const RationalVector& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].to_string();
    return s + ")";
}

}  // namespace

Rational gamma_from_rows(const Partition& shape) {
    require_admissible(shape);
    long long acc = 0;
    for (int i = 1; i <= shape.length(); ++i) {
        const long long t = shape.row(i - 1);
        acc += t * (t - 2 * i + 1);
    }
    return Rational(acc, 2LL * shape.size());
}

Rational gamma_from_contents(const Partition& shape) {
    require_admissible(shape);
    const Rsyt t0 = t_zero(shape);
    long long acc = 0;
    for (int j = 1; j <= shape.size(); ++j) acc += t0.content(j);
    return Rational(acc, shape.size());
}

Rational gamma_const(const Partition& shape) {
    const Rational a = gamma_from_rows(shape);
    const Rational b = gamma_from_contents(shape);
    if (a != b) throw std::logic_error("gamma formulas disagree for " + shape.to_string());
    return a;
}

DiffSystem::DiffSystem(std::shared_ptr<const Representation> rep, KappaParam kappa)
    : rep_(std::move(rep)), kappa_(std::move(kappa)), gamma_(gamma_const(rep_->shape())) {
    const int n = rep_->n();
    const std::size_t d = rep_->dim();
    sigma_float_.assign(static_cast<std::size_t>(n + 1), std::vector<ComplexMatrix>(static_cast<std::size_t>(n + 1)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const RationalMatrix& s = rep_->transposition(i, j);
            ComplexMatrix f(d, d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) f(r, c) = s(r, c).to_double();
            sigma_float_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(f);
        }
    }
}

void DiffSystem::check_regular(const RationalVector& x) const {
    if (static_cast<int>(x.size()) != rep_->n()) throw InvalidArgument("point has the wrong dimension");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) throw SingularPoint("coordinate " + std::to_string(i + 1) + " vanishes at " + point_text(x));
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (x[i] == x[j]) {
                throw SingularPoint("x_" + std::to_string(i + 1) + " = x_" + std::to_string(j + 1) + " at " + point_text(x));
            }
        }
    }
}

RationalMatrix DiffSystem::connection(int i, const RationalVector& x) const {
    check_regular(x);
    const int n = rep_->n();
    if (i < 1 || i > n) throw IndexOutOfRange("connection index out of range");
    const std::size_t ii = static_cast<std::size_t>(i - 1);
    RationalMatrix m = RationalMatrix::identity(rep_->dim()) * (-gamma_ / x[ii]);
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        m += rep_->transposition(i, j) * (Rational(1) / (x[ii] - x[static_cast<std::size_t>(j - 1)]));
    }
    return m;
}

RationalMatrix DiffSystem::partial(int i, int j, const RationalVector& x) const {
    check_regular(x);
    const int n = rep_->n();
    if (i < 1 || i > n || j < 1 || j > n) throw IndexOutOfRange("partial index out of range");
    const auto xi = [&](int k) -> const Rational& { return x[static_cast<std::size_t>(k - 1)]; };
    if (i != j) {
        const Rational d = xi(j) - xi(i);
        return rep_->transposition(i, j) * (Rational(1) / (d * d));
    }
    RationalMatrix m = RationalMatrix::identity(rep_->dim()) * (gamma_ / (xi(i) * xi(i)));
    for (int k = 1; k <= n; ++k) {
        if (k == i) continue;
        const Rational d = xi(i) - xi(k);
        m -= rep_->transposition(i, k) * (Rational(1) / (d * d));
    }
    return m;
}

RationalMatrix DiffSystem::integrability_residual(int i, int j, const RationalVector& x) const {
    if (i == j) {
        check_regular(x);
        return RationalMatrix(rep_->dim(), rep_->dim());
    }
    const RationalMatrix mi = connection(i, x);
    const RationalMatrix mj = connection(j, x);
    return partial(i, j, x) - partial(j, i, x) - kappa_.value() * (mj * mi - mi * mj);
}

RationalMatrix DiffSystem::euler_residual(const RationalVector& x) const {
    RationalMatrix acc(rep_->dim(), rep_->dim());
    for (int i = 1; i <= rep_->n(); ++i) acc += connection(i, x) * x[static_cast<std::size_t>(i - 1)];
    return acc;
}

ComplexMatrix DiffSystem::connection(int i, const std::vector<ComplexScalar>& x) const {
    const int n = rep_->n();
    if (static_cast<int>(x.size()) != n) throw InvalidArgument("point has the wrong dimension");
    if (i < 1 || i > n) throw IndexOutOfRange("connection index out of range");
    const ComplexScalar xi = x[static_cast<std::size_t>(i - 1)];
    ComplexMatrix m = ComplexMatrix::identity(rep_->dim());
    m *= -gamma_.to_double() / xi;
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        m.axpy(1.0 / (xi - x[static_cast<std::size_t>(j - 1)]),
               sigma_float_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

PathReport DiffSystem::integrate_path(const TorusPoint& start, const TorusPoint& end, int steps,
                                      double clearance) const {
    const int n = rep_->n();
    if (static_cast<int>(start.theta.size()) != n || static_cast<int>(end.theta.size()) != n) {
        throw InvalidArgument("path endpoints have the wrong dimension");
    }
    if (steps < 1) throw InvalidArgument("steps must be positive");
    PathReport out;
    out.steps = steps;
    out.clearance = clearance;
    out.min_separation = std::numeric_limits<double>::infinity();
    std::vector<double> delta(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < delta.size(); ++k) delta[k] = end.theta[k] - start.theta[k];
    const double kappa = kappa_.value().to_double();

    // dL/dt = kappa L sum_i M_i(x(t)) x_i'(t), x_i = exp(i theta_i(t))
    auto generator = [&](double t) {
        std::vector<ComplexScalar> x(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < x.size(); ++k) x[k] = std::polar(1.0, start.theta[k] + t * delta[k]);
        for (std::size_t a = 0; a < x.size(); ++a) {
            for (std::size_t b = a + 1; b < x.size(); ++b) {
                const double sep = std::abs(x[a] - x[b]);
                out.min_separation = std::min(out.min_separation, sep);
                if (sep < clearance) {
                    throw PathNearSingular("|x_" + std::to_string(a + 1) + " - x_" + std::to_string(b + 1) +
                                           "| = " + std::to_string(sep) + " below clearance " +
                                           std::to_string(clearance));
                }
            }
        }
        ComplexMatrix g(rep_->dim(), rep_->dim());
        for (int i = 1; i <= n; ++i) {
            const std::size_t k = static_cast<std::size_t>(i - 1);
            const ComplexScalar dx = ComplexScalar(0.0, delta[k]) * x[k];
            if (dx == 0.0) continue;
            g.axpy(kappa * dx, connection(i, x));
        }
        return g;
    };

    ComplexMatrix l = ComplexMatrix::identity(rep_->dim());
    const double h = 1.0 / steps;
    ComplexMatrix g0 = generator(0.0);
    for (int s = 0; s < steps; ++s) {
        const double t = s * h;
        const ComplexMatrix gm = generator(t + 0.5 * h);
        const ComplexMatrix g1 = generator(t + h);
        const ComplexMatrix k1 = l * g0;
        const ComplexMatrix k2 = (l + (0.5 * h) * k1) * gm;
        const ComplexMatrix k3 = (l + (0.5 * h) * k2) * gm;
        const ComplexMatrix k4 = (l + h * k3) * g1;
        l.axpy(h / 6.0, k1);
        l.axpy(h / 3.0, k2);
        l.axpy(h / 3.0, k3);
        l.axpy(h / 6.0, k4);
        g0 = g1;
    }
    out.transport = std::move(l);
    return out;
}

PathReport DiffSystem::integrate_loop(const std::vector<TorusPoint>& vertices, int steps_per_segment,
                                      double clearance) const {
    if (vertices.empty()) throw InvalidArgument("loop needs at least one vertex");
    PathReport out;
    out.transport = ComplexMatrix::identity(rep_->dim());
    out.clearance = clearance;
    out.min_separation = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        const PathReport seg =
            integrate_path(vertices[k], vertices[(k + 1) % vertices.size()], steps_per_segment, clearance);
        out.transport = out.transport * seg.transport;
        out.steps += seg.steps;
        out.min_separation = std::min(out.min_separation, seg.min_separation);
    }
    return out;
}

}  // namespace vvjack
