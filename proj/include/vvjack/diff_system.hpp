#pragma once

#include <memory>
#include <vector>

#include "vvjack/cesaro.hpp"
#include "vvjack/kappa.hpp"
#include "vvjack/representation.hpp"

namespace vvjack {

/// (1/2N) sum_i tau_i (tau_i - 2i + 1), from the row lengths.
Rational gamma_from_rows(const Partition& shape);
/// (1/N) sum_j c(j, T0).
Rational gamma_from_contents(const Partition& shape);
/// Both formulas, checked against each other. InvalidShape for one-row or
/// one-column shapes.
Rational gamma_const(const Partition& shape);

/// Transport of L along a path, with the smallest pairwise distance seen.
struct PathReport {
    ComplexMatrix transport;
    int steps = 0;
    double clearance = 0.0;
    double min_separation = 0.0;
};

/// The connection M_i(x) = sum_{j != i} sigma(i,j)/(x_i - x_j) - (gamma/x_i) I
/// on the regular set, with the system dL = kappa L M.
class DiffSystem {
public:
    DiffSystem(std::shared_ptr<const Representation> rep, KappaParam kappa);

    const Representation& rep() const noexcept { return *rep_; }
    const KappaParam& kappa() const noexcept { return kappa_; }
    const Rational& gamma() const noexcept { return gamma_; }

    /// M_i at a rational point, i 1-based. SingularPoint off the regular set.
    RationalMatrix connection(int i, const RationalVector& x) const;
    /// d M_j / d x_i in closed form.
    RationalMatrix partial(int i, int j, const RationalVector& x) const;
    /// d_i M_j - d_j M_i - kappa (M_j M_i - M_i M_j); zero when i == j.
    RationalMatrix integrability_residual(int i, int j, const RationalVector& x) const;
    /// sum_i x_i M_i(x)
    RationalMatrix euler_residual(const RationalVector& x) const;

    /// M_i at a complex point.
    ComplexMatrix connection(int i, const std::vector<ComplexScalar>& x) const;

    /// RK4 on the straight angle-space segment from start to end. Throws
    /// PathNearSingular when two coordinates come closer than `clearance`.
    PathReport integrate_path(const TorusPoint& start, const TorusPoint& end, int steps,
                              double clearance = 0.05) const;
    /// Transport around the closed polygon through `vertices`.
    PathReport integrate_loop(const std::vector<TorusPoint>& vertices, int steps_per_segment,
                              double clearance = 0.05) const;

private:
    void check_regular(const RationalVector& x) const;

    std::shared_ptr<const Representation> rep_;
    KappaParam kappa_;
    Rational gamma_;
    std::vector<std::vector<ComplexMatrix>> sigma_float_;
};

}  // namespace vvjack
