#pragma once

#include <optional>

#include "vvjack/partition.hpp"
#include "vvjack/rational.hpp"

namespace vvjack {

/// A fixed rational kappa validated against a shape.
///
/// The excluded set is {-m/c : 1 <= c <= tau_1 - 1} u {m/c : 1 <= c <= l(tau) - 1}
/// with m a positive integer; these are exactly the values at which some
/// operator (gamma_1 I + kappa omega_m) in the coefficient recurrence becomes
/// singular. `psd_range` records -1/h_tau < kappa < 1/h_tau.
class KappaParam {
public:
    const Rational& value() const noexcept { return value_; }
    const Partition& shape() const noexcept { return shape_; }
    bool psd_range() const noexcept { return psd_range_; }

    /// Skips the excluded-set check. Only for probing pole behaviour.
    static KappaParam unchecked(const Rational& value, const Partition& shape);

private:
    friend KappaParam make_kappa(const Rational&, const Partition&);
    KappaParam(Rational value, Partition shape, bool psd)
        : value_(std::move(value)), shape_(std::move(shape)), psd_range_(psd) {}

    Rational value_;
    Partition shape_;
    bool psd_range_;
};

/// The pole m/c (signed) that `value` coincides with, if any.
std::optional<Rational> excluded_pole_witness(const Rational& value, const Partition& shape);

/// Throws PoleExcluded when kappa lies in the excluded set.
KappaParam make_kappa(const Rational& value, const Partition& shape);
/// Throws InvalidArgument when q == 0.
KappaParam make_kappa(long p, long q, const Partition& shape);

/// 1/(h_tau + 1): never a pole and always inside the positivity window.
KappaParam default_kappa(const Partition& shape);

}  // namespace vvjack
