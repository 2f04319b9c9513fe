#include "vvjack/kappa.hpp"

#include "vvjack/errors.hpp"

namespace vvjack {

namespace {

bool in_psd_window(const Rational& k, const Partition& shape) {
    const Rational bound(1, shape.max_hook());
    return -bound < k && k < bound;
}

}  // namespace

std::optional<Rational> excluded_pole_witness(const Rational& value, const Partition& shape) {
    if (value.is_zero()) return std::nullopt;
    // value = +-m/c with c bounded iff its reduced denominator is within the bound.
    const mpz_class den = value.denominator();
    const long bound = value.sign() < 0 ? shape.first() - 1 : shape.length() - 1;
    if (den <= bound) return value;
    return std::nullopt;
}

KappaParam KappaParam::unchecked(const Rational& value, const Partition& shape) {
    return KappaParam(value, shape, in_psd_window(value, shape));
}

KappaParam make_kappa(const Rational& value, const Partition& shape) {
    if (auto w = excluded_pole_witness(value, shape)) {
        const Rational m = abs(*w) * Rational(w->denominator(), mpz_class(1));
        const std::string witness = (w->sign() < 0 ? "-" : "") + m.to_string() + "/" + w->denominator().get_str();
        throw PoleExcluded("kappa " + value.to_string() + " is a pole for shape (" + shape.to_string() +
                               "): equals " + witness,
                           value.to_string(), witness);
    }
    return KappaParam::unchecked(value, shape);
}

KappaParam make_kappa(long p, long q, const Partition& shape) {
    if (q == 0) throw InvalidArgument("kappa denominator must be nonzero");
    return make_kappa(Rational(p, q), shape);
}

KappaParam default_kappa(const Partition& shape) { return make_kappa(1, shape.max_hook() + 1, shape); }

}  // namespace vvjack
