#include "vvjack/laurent.hpp"

#include <algorithm>

#include "vvjack/compositions.hpp"
#include "vvjack/errors.hpp"

namespace vvjack {

VVLaurent::VVLaurent(std::shared_ptr<const Representation> rep, KappaParam kappa)
    : rep_(std::move(rep)), kappa_(std::move(kappa)) {
    if (!(rep_->shape() == kappa_.shape())) throw InvalidArgument("kappa was validated against a different shape");
}

VVLaurent VVLaurent::monomial(std::shared_ptr<const Representation> rep, KappaParam kappa, MultiIndex a,
                              RationalVector v) {
    VVLaurent f(std::move(rep), std::move(kappa));
    f.add_term(a, v);
    return f;
}

std::vector<std::pair<MultiIndex, RationalVector>> VVLaurent::sorted_terms() const {
    std::vector<std::pair<MultiIndex, RationalVector>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

RationalVector VVLaurent::coefficient(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? RationalVector(dim()) : it->second;
}

bool VVLaurent::is_polynomial() const {
    for (const auto& [a, v] : terms_) {
        for (int e : a) {
            if (e < 0) return false;
        }
    }
    return true;
}

void VVLaurent::add_term(const MultiIndex& a, const RationalVector& v, const Rational& c) {
    if (static_cast<int>(a.size()) != n()) throw InvalidArgument("exponent length does not match N");
    if (v.size() != dim()) throw InvalidArgument("coefficient length does not match dim V");
    if (c.is_zero() || vvjack::is_zero(v)) return;
    auto [it, inserted] = terms_.try_emplace(a, dim());
    auto& dst = it->second;
    for (std::size_t k = 0; k < dim(); ++k) {
        if (!v[k].is_zero()) dst[k] += c * v[k];
    }
    if (vvjack::is_zero(dst)) terms_.erase(it);
}

void VVLaurent::check_compatible(const VVLaurent& o) const {
    if (rep_ != o.rep_ && !(rep_->shape() == o.rep_->shape())) throw InvalidArgument("mixing different shapes");
}

VVLaurent& VVLaurent::operator+=(const VVLaurent& o) {
    check_compatible(o);
    for (const auto& [a, v] : o.terms_) add_term(a, v);
    return *this;
}

VVLaurent& VVLaurent::operator-=(const VVLaurent& o) {
    check_compatible(o);
    for (const auto& [a, v] : o.terms_) add_term(a, v, Rational(-1));
    return *this;
}

VVLaurent& VVLaurent::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_) {
        for (auto& x : v) x *= s;
    }
    return *this;
}

bool operator==(const VVLaurent& a, const VVLaurent& b) {
    return a.rep_->shape() == b.rep_->shape() && a.terms_ == b.terms_;
}

VVLaurent VVLaurent::mul_x(int i) const {
    if (i < 1 || i > n()) throw IndexOutOfRange("variable index outside 1..N");
    VVLaurent out = zero_like();
    for (const auto& [a, v] : terms_) {
        MultiIndex b = a;
        ++b[static_cast<std::size_t>(i - 1)];
        out.terms_.emplace(std::move(b), v);
    }
    return out;
}

VVLaurent group_action(const Permutation& w, const VVLaurent& f) {
    if (w.size() != f.n()) throw InvalidArgument("permutation size does not match N");
    const RationalMatrix s = f.rep().rep_matrix(w);
    VVLaurent out = f.zero_like();
    for (const auto& [a, v] : f.terms()) out.add_term(w.act(a), s * v);
    return out;
}

VVLaurent simple_action(int i, const VVLaurent& f) {
    const Permutation s = Permutation::simple(f.n(), i - 1);
    VVLaurent out = f.zero_like();
    for (const auto& [a, v] : f.terms()) out.add_term(s.act(a), f.rep().apply_simple(i, v));
    return out;
}

VVLaurent apply_matrix(const RationalMatrix& m, const VVLaurent& f) {
    VVLaurent out = f.zero_like();
    for (const auto& [a, v] : f.terms()) out.add_term(a, m * v);
    return out;
}

namespace {

void require_polynomial(const VVLaurent& f, const char* op) {
    if (!f.is_polynomial()) throw LaurentInput(std::string(op) + " needs nonnegative exponents");
}

}  // namespace

VVLaurent dunkl(int i, const VVLaurent& f) {
    require_polynomial(f, "dunkl");
    const int n = f.n();
    if (i < 1 || i > n) throw IndexOutOfRange("Dunkl index outside 1..N");
    const std::size_t ii = static_cast<std::size_t>(i - 1);
    const Rational& kappa = f.kappa().value();
    VVLaurent out = f.zero_like();
    for (const auto& [a, v] : f.terms()) {
        if (a[ii] > 0) {
            MultiIndex b = a;
            --b[ii];
            out.add_term(b, v, Rational(a[ii]));
        }
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const std::size_t jj = static_cast<std::size_t>(j - 1);
            const int ai = a[ii];
            const int aj = a[jj];
            if (ai == aj) continue;
            // (x^a - x^{(ij)a}) / (x_i - x_j) as a geometric sum
            const int hi = std::max(ai, aj);
            const int lo = std::min(ai, aj);
            const Rational sign = ai > aj ? kappa : -kappa;
            const RationalVector u = f.rep().transposition(i, j) * v;
            MultiIndex b = a;
            for (int k = 0; k < hi - lo; ++k) {
                b[ii] = hi - 1 - k;
                b[jj] = lo + k;
                out.add_term(b, u, sign);
            }
        }
    }
    return out;
}

VVLaurent cherednik(int i, const VVLaurent& f) {
    require_polynomial(f, "cherednik");
    if (i < 1 || i > f.n()) throw IndexOutOfRange("Cherednik index outside 1..N");
    VVLaurent out = dunkl(i, f.mul_x(i));
    const Rational minus_kappa = -f.kappa().value();
    for (int j = 1; j < i; ++j) {
        out += minus_kappa * group_action(Permutation::transposition(f.n(), i - 1, j - 1), f);
    }
    return out;
}

VVLaurent e_shift(int m, const VVLaurent& f) {
    VVLaurent out = f.zero_like();
    for (const auto& [a, v] : f.terms()) {
        MultiIndex b = a;
        for (auto& e : b) e += m;
        out.add_term(b, v);
    }
    return out;
}

}  // namespace vvjack
