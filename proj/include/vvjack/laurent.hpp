#pragma once

#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vvjack/kappa.hpp"
#include "vvjack/matrix.hpp"
#include "vvjack/permutation.hpp"
#include "vvjack/representation.hpp"

namespace vvjack {

/// Sparse V_tau-valued Laurent polynomial sum_a x^a (x) v_a, with v_a given in
/// the unnormalized RSYT basis. Zero coefficient vectors are never stored.
class VVLaurent {
public:
    using Terms = std::unordered_map<MultiIndex, RationalVector, MultiIndexHash>;

    VVLaurent(std::shared_ptr<const Representation> rep, KappaParam kappa);

    /// x^a (x) v
    static VVLaurent monomial(std::shared_ptr<const Representation> rep, KappaParam kappa, MultiIndex a,
                              RationalVector v);

    const Representation& rep() const noexcept { return *rep_; }
    const std::shared_ptr<const Representation>& rep_ptr() const noexcept { return rep_; }
    const KappaParam& kappa() const noexcept { return kappa_; }
    int n() const noexcept { return rep_->n(); }
    std::size_t dim() const noexcept { return rep_->dim(); }

    const Terms& terms() const noexcept { return terms_; }
    /// Terms sorted lexicographically by exponent.
    std::vector<std::pair<MultiIndex, RationalVector>> sorted_terms() const;
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Coefficient of x^a (zero vector if absent).
    RationalVector coefficient(const MultiIndex& a) const;
    bool is_polynomial() const;

    /// Accumulates c x^a (x) v.
    void add_term(const MultiIndex& a, const RationalVector& v, const Rational& c = Rational(1));
    VVLaurent zero_like() const { return VVLaurent(rep_, kappa_); }

    VVLaurent& operator+=(const VVLaurent& o);
    VVLaurent& operator-=(const VVLaurent& o);
    VVLaurent& operator*=(const Rational& s);
    friend VVLaurent operator+(VVLaurent a, const VVLaurent& b) { return a += b; }
    friend VVLaurent operator-(VVLaurent a, const VVLaurent& b) { return a -= b; }
    friend VVLaurent operator*(const Rational& s, VVLaurent a) { return a *= s; }
    friend bool operator==(const VVLaurent& a, const VVLaurent& b);

    /// Multiplication by x_i (1-based).
    VVLaurent mul_x(int i) const;

private:
    void check_compatible(const VVLaurent& o) const;

    std::shared_ptr<const Representation> rep_;
    KappaParam kappa_;
    Terms terms_;
};

/// w f: x^a (x) v -> x^{w a} (x) sigma(w) v.
VVLaurent group_action(const Permutation& w, const VVLaurent& f);
/// s_i f for 1-based 1 <= i <= N-1 via the sparse reflection.
VVLaurent simple_action(int i, const VVLaurent& f);
/// Apply a matrix to every coefficient vector.
VVLaurent apply_matrix(const RationalMatrix& m, const VVLaurent& f);

/// Dunkl operator D_i (1-based). Throws LaurentInput on negative exponents.
VVLaurent dunkl(int i, const VVLaurent& f);
/// Cherednik-Dunkl operator U_i (1-based). Throws LaurentInput.
VVLaurent cherednik(int i, const VVLaurent& f);
/// Multiply by e_N^m = (x_1 ... x_N)^m, m of any sign.
VVLaurent e_shift(int m, const VVLaurent& f);

}  // namespace vvjack
