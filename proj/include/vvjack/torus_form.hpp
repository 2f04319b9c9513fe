#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "vvjack/coeff_store.hpp"
#include "vvjack/laurent.hpp"
#include "vvjack/yb_graph.hpp"

namespace vvjack {

/// <zeta_{l,T}, zeta_{l,T}>_T for a partition l:
/// <T,T>_0 prod_{i<j} prod_{m=1}^{l_i - l_j} (1 - (kappa / (m + kappa (c(i,T) - c(j,T))))^2).
Rational norm_partition(const MultiIndex& lambda, const Rsyt& t, const KappaParam& kappa);

/// E_eps(alpha, T) over pairs i<j with alpha_i < alpha_j.
Rational e_factor(const MultiIndex& alpha, const Rsyt& t, int eps, const KappaParam& kappa);

/// norm_partition times prod_i (1 + kappa c(i,T))_{lambda_i}.
Rational covariant_norm(const MultiIndex& lambda, const Rsyt& t, const KappaParam& kappa);

/// (E_1 E_{-1})^{-1} norm_partition(alpha^+, T): the closed-form torus norm of zeta_{alpha,T}.
Rational expected_norm(const MultiIndex& alpha, const Rsyt& t, const KappaParam& kappa);

/// The torus form over a coefficient store, with a per-context cache of the
/// pairing matrices G_g.
class FormContext {
public:
    explicit FormContext(CoeffStore& store) : store_(store) {}

    CoeffStore& store() noexcept { return store_; }
    const Representation& rep() const noexcept { return store_.rep(); }

    /// sum_{a,b} f_a^T G_{a-b} g_b. Throws NotYetComputable past the grade cap.
    Rational pair(const VVLaurent& f, const VVLaurent& g);
    /// Gram matrix of the given polynomials.
    RationalMatrix gram(const std::vector<const VVLaurent*>& polys);

private:
    const RationalMatrix& pairing(const MultiIndex& g);

    CoeffStore& store_;
    std::unordered_map<MultiIndex, RationalMatrix, MultiIndexHash> cache_;
};

/// Gram matrix of NSJPs labelled by (alpha, tableau index).
RationalMatrix gram(YangBaxterGraph& graph, const std::vector<std::pair<MultiIndex, std::size_t>>& nodes,
                    FormContext& ctx);

}  // namespace vvjack
