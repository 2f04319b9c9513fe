#include "vvjack/torus_form.hpp"

#include <stdexcept>

#include "vvjack/compositions.hpp"
#include "vvjack/errors.hpp"
#include "vvjack/tableau.hpp"

namespace vvjack {

namespace {

Rational checked_inverse(const Rational& x, const char* where) {
    if (x.is_zero()) throw std::logic_error(std::string("vanishing denominator in ") + where);
    return Rational(1) / x;
}

}  // namespace

Rational norm_partition(const MultiIndex& lambda, const Rsyt& t, const KappaParam& kappa) {
    if (!is_partition(lambda)) throw InvalidArgument("norm_partition needs a partition, got " + to_string(lambda));
    const Rational& k = kappa.value();
    Rational result = norm0(t);
    const int n = static_cast<int>(lambda.size());
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int dc = t.content(i) - t.content(j);
            for (int l = 1; l <= lambda[static_cast<std::size_t>(i - 1)] - lambda[static_cast<std::size_t>(j - 1)]; ++l) {
                const Rational q = k * checked_inverse(Rational(l) + k * Rational(dc), "norm_partition");
                result *= Rational(1) - q * q;
            }
        }
    }
    return result;
}

Rational e_factor(const MultiIndex& alpha, const Rsyt& t, int eps, const KappaParam& kappa) {
    if (eps != 1 && eps != -1) throw InvalidArgument("epsilon must be +1 or -1");
    const Permutation r = rank_perm(alpha);
    const Rational ek = Rational(eps) * kappa.value();
    Rational result(1);
    const int n = static_cast<int>(alpha.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int ai = alpha[static_cast<std::size_t>(i)];
            const int aj = alpha[static_cast<std::size_t>(j)];
            if (ai >= aj) continue;
            const int dc = t.content(r(j) + 1) - t.content(r(i) + 1);
            result *= Rational(1) + ek * checked_inverse(Rational(aj - ai) + kappa.value() * Rational(dc), "e_factor");
        }
    }
    return result;
}

Rational covariant_norm(const MultiIndex& lambda, const Rsyt& t, const KappaParam& kappa) {
    Rational result = norm_partition(lambda, t, kappa);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const Rational base = Rational(1) + kappa.value() * Rational(t.content(static_cast<int>(i) + 1));
        for (int k = 0; k < lambda[i]; ++k) result *= base + Rational(k);
    }
    return result;
}

Rational expected_norm(const MultiIndex& alpha, const Rsyt& t, const KappaParam& kappa) {
    const Rational e = e_factor(alpha, t, 1, kappa) * e_factor(alpha, t, -1, kappa);
    return norm_partition(sorted_desc(alpha), t, kappa) * checked_inverse(e, "expected_norm");
}

const RationalMatrix& FormContext::pairing(const MultiIndex& g) {
    auto it = cache_.find(g);
    if (it == cache_.end()) it = cache_.emplace(g, store_.pairing(g)).first;
    return it->second;
}

Rational FormContext::pair(const VVLaurent& f, const VVLaurent& g) {
    if (!(f.rep().shape() == rep().shape()) || !(g.rep().shape() == rep().shape())) {
        throw InvalidArgument("polynomial shape does not match the store");
    }
    mpq_class acc = 0;
    MultiIndex diff(static_cast<std::size_t>(rep().n()));
    for (const auto& [a, u] : f.terms()) {
        for (const auto& [b, v] : g.terms()) {
            int s = 0;
            for (std::size_t k = 0; k < diff.size(); ++k) {
                diff[k] = a[k] - b[k];
                s += diff[k];
            }
            if (s != 0) continue;
            const RationalMatrix& gm = pairing(diff);
            for (std::size_t r = 0; r < u.size(); ++r) {
                if (u[r].is_zero()) continue;
                for (std::size_t c = 0; c < v.size(); ++c) {
                    if (v[c].is_zero() || gm(r, c).is_zero()) continue;
                    acc += u[r].raw() * gm(r, c).raw() * v[c].raw();
                }
            }
        }
    }
    return Rational(acc);
}

RationalMatrix FormContext::gram(const std::vector<const VVLaurent*>& polys) {
    RationalMatrix m(polys.size(), polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i; j < polys.size(); ++j) {
            m(i, j) = pair(*polys[i], *polys[j]);
            if (j != i) m(j, i) = pair(*polys[j], *polys[i]);
        }
    }
    return m;
}

RationalMatrix gram(YangBaxterGraph& graph, const std::vector<std::pair<MultiIndex, std::size_t>>& nodes,
                    FormContext& ctx) {
    std::vector<const VVLaurent*> polys;
    for (const auto& [alpha, t] : nodes) polys.push_back(&graph.build(alpha, t).poly);
    return ctx.gram(polys);
}

}  // namespace vvjack
