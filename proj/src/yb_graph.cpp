#include "vvjack/yb_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "vvjack/compositions.hpp"
#include "vvjack/errors.hpp"

namespace vvjack {

std::vector<Rational> spectral_vector(const MultiIndex& alpha, const Rsyt& t, const KappaParam& kappa) {
    const Permutation r = rank_perm(alpha);
    std::vector<Rational> xi;
    xi.reserve(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        xi.push_back(Rational(alpha[i] + 1) + kappa.value() * Rational(t.content(r(static_cast<int>(i)) + 1)));
    }
    return xi;
}

YangBaxterGraph::YangBaxterGraph(std::shared_ptr<const Representation> rep, KappaParam kappa, Schedule schedule)
    : rep_(std::move(rep)), kappa_(std::move(kappa)), schedule_(schedule) {
    if (!(rep_->shape() == kappa_.shape())) throw InvalidArgument("kappa was validated against a different shape");
    // Tableau steps T -> T^(j) go from c(j) - c(j+1) >= 2 to <= -2.
    const std::size_t d = rep_->dim();
    tableau_parent_.assign(d, -2);
    tableau_step_.assign(d, 0);
    std::deque<std::size_t> queue{rep_->root_index()};
    tableau_parent_[rep_->root_index()] = -1;
    while (!queue.empty()) {
        const std::size_t t = queue.front();
        queue.pop_front();
        const Rsyt& tab = rep_->tableau(t);
        for (int j = 1; j < rep_->n(); ++j) {
            if (tab.content(j) - tab.content(j + 1) < 2) continue;
            const std::size_t u = rep_->index_of(tab.swapped(rep_->shape(), j));
            if (tableau_parent_[u] != -2) continue;
            tableau_parent_[u] = static_cast<std::ptrdiff_t>(t);
            tableau_step_[u] = j;
            queue.push_back(u);
        }
    }
    for (auto p : tableau_parent_) {
        if (p == -2) throw InvalidArgument("tableau not reachable from the root");
    }
}

const GraphNode& YangBaxterGraph::build(const MultiIndex& alpha, std::size_t tableau) {
    std::lock_guard lock(mutex_);
    if (static_cast<int>(alpha.size()) != rep_->n()) throw InvalidArgument("alpha length does not match N");
    if (tableau >= rep_->dim()) throw IndexOutOfRange("tableau index outside Y(tau)");
    for (int v : alpha) {
        if (v < 0) throw NegativeEntry("NSJP label must be a composition: " + to_string(alpha));
    }
    return build_locked(alpha, tableau);
}

const GraphNode& YangBaxterGraph::build_locked(const MultiIndex& alpha, std::size_t tableau) {
    const auto key = std::make_pair(alpha, tableau);
    if (auto it = nodes_.find(key); it != nodes_.end()) return it->second;

    const int n = rep_->n();
    const Rsyt& tab = rep_->tableau(tableau);
    GraphNode node{alpha, tableau, spectral_vector(alpha, tab, kappa_), rank_perm(alpha),
                   VVLaurent(rep_, kappa_), 0, 0};

    const bool zero = std::all_of(alpha.begin(), alpha.end(), [](int v) { return v == 0; });
    if (zero) {
        const std::ptrdiff_t parent = tableau_parent_[tableau];
        if (parent < 0) {
            node.poly.add_term(alpha, rep_->unit(tableau));
        } else {
            // zeta_{0,T^(j)} = s_j zeta_{0,T} - b zeta_{0,T}, b = 1/(c(j,T) - c(j+1,T))
            const GraphNode& prev = build_locked(alpha, static_cast<std::size_t>(parent));
            const int j = tableau_step_[tableau];
            const Rsyt& pt = rep_->tableau(static_cast<std::size_t>(parent));
            const Rational b(1, pt.content(j) - pt.content(j + 1));
            node.poly = simple_action(j, prev.poly) - b * prev.poly;
            node.jumps = prev.jumps;
            node.steps = prev.steps + 1;
        }
        return nodes_.emplace(key, std::move(node)).first->second;
    }

    int descent = -1;  // 0-based i with alpha_i > alpha_{i+1}
    for (int i = 0; i + 1 < n; ++i) {
        if (alpha[static_cast<std::size_t>(i)] > alpha[static_cast<std::size_t>(i + 1)]) {
            descent = i;
            if (schedule_ != Schedule::Rightmost) break;
        }
    }
    const bool can_jump = alpha.back() >= 1;
    const bool jump = can_jump && (descent < 0 || schedule_ == Schedule::JumpFirst);

    if (jump) {
        // zeta_{Phi beta} = x_N w0^{-1} zeta_beta
        const MultiIndex beta = phi_inverse(alpha);
        const GraphNode& prev = build_locked(beta, tableau);
        node.poly = group_action(Permutation::cycle(n).inverse(), prev.poly).mul_x(n);
        node.jumps = prev.jumps + 1;
        node.steps = prev.steps;
    } else {
        // zeta_{s_i beta} = s_i zeta_beta - kappa / (xi_beta(i) - xi_beta(i+1)) zeta_beta
        const MultiIndex beta = Permutation::simple(n, descent).act(alpha);
        const GraphNode& prev = build_locked(beta, tableau);
        const Rational gap = prev.spectral[static_cast<std::size_t>(descent)] - prev.spectral[static_cast<std::size_t>(descent + 1)];
        if (gap.is_zero()) {
            throw SpectralCollision("xi_" + std::to_string(descent + 1) + " = xi_" + std::to_string(descent + 2) +
                                    " at alpha " + to_string(beta) + ", kappa " + kappa_.value().to_string());
        }
        node.poly = simple_action(descent + 1, prev.poly) - (kappa_.value() / gap) * prev.poly;
        node.jumps = prev.jumps;
        node.steps = prev.steps + 1;
    }
    return nodes_.emplace(key, std::move(node)).first->second;
}

std::vector<MultiIndex> compositions_of_degree(int n_vars, int degree) {
    std::vector<MultiIndex> out;
    MultiIndex a(static_cast<std::size_t>(n_vars), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n_vars - 1) {
            a[static_cast<std::size_t>(pos)] = left;
            out.push_back(a);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n_vars > 0) rec(0, degree);
    std::sort(out.begin(), out.end(), [](const MultiIndex& x, const MultiIndex& y) {
        const auto xp = sorted_desc(x);
        const auto yp = sorted_desc(y);
        return xp != yp ? xp < yp : x < y;
    });
    return out;
}

std::vector<const GraphNode*> YangBaxterGraph::build_layer(int degree) {
    std::lock_guard lock(mutex_);
    std::vector<const GraphNode*> out;
    for (const auto& alpha : compositions_of_degree(rep_->n(), degree)) {
        for (std::size_t t = 0; t < rep_->dim(); ++t) out.push_back(&build_locked(alpha, t));
    }
    return out;
}

VVLaurent YangBaxterGraph::nsjp_laurent(const MultiIndex& alpha, std::size_t tableau) {
    const int lowest = alpha.empty() ? 0 : *std::min_element(alpha.begin(), alpha.end());
    const int m = std::max(0, -lowest);
    MultiIndex shifted = alpha;
    for (auto& v : shifted) v += m;
    return e_shift(-m, build(shifted, tableau).poly);
}

void YangBaxterGraph::check_distinct_spectra(int degree) {
    std::set<std::vector<Rational>> seen;
    for (const GraphNode* node : build_layer(degree)) {
        if (!seen.insert(node->spectral).second) {
            throw SpectralCollision("repeated spectral vector at alpha " + to_string(node->alpha));
        }
    }
}

std::size_t YangBaxterGraph::cached_nodes() const {
    std::lock_guard lock(mutex_);
    return nodes_.size();
}

std::pair<int, int> path_length(const MultiIndex& alpha, const Rsyt& t, const Rsyt& root) {
    return {total(alpha), steps_count(alpha) + t.inv() - root.inv()};
}

}  // namespace vvjack
