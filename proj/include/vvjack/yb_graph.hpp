#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "vvjack/laurent.hpp"

namespace vvjack {

/// A node (alpha, T, xi, r_alpha, zeta) of the Yang-Baxter graph, together
/// with the number of jumps and steps actually used to reach it.
struct GraphNode {
    MultiIndex alpha;
    std::size_t tableau;
    std::vector<Rational> spectral;
    Permutation rank;
    VVLaurent poly;
    int jumps = 0;
    int steps = 0;
};

/// Which edge is taken when several lead to the same node.
enum class Schedule {
    Leftmost,   ///< leftmost descent; jumps only from nondecreasing alpha
    Rightmost,  ///< rightmost descent; jumps only from nondecreasing alpha
    JumpFirst,  ///< a jump whenever alpha_N >= 1, else the leftmost descent
};

/// xi(i) = alpha_i + 1 + kappa c(r_alpha(i), T).
std::vector<Rational> spectral_vector(const MultiIndex& alpha, const Rsyt& t, const KappaParam& kappa);

/// Memoized construction of the NSJPs zeta_{alpha,T} for one shape and kappa.
class YangBaxterGraph {
public:
    YangBaxterGraph(std::shared_ptr<const Representation> rep, KappaParam kappa,
                    Schedule schedule = Schedule::Leftmost);

    const Representation& rep() const noexcept { return *rep_; }
    const std::shared_ptr<const Representation>& rep_ptr() const noexcept { return rep_; }
    const KappaParam& kappa() const noexcept { return kappa_; }

    /// Throws NegativeEntry, SpectralCollision.
    const GraphNode& build(const MultiIndex& alpha, std::size_t tableau);
    /// Builds every node of the given degree, exponents in increasing
    /// (alpha^+, alpha) lexicographic order; returns them in that order.
    std::vector<const GraphNode*> build_layer(int degree);

    /// zeta_alpha for alpha in Z^N: e_N^{-m} zeta_{alpha + m 1}.
    VVLaurent nsjp_laurent(const MultiIndex& alpha, std::size_t tableau);

    /// Throws SpectralCollision when two nodes of this degree share xi.
    void check_distinct_spectra(int degree);

    std::size_t cached_nodes() const;

private:
    const GraphNode& build_locked(const MultiIndex& alpha, std::size_t tableau);
    GraphNode make_root_layer(std::size_t tableau);

    std::shared_ptr<const Representation> rep_;
    KappaParam kappa_;
    Schedule schedule_;
    std::vector<std::ptrdiff_t> tableau_parent_;  // BFS tree on Y(tau) from T_0
    std::vector<int> tableau_step_;               // entry j of the step from the parent
    mutable std::recursive_mutex mutex_;
    std::map<std::pair<MultiIndex, std::size_t>, GraphNode> nodes_;
};

/// (|alpha|, S(alpha) + inv(T) - inv(T_0)).
std::pair<int, int> path_length(const MultiIndex& alpha, const Rsyt& t, const Rsyt& root);

/// All compositions of N with the given degree, ordered by (alpha^+, alpha).
std::vector<MultiIndex> compositions_of_degree(int n_vars, int degree);

}  // namespace vvjack
