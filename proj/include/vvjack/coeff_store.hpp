#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "vvjack/kappa.hpp"
#include "vvjack/matrix.hpp"
#include "vvjack/numeric.hpp"
#include "vvjack/permutation.hpp"
#include "vvjack/representation.hpp"

namespace vvjack {

struct StoreOptions {
    /// Grades above this raise NotYetComputable.
    int grade_cap = 64;
    /// When set, each nu-class is solved in a random linear extension of the
    /// dominance order on pi-parts instead of increasing lexicographic order.
    std::optional<std::uint64_t> order_seed;
};

/// Grade-indexed store of the Fourier-Stieltjes coefficient matrices.
///
/// The carrier is C_g = D^{-1/2} A_g D^{1/2}, D = diag(<T,T>_0), in which all
/// recurrence and symmetry relations hold with the rational matrices sigma(w).
/// The monomial pairing matrix is G_g = D C_g = D^{1/2} A_g D^{1/2}.
class CoeffStore {
public:
    CoeffStore(std::shared_ptr<const Representation> rep, KappaParam kappa, StoreOptions options = {});

    const Representation& rep() const noexcept { return *rep_; }
    const std::shared_ptr<const Representation>& rep_ptr() const noexcept { return rep_; }
    const KappaParam& kappa() const noexcept { return kappa_; }
    const StoreOptions& options() const noexcept { return options_; }
    int sealed_grade() const;

    /// Solves grade n; requires every lower grade sealed. Throws PoleExcluded,
    /// NotYetComputable.
    void solve_grade(int n);
    /// Solves every grade up to n.
    void ensure_grade(int n);

    /// C_g for any g in Z^N (zero matrix off Z_N).
    RationalMatrix coeff(const MultiIndex& g);
    /// G_g = D C_g.
    RationalMatrix pairing(const MultiIndex& g);
    /// A_g = D^{1/2} C_g D^{-1/2} in floating point.
    ComplexMatrix orthonormal(const MultiIndex& g);

    /// Canonical (non-increasing) gamma of grade n with their carriers.
    const std::map<MultiIndex, RationalMatrix>& grade_entries(int n) const;
    /// The order in which grade n was solved.
    const std::vector<MultiIndex>& solve_order(int n) const;

    /// Inserts a precomputed grade (used when loading a persisted store).
    void install_grade(int n, std::map<MultiIndex, RationalMatrix> entries);

private:
    RationalMatrix lookup(const MultiIndex& g, int solving_grade);
    RationalMatrix solve_one(const MultiIndex& g, int n);
    std::vector<MultiIndex> class_order(std::vector<MultiIndex> members, std::uint64_t salt) const;

    std::shared_ptr<const Representation> rep_;
    KappaParam kappa_;
    StoreOptions options_;
    mutable std::recursive_mutex mutex_;
    std::vector<std::map<MultiIndex, RationalMatrix>> grades_;
    std::vector<std::vector<MultiIndex>> orders_;
};

/// (a_i - b_i) C_{a-b} minus the four kappa-sums of the self-adjointness
/// identity for x_i D_i; i is 1-based and |a| = |b|. Expected zero.
RationalMatrix verify_selfadjoint(const MultiIndex& a, const MultiIndex& b, int i, CoeffStore& store);

/// Residuals of the three grade-2 closed relations (1-based j):
/// (a) 3 <= j <= N, (b) 3 <= j <= N-1, (c) no index.
RationalMatrix grade2_residual_a(CoeffStore& store, int j);
RationalMatrix grade2_residual_b(CoeffStore& store, int j);
RationalMatrix grade2_residual_c(CoeffStore& store);

}  // namespace vvjack
