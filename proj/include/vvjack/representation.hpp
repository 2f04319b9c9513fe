#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "vvjack/matrix.hpp"
#include "vvjack/partition.hpp"
#include "vvjack/permutation.hpp"
#include "vvjack/tableau.hpp"

namespace vvjack {

/// The module V_tau in the unnormalized RSYT basis, ordered by
/// lexicographically decreasing content vectors. Column t of a matrix is the
/// image of basis vector t.
class Representation {
public:
    explicit Representation(const Partition& shape);

    /// Shared instance per shape; construction is cached process-wide.
    static std::shared_ptr<const Representation> of(const Partition& shape);

    const Partition& shape() const noexcept { return shape_; }
    int n() const noexcept { return shape_.size(); }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Rsyt>& basis() const noexcept { return basis_; }
    const Rsyt& tableau(std::size_t t) const { return basis_.at(t); }
    /// Index of the tableau with the given content vector. Throws InvalidArgument.
    std::size_t index_of(const std::vector<int>& contents) const;
    std::size_t index_of(const Rsyt& t) const { return index_of(t.contents()); }
    /// Index of T_0.
    std::size_t root_index() const noexcept { return root_; }

    /// sigma(s_i), s_i = (i, i+1), 1 <= i <= N-1. Throws IndexOutOfRange.
    const RationalMatrix& simple_reflection(int i) const;
    /// sigma(w) along a bubble-sort reduced word; memoized.
    RationalMatrix rep_matrix(const Permutation& w) const;
    /// sigma((i j)) for 1-based i != j; i == j gives the identity.
    const RationalMatrix& transposition(int i, int j) const;
    /// omega_i = sum_{j>i} sigma((i j)), 1-based.
    RationalMatrix jucys_murphy(int i) const;

    /// sigma(s_i) v and M sigma(s_i) / sigma(s_i) M without dense products.
    RationalVector apply_simple(int i, const RationalVector& v) const;
    RationalVector apply(const Permutation& w, const RationalVector& v) const;
    RationalMatrix left_simple(int i, const RationalMatrix& m) const;
    RationalMatrix right_simple(const RationalMatrix& m, int i) const;

    /// D = diag(<T,T>_0).
    const RationalVector& norm0_diagonal() const noexcept { return norm0_; }
    RationalMatrix d_matrix() const { return RationalMatrix::diagonal(norm0_); }

    /// Basis vector e_t.
    RationalVector unit(std::size_t t) const;

private:
    struct Column {
        std::size_t diag_row;
        Rational diag;
        std::ptrdiff_t off_row;  // -1 when the column has a single entry
        Rational off;
    };

    Partition shape_;
    std::vector<Rsyt> basis_;
    std::map<std::vector<int>, std::size_t> index_;
    std::size_t root_ = 0;
    std::vector<std::vector<Column>> columns_;  // [i-1][t]
    std::vector<RationalMatrix> simple_;
    std::vector<RationalMatrix> transpositions_;  // [(i-1) * N + (j-1)]
    RationalVector norm0_;

    mutable std::shared_mutex cache_mutex_;
    mutable std::map<std::vector<int>, RationalMatrix> cache_;
};

}  // namespace vvjack
