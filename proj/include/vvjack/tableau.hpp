#pragma once

#include <string>
#include <vector>

#include "vvjack/partition.hpp"
#include "vvjack/rational.hpp"

namespace vvjack {

/// Reverse standard Young tableau: entries 1..N decreasing along rows and
/// down columns. Entry k (1-based) sits at (row(k), col(k)) with content
/// col - row; the content vector determines the tableau.
class Rsyt {
public:
    Rsyt(const Partition& shape, std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int size() const noexcept { return static_cast<int>(content_.size()); }

    /// c(k, T) for 1-based entry k.
    int content(int k) const { return content_[static_cast<std::size_t>(k - 1)]; }
    int row_of(int k) const { return row_[static_cast<std::size_t>(k - 1)]; }
    int col_of(int k) const { return col_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<int>& contents() const noexcept { return content_; }

    /// #{(i, j) : i < j, c(i) - c(j) <= -2}
    int inv() const noexcept { return inv_; }

    /// T with entries k and k+1 interchanged (only meaningful when they are
    /// neither in the same row nor column).
    Rsyt swapped(const Partition& shape, int k) const;

    std::string to_string() const;

    friend bool operator==(const Rsyt& a, const Rsyt& b) { return a.rows_ == b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    std::vector<int> content_;
    std::vector<int> row_;
    std::vector<int> col_;
    int inv_ = 0;
};

/// Y(tau) in the canonical order: lexicographically decreasing content vectors.
std::vector<Rsyt> enumerate_rsyt(const Partition& shape);

/// The root tableau: N, N-1, ..., 1 entered column by column.
Rsyt t_zero(const Partition& shape);

/// <T,T>_0 = prod over i<j with c(i) <= c(j) - 2 of (1 - 1/(c(i)-c(j))^2).
Rational norm0(const Rsyt& t);

/// N! / prod of hook lengths.
long long hook_dimension(const Partition& shape);

}  // namespace vvjack
