#pragma once

#include <string>
#include <vector>

namespace vvjack {

/// A partition of N with at least two rows and two columns, i.e. the label of
/// an irreducible S_N module of dimension >= 2.
class Partition {
public:
    /// Validates and throws InvalidShape on non-increasing or degenerate input.
    explicit Partition(std::vector<int> parts);

    /// Parses "3,1,1". Throws InvalidShape / FormatError.
    static Partition parse(const std::string& text);

    /// Unvalidated constructor for enumerating all partitions of N, including
    /// one-row and one-column shapes.
    static Partition raw(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }           ///< N
    int length() const noexcept { return static_cast<int>(parts_.size()); }  ///< l(tau)
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int row(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    int hook(int row, int col) const;  ///< 0-based cell coordinates
    int max_hook() const { return first() + length() - 1; }  ///< h_tau
    bool admissible() const noexcept { return length() >= 2 && first() >= 2; }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    Partition() = default;
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order, unvalidated.
std::vector<Partition> partitions_of(int n);

/// The admissible shapes (>= 2 rows, >= 2 columns) of N, in reverse-lex order.
std::vector<Partition> admissible_shapes(int n);

}  // namespace vvjack
