#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace vvjack {

/// An integer N-vector: a composition, a Laurent exponent, or an element of Z_N.
using MultiIndex = std::vector<int>;

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& a) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : a) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// Permutation of {0..N-1}, stored as its one-line image. Composition follows
/// functions: (a * b)(i) = a(b(i)). Serialized 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);  ///< 0-based images; validated

    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);  ///< 0-based
    static Permutation simple(int n, int i) { return transposition(n, i, i + 1); }
    /// The N-cycle w0 = (1 2 ... N): i -> i+1, N -> 1.
    static Permutation cycle(int n);
    /// From 1-based one-line notation [w(1),...,w(N)].
    static Permutation from_one_based(const std::vector<int>& image);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& image() const noexcept { return image_; }
    std::vector<int> one_based() const;

    Permutation inverse() const;
    bool is_identity() const;
    int inversions() const;

    /// Simple-reflection indices i (0-based, s_i = (i,i+1)) with
    /// w = s_{word[0]} s_{word[1]} ..., found by adjacent-transposition sorting.
    std::vector<int> reduced_word() const;

    /// (w a)_i = a_{w^{-1}(i)}, the action making (x w)^a = x^{w a}.
    MultiIndex act(const MultiIndex& a) const;

    std::string to_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.image_ < b.image_; }

private:
    std::vector<int> image_;
};

/// All permutations of {0..n-1} in lexicographic order of their images.
std::vector<Permutation> all_permutations(int n);

}  // namespace vvjack
