#include "vvjack/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "vvjack/errors.hpp"

namespace vvjack {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
            throw InvalidArgument("not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    Permutation p;
    p.image_ = std::move(image);
    return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw IndexOutOfRange("transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.image_[static_cast<std::size_t>(i)], p.image_[static_cast<std::size_t>(j)]);
    return p;
}

Permutation Permutation::cycle(int n) {
    Permutation p = identity(n);
    for (int i = 0; i < n; ++i) p.image_[static_cast<std::size_t>(i)] = (i + 1) % n;
    return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& image) {
    std::vector<int> zero(image.size());
    std::transform(image.begin(), image.end(), zero.begin(), [](int v) { return v - 1; });
    return Permutation(std::move(zero));
}

std::vector<int> Permutation::one_based() const {
    std::vector<int> out(image_.size());
    std::transform(image_.begin(), image_.end(), out.begin(), [](int v) { return v + 1; });
    return out;
}

Permutation Permutation::inverse() const {
    Permutation p = identity(size());
    for (int i = 0; i < size(); ++i) p.image_[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i) {
        if (image_[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
}

int Permutation::inversions() const {
    int count = 0;
    for (int i = 0; i < size(); ++i) {
        for (int j = i + 1; j < size(); ++j) {
            if (image_[static_cast<std::size_t>(i)] > image_[static_cast<std::size_t>(j)]) ++count;
        }
    }
    return count;
}

std::vector<int> Permutation::reduced_word() const {
    // Peel right descents: if w(i) > w(i+1) then w = (w s_i) s_i with one
    // fewer inversion.
    std::vector<int> word;
    std::vector<int> w = image_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                word.push_back(static_cast<int>(i));
                changed = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

MultiIndex Permutation::act(const MultiIndex& a) const {
    if (static_cast<int>(a.size()) != size()) throw InvalidArgument("multi-index length mismatch");
    MultiIndex out(a.size());
    for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = a[static_cast<std::size_t>(i)];
    return out;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ',';
        s += std::to_string(image_[static_cast<std::size_t>(i)] + 1);
    }
    return s + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw InvalidArgument("permutation size mismatch");
    Permutation p = Permutation::identity(a.size());
    for (int i = 0; i < a.size(); ++i) p.image_[static_cast<std::size_t>(i)] = a(b(i));
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

}  // namespace vvjack
