#include "vvjack/representation.hpp"

#include <mutex>

#include "vvjack/errors.hpp"

namespace vvjack {

Representation::Representation(const Partition& shape) : shape_(shape), basis_(enumerate_rsyt(shape)) {
    for (std::size_t t = 0; t < basis_.size(); ++t) index_.emplace(basis_[t].contents(), t);
    root_ = index_of(t_zero(shape));
    for (const auto& t : basis_) norm0_.push_back(norm0(t));

    const int n = shape.size();
    const std::size_t d = basis_.size();
    for (int i = 1; i < n; ++i) {
        std::vector<Column> cols;
        RationalMatrix m(d, d);
        for (std::size_t t = 0; t < d; ++t) {
            const Rsyt& tab = basis_[t];
            const int diff = tab.content(i) - tab.content(i + 1);
            Column col{t, Rational(1, diff), -1, Rational(0)};
            if (diff >= 2 || diff <= -2) {
                const Rational& b = col.diag;
                col.off_row = static_cast<std::ptrdiff_t>(index_of(tab.swapped(shape, i)));
                col.off = diff > 0 ? Rational(1) : Rational(1) - b * b;
            }
            m(t, t) = col.diag;
            if (col.off_row >= 0) m(static_cast<std::size_t>(col.off_row), t) = col.off;
            cols.push_back(col);
        }
        columns_.push_back(std::move(cols));
        simple_.push_back(std::move(m));
    }
    transpositions_.resize(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            transpositions_[static_cast<std::size_t>(i * n + j)] =
                i == j ? RationalMatrix::identity(d) : rep_matrix(Permutation::transposition(n, i, j));
        }
    }
}

std::shared_ptr<const Representation> Representation::of(const Partition& shape) {
    static std::mutex mutex;
    static std::map<std::vector<int>, std::shared_ptr<const Representation>> registry;
    std::lock_guard lock(mutex);
    auto it = registry.find(shape.parts());
    if (it == registry.end()) it = registry.emplace(shape.parts(), std::make_shared<const Representation>(shape)).first;
    return it->second;
}

std::size_t Representation::index_of(const std::vector<int>& contents) const {
    auto it = index_.find(contents);
    if (it == index_.end()) throw InvalidArgument("content vector is not a tableau of this shape");
    return it->second;
}

const RationalMatrix& Representation::simple_reflection(int i) const {
    if (i < 1 || i >= n()) throw IndexOutOfRange("simple reflection index " + std::to_string(i) + " outside 1..N-1");
    return simple_[static_cast<std::size_t>(i - 1)];
}

RationalMatrix Representation::rep_matrix(const Permutation& w) const {
    if (w.size() != n()) throw InvalidArgument("permutation size does not match N");
    {
        std::shared_lock lock(cache_mutex_);
        auto it = cache_.find(w.image());
        if (it != cache_.end()) return it->second;
    }
    RationalMatrix m = RationalMatrix::identity(dim());
    const auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = left_simple(*it + 1, m);
    std::unique_lock lock(cache_mutex_);
    return cache_.emplace(w.image(), std::move(m)).first->second;
}

const RationalMatrix& Representation::transposition(int i, int j) const {
    if (i < 1 || i > n() || j < 1 || j > n()) throw IndexOutOfRange("transposition index outside 1..N");
    return transpositions_[static_cast<std::size_t>((i - 1) * n() + (j - 1))];
}

RationalMatrix Representation::jucys_murphy(int i) const {
    if (i < 1 || i > n()) throw IndexOutOfRange("Jucys-Murphy index outside 1..N");
    RationalMatrix m(dim(), dim());
    for (int j = i + 1; j <= n(); ++j) m += transposition(i, j);
    return m;
}

RationalVector Representation::apply_simple(int i, const RationalVector& v) const {
    if (i < 1 || i >= n()) throw IndexOutOfRange("simple reflection index outside 1..N-1");
    if (v.size() != dim()) throw InvalidArgument("vector length does not match dim V");
    RationalVector out(dim());
    for (const auto& col : columns_[static_cast<std::size_t>(i - 1)]) {
        const Rational& x = v[col.diag_row];
        if (x.is_zero()) continue;
        out[col.diag_row] += col.diag * x;
        if (col.off_row >= 0) out[static_cast<std::size_t>(col.off_row)] += col.off * x;
    }
    return out;
}

RationalVector Representation::apply(const Permutation& w, const RationalVector& v) const {
    RationalVector out = v;
    const auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_simple(*it + 1, out);
    return out;
}

RationalMatrix Representation::left_simple(int i, const RationalMatrix& m) const {
    if (i < 1 || i >= n()) throw IndexOutOfRange("simple reflection index outside 1..N-1");
    RationalMatrix out(dim(), m.cols());
    for (const auto& col : columns_[static_cast<std::size_t>(i - 1)]) {
        // (S m)(r, c) = sum_t S(r, t) m(t, c); column t of S has at most two entries.
        const std::size_t t = col.diag_row;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& x = m(t, c);
            if (x.is_zero()) continue;
            out(t, c) += col.diag * x;
            if (col.off_row >= 0) out(static_cast<std::size_t>(col.off_row), c) += col.off * x;
        }
    }
    return out;
}

RationalMatrix Representation::right_simple(const RationalMatrix& m, int i) const {
    if (i < 1 || i >= n()) throw IndexOutOfRange("simple reflection index outside 1..N-1");
    RationalMatrix out(m.rows(), dim());
    for (const auto& col : columns_[static_cast<std::size_t>(i - 1)]) {
        // (m S)(r, t) = sum_s m(r, s) S(s, t)
        const std::size_t t = col.diag_row;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Rational acc = m(r, t) * col.diag;
            if (col.off_row >= 0) acc += m(r, static_cast<std::size_t>(col.off_row)) * col.off;
            out(r, t) = acc;
        }
    }
    return out;
}

RationalVector Representation::unit(std::size_t t) const {
    RationalVector v(dim());
    v.at(t) = Rational(1);
    return v;
}

}  // namespace vvjack
