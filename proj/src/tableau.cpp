#include "vvjack/tableau.hpp"

#include <algorithm>
#include <functional>

#include "vvjack/errors.hpp"

namespace vvjack {

Rsyt::Rsyt(const Partition& shape, std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    const int n = shape.size();
    if (static_cast<int>(rows_.size()) != shape.length()) throw InvalidArgument("tableau row count mismatch");
    content_.assign(static_cast<std::size_t>(n), 0);
    row_.assign(static_cast<std::size_t>(n), -1);
    col_.assign(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < shape.length(); ++r) {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != shape.row(r)) throw InvalidArgument("tableau row length mismatch");
        for (int c = 0; c < static_cast<int>(row.size()); ++c) {
            const int k = row[static_cast<std::size_t>(c)];
            if (k < 1 || k > n || row_[static_cast<std::size_t>(k - 1)] != -1) {
                throw InvalidArgument("tableau entries must be a permutation of 1..N");
            }
            if (c > 0 && row[static_cast<std::size_t>(c - 1)] <= k) throw InvalidArgument("rows must decrease");
            if (r > 0 && rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] <= k) {
                throw InvalidArgument("columns must decrease");
            }
            row_[static_cast<std::size_t>(k - 1)] = r;
            col_[static_cast<std::size_t>(k - 1)] = c;
            content_[static_cast<std::size_t>(k - 1)] = c - r;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (content_[static_cast<std::size_t>(i)] - content_[static_cast<std::size_t>(j)] <= -2) ++inv_;
        }
    }
}

Rsyt Rsyt::swapped(const Partition& shape, int k) const {
    auto rows = rows_;
    for (auto& row : rows) {
        for (auto& v : row) {
            if (v == k) {
                v = k + 1;
            } else if (v == k + 1) {
                v = k;
            }
        }
    }
    return Rsyt(shape, std::move(rows));
}

std::string Rsyt::to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += ',';
        s += '[';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) s += ',';
            s += std::to_string(rows_[r][c]);
        }
        s += ']';
    }
    return s + "]";
}

std::vector<Rsyt> enumerate_rsyt(const Partition& shape) {
    // Place N, N-1, ..., 1 one at a time into an addable cell of the growing
    // sub-diagram; each placement sequence is one RSYT.
    const int n = shape.size();
    std::vector<int> filled(static_cast<std::size_t>(shape.length()), 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    for (int r = 0; r < shape.length(); ++r) rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.row(r)), 0);
    std::vector<Rsyt> out;
    std::function<void(int)> place = [&](int k) {
        if (k == 0) {
            out.emplace_back(shape, rows);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            const int c = filled[static_cast<std::size_t>(r)];
            if (c >= shape.row(r)) continue;
            if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <= c) continue;
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = k;
            ++filled[static_cast<std::size_t>(r)];
            place(k - 1);
            --filled[static_cast<std::size_t>(r)];
        }
    };
    place(n);
    std::sort(out.begin(), out.end(), [](const Rsyt& a, const Rsyt& b) { return a.contents() > b.contents(); });
    return out;
}

Rsyt t_zero(const Partition& shape) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    for (int r = 0; r < shape.length(); ++r) rows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(shape.row(r)));
    int next = shape.size();
    for (int c = 0; c < shape.first(); ++c) {
        for (int r = 0; r < shape.length() && shape.row(r) > c; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = next--;
    }
    return Rsyt(shape, std::move(rows));
}

Rational norm0(const Rsyt& t) {
    Rational result(1);
    const int n = t.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int d = t.content(i) - t.content(j);
            if (d <= -2) result *= Rational(1) - Rational(1, static_cast<long>(d) * d);
        }
    }
    return result;
}

long long hook_dimension(const Partition& shape) {
    long long factorial = 1;
    for (int k = 2; k <= shape.size(); ++k) factorial *= k;
    long long hooks = 1;
    for (int r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape.row(r); ++c) hooks *= shape.hook(r, c);
    }
    return factorial / hooks;
}

}  // namespace vvjack
