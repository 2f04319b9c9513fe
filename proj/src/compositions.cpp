#include "vvjack/compositions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "vvjack/errors.hpp"

namespace vvjack {

int total(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

int abs_total(const MultiIndex& a) {
    int s = 0;
    for (int v : a) s += std::abs(v);
    return s;
}

int grade(const MultiIndex& a) { return abs_total(a) / 2; }

bool is_partition(const MultiIndex& a) {
    return std::is_sorted(a.begin(), a.end(), std::greater<>()) && (a.empty() || a.back() >= 0);
}

MultiIndex sorted_desc(MultiIndex a) {
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
}

MultiIndex epsilon(int n, int i) {
    MultiIndex e(static_cast<std::size_t>(n), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return e;
}

Permutation sorting_perm(const MultiIndex& a) {
    const std::size_t n = a.size();
    std::vector<int> image(n);
    for (std::size_t i = 0; i < n; ++i) {
        int r = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a[j] > a[i] || (a[j] == a[i] && j < i)) ++r;
        }
        image[i] = r;
    }
    return Permutation(std::move(image));
}

Permutation rank_perm(const MultiIndex& a) {
    for (int v : a) {
        if (v < 0) throw NegativeEntry("rank permutation needs a nonnegative multi-index, got " + to_string(a));
    }
    return sorting_perm(a);
}

MultiIndex phi(const MultiIndex& a) {
    if (a.empty()) return a;
    MultiIndex out(a.begin() + 1, a.end());
    out.push_back(a.front() + 1);
    return out;
}

MultiIndex phi_inverse(const MultiIndex& a) {
    if (a.empty()) return a;
    MultiIndex out;
    out.push_back(a.back() - 1);
    out.insert(out.end(), a.begin(), a.end() - 1);
    return out;
}

bool dominance_leq(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) return false;
    long sa = 0;
    long sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return sa == sb;
}

bool dominance_lt(const MultiIndex& a, const MultiIndex& b) { return a != b && dominance_leq(a, b); }

bool triangular_lt(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size() || total(a) != total(b)) return false;
    const auto ap = sorted_desc(a);
    const auto bp = sorted_desc(b);
    if (ap != bp) return dominance_lt(ap, bp);
    return dominance_lt(a, b);
}

void for_each_Z(int n_vars, int n, const std::function<void(const MultiIndex&)>& visit) {
    if (n_vars <= 0 || n < 0) return;
    MultiIndex g(static_cast<std::size_t>(n_vars), 0);
    // Remaining positions must realize sum -s and absolute sum 2n - a.
    std::function<void(int, int, int)> rec = [&](int pos, int s, int a) {
        const int left = n_vars - pos;
        const int need_sum = -s;
        const int need_abs = 2 * n - a;
        if (left == 0) {
            if (need_sum == 0 && need_abs == 0) visit(g);
            return;
        }
        if (std::abs(need_sum) > need_abs || (need_abs - need_sum) % 2 != 0) return;
        if (left == 1) {
            if (std::abs(need_sum) != need_abs) return;
        }
        for (int v = -need_abs; v <= need_abs; ++v) {
            g[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, s + v, a + std::abs(v));
        }
        g[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, 0, 0);
}

std::vector<MultiIndex> enumerate_Z(int n_vars, int n) {
    std::vector<MultiIndex> out;
    for_each_Z(n_vars, n, [&](const MultiIndex& g) { out.push_back(g); });
    return out;
}

namespace {

mpz_class binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

mpz_class count_Z(int n_vars, int n) {
    if (n == 0) return 1;
    mpz_class s = 0;
    for (int j = 1; j <= n_vars - 1; ++j) s += binom(n_vars, j) * binom(n - 1, j - 1) * binom(n_vars - j + n - 1, n);
    return s;
}

std::vector<MultiIndex> canonical_Z(int n_vars, int n) {
    std::vector<MultiIndex> out;
    MultiIndex g(static_cast<std::size_t>(n_vars), 0);
    std::function<void(int, int, int, int)> rec = [&](int pos, int cap, int s, int a) {
        const int left = n_vars - pos;
        const int need_sum = -s;
        const int need_abs = 2 * n - a;
        if (left == 0) {
            if (need_sum == 0 && need_abs == 0) out.push_back(g);
            return;
        }
        if (std::abs(need_sum) > need_abs) return;
        for (int v = std::min(cap, need_abs); v >= -need_abs; --v) {
            // all later entries are <= v
            if (static_cast<long>(v) * left < need_sum) break;
            g[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v, s + v, a + std::abs(v));
        }
    };
    rec(0, n, 0, 0);
    return out;
}

PiNuSplit split_pi_nu(const MultiIndex& g) {
    PiNuSplit s{MultiIndex(g.size()), MultiIndex(g.size())};
    for (std::size_t i = 0; i < g.size(); ++i) {
        s.pi[i] = std::max(g[i], 0);
        s.nu[i] = std::max(-g[i], 0);
    }
    return s;
}

MultiIndex minimal_gamma(const MultiIndex& nu, int k) {
    const int n_vars = static_cast<int>(nu.size());
    if (k < 1 || k > n_vars) throw BadSupport("k must lie in 1..N");
    for (int i = 0; i < n_vars; ++i) {
        const int v = nu[static_cast<std::size_t>(i)];
        if ((i < k && v != 0) || (i >= k && v <= 0)) {
            throw BadSupport("nu must vanish exactly on its first k positions: " + to_string(nu));
        }
    }
    const int n = total(nu);
    const int p = n / k;
    const int m = n - k * p;
    MultiIndex g(nu.size());
    for (int i = 0; i < n_vars; ++i) {
        if (i < m) {
            g[static_cast<std::size_t>(i)] = p + 1;
        } else if (i < k) {
            g[static_cast<std::size_t>(i)] = p;
        } else {
            g[static_cast<std::size_t>(i)] = -nu[static_cast<std::size_t>(i)];
        }
    }
    return g;
}

int steps_count(const MultiIndex& a) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const int d = a[i] - a[j];
            s += std::abs(d) + std::abs(d + 1) - 1;
        }
    }
    return s / 2;
}

Canonical canonicalize(const MultiIndex& g) {
    if (total(g) != 0) throw NotGraded("multi-index " + to_string(g) + " does not sum to zero");
    Permutation w = sorting_perm(g);
    return {w.act(g), std::move(w)};
}

std::string to_string(const MultiIndex& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
    }
    return s + "]";
}

}  // namespace vvjack
