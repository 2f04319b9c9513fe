#include "vvjack/coeff_store.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "vvjack/compositions.hpp"
#include "vvjack/errors.hpp"

namespace vvjack {

namespace {

MultiIndex shifted(MultiIndex g, int to, int from, int ell) {
    // g + ell (e_to - e_from), 0-based positions
    g[static_cast<std::size_t>(to)] += ell;
    g[static_cast<std::size_t>(from)] -= ell;
    return g;
}

}  // namespace

CoeffStore::CoeffStore(std::shared_ptr<const Representation> rep, KappaParam kappa, StoreOptions options)
    : rep_(std::move(rep)), kappa_(std::move(kappa)), options_(options) {
    if (!(rep_->shape() == kappa_.shape())) throw InvalidArgument("kappa was validated against a different shape");
    std::map<MultiIndex, RationalMatrix> zero;
    const MultiIndex origin(static_cast<std::size_t>(rep_->n()), 0);
    zero.emplace(origin, RationalMatrix::identity(rep_->dim()));
    grades_.push_back(std::move(zero));
    orders_.push_back({origin});
}

int CoeffStore::sealed_grade() const {
    std::lock_guard lock(mutex_);
    return static_cast<int>(grades_.size()) - 1;
}

const std::map<MultiIndex, RationalMatrix>& CoeffStore::grade_entries(int n) const {
    std::lock_guard lock(mutex_);
    if (n < 0 || n >= static_cast<int>(grades_.size())) throw NotYetComputable("grade " + std::to_string(n) + " not sealed");
    return grades_[static_cast<std::size_t>(n)];
}

const std::vector<MultiIndex>& CoeffStore::solve_order(int n) const {
    std::lock_guard lock(mutex_);
    if (n < 0 || n >= static_cast<int>(orders_.size())) throw NotYetComputable("grade " + std::to_string(n) + " not sealed");
    return orders_[static_cast<std::size_t>(n)];
}

void CoeffStore::install_grade(int n, std::map<MultiIndex, RationalMatrix> entries) {
    std::lock_guard lock(mutex_);
    if (n != static_cast<int>(grades_.size())) throw InvalidArgument("grades must be installed in order");
    std::vector<MultiIndex> order;
    for (const auto& [g, m] : entries) order.push_back(g);
    grades_.push_back(std::move(entries));
    orders_.push_back(std::move(order));
}

void CoeffStore::ensure_grade(int n) {
    std::lock_guard lock(mutex_);
    if (n > options_.grade_cap) {
        throw NotYetComputable("grade " + std::to_string(n) + " exceeds the configured cap " +
                               std::to_string(options_.grade_cap));
    }
    while (static_cast<int>(grades_.size()) <= n) solve_grade(static_cast<int>(grades_.size()));
}

std::vector<MultiIndex> CoeffStore::class_order(std::vector<MultiIndex> members, std::uint64_t salt) const {
    std::sort(members.begin(), members.end(), [](const MultiIndex& a, const MultiIndex& b) {
        return split_pi_nu(a).pi < split_pi_nu(b).pi;
    });
    if (!options_.order_seed) return members;
    // Random linear extension of the dominance order on pi-parts.
    std::mt19937_64 rng(*options_.order_seed ^ (salt * 0x9e3779b97f4a7c15ULL));
    std::vector<MultiIndex> out;
    while (!members.empty()) {
        std::vector<std::size_t> ready;
        for (std::size_t a = 0; a < members.size(); ++a) {
            const auto pa = split_pi_nu(members[a]).pi;
            bool blocked = false;
            for (std::size_t b = 0; b < members.size() && !blocked; ++b) {
                blocked = b != a && dominance_lt(split_pi_nu(members[b]).pi, pa);
            }
            if (!blocked) ready.push_back(a);
        }
        const std::size_t pick = ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)];
        out.push_back(members[pick]);
        members.erase(members.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

void CoeffStore::solve_grade(int n) {
    std::lock_guard lock(mutex_);
    if (n != static_cast<int>(grades_.size())) {
        throw NotYetComputable("grade " + std::to_string(n) + " requested but grade " + std::to_string(grades_.size()) +
                               " is the next unsolved one");
    }
    if (n > options_.grade_cap) {
        throw NotYetComputable("grade " + std::to_string(n) + " exceeds the configured cap " +
                               std::to_string(options_.grade_cap));
    }
    const int n_vars = rep_->n();
    std::map<MultiIndex, std::vector<MultiIndex>> classes;
    for (const auto& g : canonical_Z(n_vars, n)) classes[split_pi_nu(g).nu].push_back(g);

    grades_.emplace_back();
    orders_.emplace_back();
    auto& building = grades_.back();
    auto& order = orders_.back();
    try {
        std::uint64_t salt = 0;
        for (auto& [nu, members] : classes) {
            const auto sequence = class_order(std::move(members), ++salt);
            int k = 0;
            while (k < n_vars && nu[static_cast<std::size_t>(k)] == 0) ++k;
            if (sequence.front() != minimal_gamma(nu, k)) {
                throw std::logic_error("nu-class " + to_string(nu) + " does not start at its minimal element");
            }
            for (const auto& g : sequence) {
                building.emplace(g, solve_one(g, n));
                order.push_back(g);
            }
        }
    } catch (...) {
        grades_.pop_back();
        orders_.pop_back();
        throw;
    }
}

RationalMatrix CoeffStore::lookup(const MultiIndex& g, int solving_grade) {
    if (total(g) != 0) return RationalMatrix(rep_->dim(), rep_->dim());
    const int gr = grade(g);
    // While grade n is being solved, grades_.back() is its partial map.
    if (gr >= static_cast<int>(grades_.size())) {
        throw NotYetComputable("coefficient " + to_string(g) + " of grade " + std::to_string(gr) + " is not available");
    }
    const auto c = canonicalize(g);
    const auto& entries = grades_[static_cast<std::size_t>(gr)];
    auto it = entries.find(c.canonical);
    if (it == entries.end()) {
        const std::string where = gr == solving_grade ? " (same grade, not yet ordered before it)" : "";
        throw NotYetComputable("coefficient " + to_string(c.canonical) + " needed before it was solved" + where);
    }
    if (c.w.is_identity()) return it->second;
    // C_{w^{-1} c} = sigma(w)^{-1} C_c sigma(w)
    return rep_->rep_matrix(c.w.inverse()) * it->second * rep_->rep_matrix(c.w);
}

RationalMatrix CoeffStore::solve_one(const MultiIndex& g, int n) {
    const int n_vars = rep_->n();
    const std::size_t d = rep_->dim();
    const Rational& kappa = kappa_.value();
    const int g1 = g[0];
    int m = 1;
    while (m < n_vars && g[static_cast<std::size_t>(m)] == g1) ++m;

    RationalMatrix rhs(d, d);
    for (int j = m + 1; j <= n_vars; ++j) {
        const int gj = g[static_cast<std::size_t>(j - 1)];
        const RationalMatrix& s = rep_->transposition(1, j);
        if (gj >= 0) {
            RationalMatrix sum(d, d);
            for (int ell = 1; ell <= g1 - gj - 1; ++ell) sum += lookup(shifted(g, j - 1, 0, ell), n);
            if (!sum.is_zero()) rhs -= kappa * (s * sum);
        } else {
            RationalMatrix left(d, d);
            for (int ell = 1; ell <= g1 - 1; ++ell) left += lookup(shifted(g, j - 1, 0, ell), n);
            RationalMatrix right(d, d);
            for (int ell = 1; ell <= -gj; ++ell) right += lookup(shifted(g, j - 1, 0, ell), n);
            rhs -= kappa * (s * left + right * s);
        }
    }

    // (g1 I + kappa sum_{l>m} sigma(1,l))^{-1} = sigma(1,m) diag(1/(g1 + kappa c(m,T))) sigma(1,m)
    RationalVector inv(d);
    for (std::size_t t = 0; t < d; ++t) {
        const int c = rep_->tableau(t).content(m);
        const Rational pivot = Rational(g1) + kappa * Rational(c);
        if (pivot.is_zero()) {
            const Rational w(-g1, c);
            const std::string witness = w.numerator().get_str() + "/" + w.denominator().get_str();
            throw PoleExcluded("pole while solving " + to_string(g) + ": gamma_1 = " + std::to_string(g1) +
                                   ", c(" + std::to_string(m) + ",T) = " + std::to_string(c) + ", kappa = " +
                                   kappa.to_string(),
                               kappa.to_string(), witness);
        }
        inv[t] = Rational(1) / pivot;
    }
    const RationalMatrix& p = rep_->transposition(1, m);
    return p * (RationalMatrix::diagonal(inv) * (p * rhs));
}

RationalMatrix CoeffStore::coeff(const MultiIndex& g) {
    std::lock_guard lock(mutex_);
    if (static_cast<int>(g.size()) != rep_->n()) throw InvalidArgument("multi-index length does not match N");
    if (total(g) != 0) return RationalMatrix(rep_->dim(), rep_->dim());
    ensure_grade(grade(g));
    return lookup(g, -1);
}

RationalMatrix CoeffStore::pairing(const MultiIndex& g) { return rep_->d_matrix() * coeff(g); }

ComplexMatrix CoeffStore::orthonormal(const MultiIndex& g) {
    const RationalMatrix c = coeff(g);
    const auto& d = rep_->norm0_diagonal();
    ComplexMatrix a(c.rows(), c.cols());
    for (std::size_t r = 0; r < c.rows(); ++r) {
        for (std::size_t k = 0; k < c.cols(); ++k) {
            a(r, k) = c(r, k).to_double() * std::sqrt(d[r].to_double() / d[k].to_double());
        }
    }
    return a;
}

RationalMatrix verify_selfadjoint(const MultiIndex& a, const MultiIndex& b, int i, CoeffStore& store) {
    const int n_vars = store.rep().n();
    if (static_cast<int>(a.size()) != n_vars || static_cast<int>(b.size()) != n_vars) {
        throw InvalidArgument("multi-index length does not match N");
    }
    if (total(a) != total(b)) throw InvalidArgument("|alpha| must equal |beta|");
    if (i < 1 || i > n_vars) throw IndexOutOfRange("index outside 1..N");
    const Rational& kappa = store.kappa().value();
    const std::size_t ii = static_cast<std::size_t>(i - 1);
    MultiIndex diff(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) diff[k] = a[k] - b[k];

    RationalMatrix residual = Rational(a[ii] - b[ii]) * store.coeff(diff);
    for (int j = 1; j <= n_vars; ++j) {
        if (j == i) continue;
        const std::size_t jj = static_cast<std::size_t>(j - 1);
        const RationalMatrix& s = store.rep().transposition(i, j);
        const std::size_t d = store.rep().dim();
        RationalMatrix left(d, d);
        RationalMatrix right(d, d);
        for (int ell = 1; ell <= a[jj] - a[ii]; ++ell) left += store.coeff(shifted(diff, i - 1, j - 1, ell));
        for (int ell = 0; ell <= a[ii] - a[jj] - 1; ++ell) left -= store.coeff(shifted(diff, j - 1, i - 1, ell));
        for (int ell = 1; ell <= b[jj] - b[ii]; ++ell) right -= store.coeff(shifted(diff, j - 1, i - 1, ell));
        for (int ell = 0; ell <= b[ii] - b[jj] - 1; ++ell) right += store.coeff(shifted(diff, i - 1, j - 1, ell));
        residual -= kappa * (s * left + right * s);
    }
    return residual;
}

namespace {

MultiIndex combo(int n_vars, std::initializer_list<std::pair<int, int>> parts) {
    MultiIndex g(static_cast<std::size_t>(n_vars), 0);
    for (const auto& [pos, coef] : parts) g[static_cast<std::size_t>(pos - 1)] += coef;
    return g;
}

RationalMatrix operator_from_three(CoeffStore& store) {
    const auto& rep = store.rep();
    RationalMatrix l = RationalMatrix::identity(rep.dim());
    for (int i = 3; i <= rep.n(); ++i) l += store.kappa().value() * rep.transposition(1, i);
    return l;
}

}  // namespace

RationalMatrix grade2_residual_a(CoeffStore& store, int j) {
    const auto& rep = store.rep();
    const int n = rep.n();
    if (j < 3 || j > n) throw IndexOutOfRange("relation (a) needs 3 <= j <= N");
    const Rational& kappa = store.kappa().value();
    const RationalMatrix lhs = operator_from_three(store) * store.coeff(combo(n, {{1, 1}, {2, 1}, {j, -2}}));
    const RationalMatrix rhs =
        -kappa * ((store.coeff(combo(n, {{2, 1}, {1, -1}})) + store.coeff(combo(n, {{2, 1}, {j, -1}}))) *
                  rep.transposition(1, j));
    return lhs - rhs;
}

RationalMatrix grade2_residual_b(CoeffStore& store, int j) {
    const auto& rep = store.rep();
    const int n = rep.n();
    if (j < 3 || j > n - 1) throw IndexOutOfRange("relation (b) needs 3 <= j <= N-1");
    const Rational& kappa = store.kappa().value();
    const RationalMatrix lhs =
        operator_from_three(store) * store.coeff(combo(n, {{1, 1}, {2, 1}, {j, -1}, {j + 1, -1}}));
    const RationalMatrix rhs = -kappa * (store.coeff(combo(n, {{2, 1}, {j, -1}})) * rep.transposition(1, j + 1) +
                                         store.coeff(combo(n, {{2, 1}, {j + 1, -1}})) * rep.transposition(1, j));
    return lhs - rhs;
}

RationalMatrix grade2_residual_c(CoeffStore& store) {
    const auto& rep = store.rep();
    const int n = rep.n();
    const Rational& kappa = store.kappa().value();
    const RationalMatrix lhs = (Rational(2) * RationalMatrix::identity(rep.dim()) + kappa * rep.jucys_murphy(1)) *
                               store.coeff(combo(n, {{1, 2}, {n, -2}}));
    RationalMatrix inner(rep.dim(), rep.dim());
    for (int l = 2; l <= n - 1; ++l) inner += rep.transposition(1, l) * store.coeff(combo(n, {{1, 1}, {l, 1}, {n, -2}}));
    const RationalMatrix a1n = store.coeff(combo(n, {{1, 1}, {n, -1}}));
    inner += rep.transposition(1, n) * a1n;
    inner += (a1n + RationalMatrix::identity(rep.dim())) * rep.transposition(1, n);
    return lhs + kappa * inner;
}

}  // namespace vvjack
