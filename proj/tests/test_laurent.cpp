#include <random>

#include "doctest.h"
#include "vvjack/compositions.hpp"
#include "vvjack/errors.hpp"
#include "vvjack/laurent.hpp"

using namespace vvjack;

namespace {

struct Fixture {
    Partition shape{std::vector<int>{2, 1}};
    std::shared_ptr<const Representation> rep = Representation::of(shape);
    KappaParam kappa = make_kappa(1, 4, shape);
};

VVLaurent random_poly(std::mt19937& rng, const Fixture& fx, int degree, int terms) {
    VVLaurent f(fx.rep, fx.kappa);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> var(0, fx.rep->n() - 1);
    for (int k = 0; k < terms; ++k) {
        MultiIndex a(static_cast<std::size_t>(fx.rep->n()), 0);
        for (int d = 0; d < degree; ++d) ++a[static_cast<std::size_t>(var(rng))];
        RationalVector v(fx.rep->dim());
        for (auto& x : v) x = Rational(coef(rng));
        f.add_term(a, v);
    }
    return f;
}

// f evaluated at a rational point: sum_a x^a v_a.
RationalVector evaluate(const VVLaurent& f, const std::vector<Rational>& x) {
    RationalVector out(f.dim());
    for (const auto& [a, v] : f.terms()) {
        Rational m(1);
        for (std::size_t i = 0; i < a.size(); ++i) m *= pow(x[i], a[i]);
        out = out + m * v;
    }
    return out;
}

VVLaurent partial(int i, const VVLaurent& f) {
    VVLaurent out = f.zero_like();
    for (const auto& [a, v] : f.terms()) {
        const int e = a[static_cast<std::size_t>(i - 1)];
        if (e == 0) continue;
        MultiIndex b = a;
        --b[static_cast<std::size_t>(i - 1)];
        out.add_term(b, v, Rational(e));
    }
    return out;
}

}  // namespace

TEST_CASE("basic arithmetic and serialization order") {
    Fixture fx;
    auto f = VVLaurent::monomial(fx.rep, fx.kappa, {1, 0, 0}, fx.rep->unit(0));
    f.add_term({0, 0, 1}, fx.rep->unit(1));
    const auto terms = f.sorted_terms();
    CHECK(terms.front().first == MultiIndex{0, 0, 1});
    CHECK((f - f).is_zero());
    CHECK((Rational(2) * f - f) == f);
    CHECK(f.mul_x(2).coefficient({1, 1, 0}) == fx.rep->unit(0));
}

TEST_CASE("group action") {
    Fixture fx;
    const auto f = VVLaurent::monomial(fx.rep, fx.kappa, {1, 0, 0}, fx.rep->unit(0));
    CHECK(group_action(Permutation::identity(3), f) == f);
    const auto g = group_action(Permutation::simple(3, 0), f);
    CHECK(g == VVLaurent::monomial(fx.rep, fx.kappa, {0, 1, 0}, fx.rep->simple_reflection(1) * fx.rep->unit(0)));
    CHECK(simple_action(1, f) == g);
    std::mt19937 rng(3);
    const auto perms = all_permutations(3);
    for (int k = 0; k < 20; ++k) {
        const auto h = random_poly(rng, fx, 3, 5);
        const auto& w1 = perms[static_cast<std::size_t>(k) % 6];
        const auto& w2 = perms[static_cast<std::size_t>(k * 5 + 1) % 6];
        CHECK(group_action(w1 * w2, h) == group_action(w1, group_action(w2, h)));
    }
}

TEST_CASE("Dunkl operators") {
    Fixture fx;
    const auto& rep = *fx.rep;
    for (std::size_t t = 0; t < rep.dim(); ++t) {
        const auto one = VVLaurent::monomial(fx.rep, fx.kappa, {0, 0, 0}, rep.unit(t));
        CHECK(dunkl(1, one).is_zero());
        const auto x1 = VVLaurent::monomial(fx.rep, fx.kappa, {1, 0, 0}, rep.unit(t));
        const auto lhs = dunkl(1, x1).mul_x(1);
        const auto op = RationalMatrix::identity(rep.dim()) + fx.kappa.value() * rep.jucys_murphy(1);
        CHECK(lhs == VVLaurent::monomial(fx.rep, fx.kappa, {1, 0, 0}, op * rep.unit(t)));
    }
    std::mt19937 rng(9);
    const std::vector<std::vector<Rational>> points{
        {Rational(2), Rational(-1, 3), Rational(5, 2)}, {Rational(7, 5), Rational(3), Rational(-2)}};
    const auto perms = all_permutations(3);
    for (int k = 0; k < 15; ++k) {
        const auto f = random_poly(rng, fx, 3, 6);
        for (int i = 1; i <= 3; ++i) {
            const auto di = dunkl(i, f);
            // pointwise oracle: d_i f + kappa sum sigma(i,j) (f(x) - f(x(ij))) / (x_i - x_j)
            for (const auto& x : points) {
                RationalVector expect = evaluate(partial(i, f), x);
                for (int j = 1; j <= 3; ++j) {
                    if (j == i) continue;
                    auto y = x;
                    std::swap(y[static_cast<std::size_t>(i - 1)], y[static_cast<std::size_t>(j - 1)]);
                    const auto diff = evaluate(f, x) - evaluate(f, y);
                    const Rational scale = fx.kappa.value() / (x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)]);
                    expect = expect + scale * (rep.transposition(i, j) * diff);
                }
                CHECK(evaluate(di, x) == expect);
            }
            for (int j = 1; j <= 3; ++j) CHECK(dunkl(i, dunkl(j, f)) == dunkl(j, dunkl(i, f)));
            for (const auto& w : perms) CHECK(group_action(w, di) == dunkl(w(i - 1) + 1, group_action(w, f)));
            for (const auto& [a, v] : di.terms()) CHECK(total(a) == 2);
        }
    }
    auto neg = VVLaurent::monomial(fx.rep, fx.kappa, {-1, 1, 0}, rep.unit(0));
    CHECK_THROWS_AS(dunkl(1, neg), LaurentInput);
    CHECK_THROWS_AS(cherednik(1, neg), LaurentInput);
}

TEST_CASE("Cherednik-Dunkl operators") {
    for (const auto& parts : {std::vector<int>{2, 1}, std::vector<int>{3, 1}}) {
        Fixture fx;
        fx.shape = Partition(parts);
        fx.rep = Representation::of(fx.shape);
        fx.kappa = default_kappa(fx.shape);
        const auto& rep = *fx.rep;
        const int n = rep.n();
        for (std::size_t t = 0; t < rep.dim(); ++t) {
            const auto one = VVLaurent::monomial(fx.rep, fx.kappa, MultiIndex(static_cast<std::size_t>(n), 0), rep.unit(t));
            for (int i = 1; i <= n; ++i) {
                const Rational xi = Rational(1) + fx.kappa.value() * Rational(rep.tableau(t).content(i));
                CHECK(cherednik(i, one) == xi * one);
            }
        }
        std::mt19937 rng(17);
        const Rational kappa = fx.kappa.value();
        for (int k = 0; k < 6; ++k) {
            const auto f = random_poly(rng, fx, 2, 4);
            for (int i = 1; i <= n; ++i) {
                const auto ui = cherednik(i, f);
                for (const auto& [a, v] : ui.terms()) CHECK(total(a) == 2);
                for (int j = i + 1; j <= n; ++j) CHECK(cherednik(j, ui) == cherednik(i, cherednik(j, f)));
                for (int m : {1, 2}) CHECK(cherednik(i, e_shift(m, f)) == Rational(m) * e_shift(m, f) + e_shift(m, ui));
                if (i < n) {
                    const auto lhs = simple_action(i, cherednik(i, simple_action(i, f)));
                    CHECK(lhs == cherednik(i + 1, f) + kappa * simple_action(i, f));
                    CHECK(cherednik(i, simple_action(i, f)) == simple_action(i, cherednik(i + 1, f)) + kappa * f);
                }
            }
        }
    }
}

TEST_CASE("e_shift") {
    Fixture fx;
    const auto one = VVLaurent::monomial(fx.rep, fx.kappa, {0, 0, 0}, fx.rep->unit(1));
    CHECK(e_shift(0, one) == one);
    CHECK(e_shift(1, one) == VVLaurent::monomial(fx.rep, fx.kappa, {1, 1, 1}, fx.rep->unit(1)));
    std::mt19937 rng(1);
    const auto f = random_poly(rng, fx, 3, 5);
    CHECK(e_shift(-2, e_shift(2, f)) == f);
}
