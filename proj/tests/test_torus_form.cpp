#include <random>

#include "doctest.h"
#include "vvjack/compositions.hpp"
#include "vvjack/torus_form.hpp"

using namespace vvjack;

namespace {

struct Setup {
    Partition shape;
    std::shared_ptr<const Representation> rep;
    KappaParam kappa;
    CoeffStore store;
    YangBaxterGraph graph;
    FormContext ctx;

    Setup(std::vector<int> parts, long p, long q)
        : shape(std::move(parts)),
          rep(Representation::of(shape)),
          kappa(make_kappa(p, q, shape)),
          store(rep, kappa),
          graph(rep, kappa),
          ctx(store) {}

    VVLaurent random_poly(std::mt19937& rng, int degree, int terms) const {
        VVLaurent f(rep, kappa);
        std::uniform_int_distribution<int> coef(-2, 2);
        std::uniform_int_distribution<int> var(0, rep->n() - 1);
        for (int k = 0; k < terms; ++k) {
            MultiIndex a(static_cast<std::size_t>(rep->n()), 0);
            for (int d = 0; d < degree; ++d) ++a[static_cast<std::size_t>(var(rng))];
            RationalVector v(rep->dim());
            for (auto& x : v) x = Rational(coef(rng));
            f.add_term(a, v);
        }
        return f;
    }
};

}  // namespace

TEST_CASE("closed-form norms") {
    const Partition shape({2, 1});
    const auto k = make_kappa(1, 4, shape);
    const auto ts = enumerate_rsyt(shape);
    const Rational kv = k.value();
    CHECK(norm_partition({0, 0, 0}, ts[1], k) == Rational(3, 4));
    CHECK(norm_partition({2, 1, 1}, ts[1], k) == norm_partition({1, 0, 0}, ts[1], k));
    const Rational q1 = kv / (Rational(1) + Rational(2) * kv);
    const Rational q2 = kv / (Rational(1) + kv);
    CHECK(norm_partition({1, 0, 0}, ts[0], k) == (Rational(1) - q1 * q1) * (Rational(1) - q2 * q2));
    CHECK(e_factor({2, 1, 0}, ts[0], 1, k) == Rational(1));
    // alpha = (0,1,0): r = [2,1,3], one pair (1,2), dc = c(1) - c(2)
    for (const auto& t : ts) {
        for (int eps : {1, -1}) {
            const Rational dc(t.content(1) - t.content(2));
            CHECK(e_factor({0, 1, 0}, t, eps, k) == Rational(1) + Rational(eps) * kv / (Rational(1) + kv * dc));
        }
        CHECK(covariant_norm({0, 0, 0}, t, k) == norm0(t));
        CHECK(covariant_norm({1, 0, 0}, t, k) == norm_partition({1, 0, 0}, t, k) * (Rational(1) + kv * Rational(t.content(1))));
        CHECK(covariant_norm({2, 1, 0}, t, k) ==
              norm_partition({2, 1, 0}, t, k) * (Rational(1) + kv * Rational(t.content(1))) *
                  (Rational(2) + kv * Rational(t.content(1))) * (Rational(1) + kv * Rational(t.content(2))));
    }
}

TEST_CASE("torus form on constants and basic properties") {
    Setup s({2, 1}, 1, 4);
    for (std::size_t a = 0; a < s.rep->dim(); ++a) {
        for (std::size_t b = 0; b < s.rep->dim(); ++b) {
            const auto fa = VVLaurent::monomial(s.rep, s.kappa, {0, 0, 0}, s.rep->unit(a));
            const auto fb = VVLaurent::monomial(s.rep, s.kappa, {0, 0, 0}, s.rep->unit(b));
            CHECK(s.ctx.pair(fa, fb) == (a == b ? s.rep->norm0_diagonal()[a] : Rational(0)));
        }
    }
    std::mt19937 rng(8);
    const auto perms = all_permutations(3);
    for (int k = 0; k < 8; ++k) {
        const auto f = s.random_poly(rng, 2, 3);
        const auto g = s.random_poly(rng, 2, 3);
        const auto h = s.random_poly(rng, 1, 3);
        CHECK(s.ctx.pair(f, g) == s.ctx.pair(g, f));
        CHECK(s.ctx.pair(f, h) == Rational(0));
        for (int i = 1; i <= 3; ++i) {
            CHECK(s.ctx.pair(f.mul_x(i), g.mul_x(i)) == s.ctx.pair(f, g));
            CHECK(s.ctx.pair(dunkl(i, f).mul_x(i), g) == s.ctx.pair(f, dunkl(i, g).mul_x(i)));
        }
        for (const auto& w : perms) CHECK(s.ctx.pair(group_action(w, f), group_action(w, g)) == s.ctx.pair(f, g));
    }
}

TEST_CASE("Gram matrix of NSJPs (2,1), degree <= 2") {
    Setup s({2, 1}, 1, 4);
    std::vector<std::pair<MultiIndex, std::size_t>> nodes;
    for (int d = 0; d <= 2; ++d)
        for (const auto& a : compositions_of_degree(3, d))
            for (std::size_t t = 0; t < s.rep->dim(); ++t) nodes.emplace_back(a, t);
    const auto g = gram(s.graph, nodes, s.ctx);
    CHECK(g.is_diagonal());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        CHECK(g(k, k) == expected_norm(nodes[k].first, s.rep->tableau(nodes[k].second), s.kappa));
    }
}
