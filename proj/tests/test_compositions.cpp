#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "vvjack/compositions.hpp"
#include "vvjack/errors.hpp"

using namespace vvjack;

namespace {

// Independent membership test for Z_{N,n}: every vector in the box [-n, n]^N.
std::vector<MultiIndex> brute_force_Z(int n_vars, int n) {
    std::vector<MultiIndex> out;
    MultiIndex g(static_cast<std::size_t>(n_vars), -n);
    while (true) {
        if (total(g) == 0 && abs_total(g) == 2 * n) out.push_back(g);
        int k = n_vars - 1;
        while (k >= 0 && g[static_cast<std::size_t>(k)] == n) g[static_cast<std::size_t>(k--)] = -n;
        if (k < 0) break;
        ++g[static_cast<std::size_t>(k)];
    }
    return out;
}

MultiIndex random_composition(std::mt19937& rng, int n_vars, int max_part) {
    std::uniform_int_distribution<int> d(0, max_part);
    MultiIndex a(static_cast<std::size_t>(n_vars));
    for (auto& v : a) v = d(rng);
    return a;
}

}  // namespace

TEST_CASE("rank permutation") {
    const MultiIndex a{1, 2, 1, 4};
    const auto r = rank_perm(a);
    CHECK(r.one_based() == std::vector<int>{3, 2, 4, 1});
    CHECK(r.act(a) == MultiIndex{4, 2, 1, 1});
    CHECK(rank_perm({0, 3, 5, 0}).one_based() == std::vector<int>{3, 2, 1, 4});
    CHECK(rank_perm({3, 2, 2, 0}).is_identity());
    CHECK_THROWS_AS(rank_perm({1, -1}), NegativeEntry);
}

TEST_CASE("phi and the rank relations") {
    CHECK(phi({0, 3, 5, 0}) == MultiIndex{3, 5, 0, 1});
    CHECK(rank_perm(phi({0, 3, 5, 0})).one_based() == std::vector<int>{2, 1, 4, 3});
    CHECK(phi({0, 0, 0}) == MultiIndex{0, 0, 1});
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
        const auto a = random_composition(rng, 4, 3);
        CHECK(phi_inverse(phi(a)) == a);
        CHECK(rank_perm(phi(a)) == rank_perm(a) * Permutation::cycle(4));
        for (int i = 0; i + 1 < 4; ++i) {
            if (a[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>(i + 1)]) continue;
            const auto s = Permutation::simple(4, i);
            CHECK(rank_perm(s.act(a)) == rank_perm(a) * s);
        }
    }
}

TEST_CASE("the triangular order") {
    CHECK(triangular_lt({3, 2, 1}, {0, 2, 4}));
    CHECK(triangular_lt({0, 2, 4}, {4, 0, 2}));
    CHECK_FALSE(triangular_lt({4, 1, 1}, {3, 3, 0}));
    CHECK_FALSE(triangular_lt({3, 3, 0}, {4, 1, 1}));
    CHECK_FALSE(triangular_lt({1, 2, 0}, {1, 2, 0}));
    std::mt19937 rng(5);
    for (int k = 0; k < 2000; ++k) {
        const auto a = random_composition(rng, 3, 2);
        const auto b = random_composition(rng, 3, 2);
        const auto c = random_composition(rng, 3, 2);
        CHECK_FALSE(triangular_lt(a, a));
        if (triangular_lt(a, b) && triangular_lt(b, c)) CHECK(triangular_lt(a, c));
        CHECK_FALSE((triangular_lt(a, b) && triangular_lt(b, a)));
    }
}

TEST_CASE("Z_{N,n} enumeration and count") {
    CHECK(enumerate_Z(3, 0) == std::vector<MultiIndex>{{0, 0, 0}});
    const auto z31 = enumerate_Z(3, 1);
    CHECK(z31.size() == 6);
    CHECK(z31 == brute_force_Z(3, 1));
    for (int n_vars = 2; n_vars <= 6; ++n_vars) {
        for (int n = 0; n <= 8; ++n) {
            const auto z = enumerate_Z(n_vars, n);
            CHECK(mpz_class(static_cast<unsigned long>(z.size())) == count_Z(n_vars, n));
            CHECK(std::is_sorted(z.begin(), z.end()));
            if (n_vars <= 4 && n <= 4) CHECK(z == brute_force_Z(n_vars, n));
            std::set<MultiIndex> orbit_reps;
            for (const auto& g : z) orbit_reps.insert(sorted_desc(g));
            const auto canon = canonical_Z(n_vars, n);
            CHECK(std::set<MultiIndex>(canon.begin(), canon.end()) == orbit_reps);
            CHECK(canon.size() == orbit_reps.size());
        }
    }
    for (int n = 1; n <= 8; ++n) {
        CHECK(count_Z(2, n) == 2);
        CHECK(count_Z(3, n) == 6 * n);
        CHECK(count_Z(4, n) == 10 * n * n + 2);
        CHECK(count_Z(5, n) * 3 == 5 * n * (7 * n * n + 5));
    }
    CHECK(count_Z(4, 3) == 92);
    CHECK(count_Z(5, 2) == 110);
}

TEST_CASE("minimal gamma") {
    CHECK(minimal_gamma({0, 0, 1, 2}, 2) == MultiIndex{2, 1, -1, -2});
    CHECK(minimal_gamma({0, 0, 4}, 2) == MultiIndex{2, 2, -4});
    CHECK_THROWS_AS(minimal_gamma({0, 1, 1}, 2), BadSupport);
    CHECK_THROWS_AS(minimal_gamma({0, 0, 1}, 0), BadSupport);
    // Exhaustive: least among all gamma with this nu whose positive part is a partition.
    for (int n_vars = 2; n_vars <= 5; ++n_vars) {
        for (int n = 1; n <= 4; ++n) {
            for (const auto& g : enumerate_Z(n_vars, n)) {
                const auto s = split_pi_nu(g);
                int k = 0;
                while (k < n_vars && s.nu[static_cast<std::size_t>(k)] == 0) ++k;
                bool pattern = k >= 1;
                for (int i = k; i < n_vars; ++i) pattern = pattern && s.nu[static_cast<std::size_t>(i)] > 0;
                if (!pattern) continue;
                const auto g0 = minimal_gamma(s.nu, k);
                CHECK(split_pi_nu(g0).nu == s.nu);
                if (g != g0 && is_partition(s.pi)) CHECK(triangular_lt(split_pi_nu(g0).pi, s.pi));
            }
        }
    }
}

TEST_CASE("steps count") {
    CHECK(steps_count({1, 0}) == 1);
    CHECK(steps_count({0, 1}) == 0);
    CHECK(steps_count({2, 2, 2}) == 0);
    CHECK(steps_count({1, 0, 0}) == 2);
}

TEST_CASE("canonicalize") {
    const auto c = canonicalize({-1, 2, -1});
    CHECK(c.canonical == MultiIndex{2, -1, -1});
    CHECK(c.w.act({-1, 2, -1}) == c.canonical);
    CHECK(c.w.inverse().act(c.canonical) == MultiIndex{-1, 2, -1});
    CHECK(canonicalize({1, -1, 0}).canonical == MultiIndex{1, 0, -1});
    CHECK(canonicalize({2, 0, -2}).w.is_identity());
    CHECK_THROWS_AS(canonicalize({1, 0, 0}), NotGraded);
    for (const auto& g : enumerate_Z(4, 3)) CHECK(is_partition(split_pi_nu(canonicalize(g).canonical).pi));
}
