#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "vvjack/permutation.hpp"

namespace vvjack {

int total(const MultiIndex& a);      ///< sum of entries
int abs_total(const MultiIndex& a);  ///< sum of |entries|
/// Sum of |a_i| / 2: the grade n with a in Z_{N,n}.
int grade(const MultiIndex& a);
bool is_partition(const MultiIndex& a);
MultiIndex sorted_desc(MultiIndex a);  ///< a^+
MultiIndex epsilon(int n, int i);      ///< unit vector, 0-based i

/// r(i) = #{j : a_j > a_i} + #{j <= i : a_j = a_i}, so r . a = a^+.
/// Throws NegativeEntry.
Permutation rank_perm(const MultiIndex& a);

/// Phi(a_1..a_N) = (a_2, ..., a_N, a_1 + 1).
MultiIndex phi(const MultiIndex& a);
MultiIndex phi_inverse(const MultiIndex& a);

/// Dominance on partial sums: a <= b entrywise on prefix sums.
bool dominance_leq(const MultiIndex& a, const MultiIndex& b);
/// Strict a < b in the order used inside one rearrangement class.
bool dominance_lt(const MultiIndex& a, const MultiIndex& b);
/// The order: |a| = |b| and (a^+ < b^+, or a^+ = b^+ and a < b).
bool triangular_lt(const MultiIndex& a, const MultiIndex& b);

/// Z_{N,n} = {g : sum g = 0, sum |g| = 2n} in lexicographic order.
std::vector<MultiIndex> enumerate_Z(int n_vars, int n);
void for_each_Z(int n_vars, int n, const std::function<void(const MultiIndex&)>& visit);
/// Closed-form cardinality of Z_{N,n}.
mpz_class count_Z(int n_vars, int n);

/// Sorted-orbit representatives of Z_{N,n}: non-increasing vectors.
std::vector<MultiIndex> canonical_Z(int n_vars, int n);

struct PiNuSplit {
    MultiIndex pi;
    MultiIndex nu;
};
PiNuSplit split_pi_nu(const MultiIndex& g);

/// The least element of {g : g^nu = nu, g^pi a partition}, where nu vanishes
/// exactly on its first k positions. Throws BadSupport.
MultiIndex minimal_gamma(const MultiIndex& nu, int k);

/// S(a) = 1/2 sum_{i<j} (|a_i - a_j| + |a_i - a_j + 1| - 1).
int steps_count(const MultiIndex& a);

struct Canonical {
    MultiIndex canonical;  ///< non-increasing rearrangement
    Permutation w;         ///< w . g = canonical (stable)
};
/// Throws NotGraded when sum g != 0.
Canonical canonicalize(const MultiIndex& g);

/// Stable rank permutation for integer vectors of any sign.
Permutation sorting_perm(const MultiIndex& a);

std::string to_string(const MultiIndex& a);

}  // namespace vvjack
