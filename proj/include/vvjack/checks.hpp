#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vvjack/kappa.hpp"
#include "vvjack/partition.hpp"

namespace vvjack {

/// Outcome of one invariant check: how many assertions ran, how many failed,
/// and the first failure (or a summary of the measured quantities).
struct CheckResult {
    std::string name;
    bool passed = true;
    long assertions = 0;
    long failures = 0;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0;  ///< zero when unbounded
};

// Individual checks, usable with any admissible shape and kappa.
CheckResult check_rsyt_lists();
CheckResult check_representation(const Partition& shape);
CheckResult check_counting(int max_vars, int max_grade);
CheckResult check_nsjp(const Partition& shape, const KappaParam& kappa, int max_degree);
CheckResult check_gram(const Partition& shape, const KappaParam& kappa, int max_degree);
CheckResult check_coeff_symmetries(const Partition& shape, const KappaParam& kappa, int max_grade);
CheckResult check_selfadjoint(const Partition& shape, const KappaParam& kappa, int max_degree, int triples,
                              std::uint64_t seed);
CheckResult check_grade2(const Partition& shape, const KappaParam& kappa);
CheckResult check_poles();
CheckResult check_kernel(const Partition& shape, const KappaParam& kappa, int max_n, int samples,
                         std::uint64_t seed);
CheckResult check_identity(int n_vars, int max_n, int samples, std::uint64_t seed);
CheckResult check_diffsys(const Partition& shape, const KappaParam& kappa, int points, std::uint64_t seed,
                          bool transport);
CheckResult check_gamma_formulas(int max_vars);

/// Merges several results under one name; passes iff all parts pass.
CheckResult combine(const std::string& name, const std::vector<CheckResult>& parts);

/// Acceptance criteria 1..11 at their fixed parameters.
std::vector<CheckResult> acceptance_suite(const std::function<void(int, const CheckResult&)>& on_result = {});

/// The invariant suite for one shape and kappa up to a degree.
std::vector<CheckResult> verify_suite(const Partition& shape, const KappaParam& kappa, int max_degree,
                                      std::uint64_t seed);

}  // namespace vvjack
