#include "vvjack/checks.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "vvjack/cesaro.hpp"
#include "vvjack/coeff_store.hpp"
#include "vvjack/compositions.hpp"
#include "vvjack/diff_system.hpp"
#include "vvjack/errors.hpp"
#include "vvjack/tableau.hpp"
#include "vvjack/torus_form.hpp"
#include "vvjack/yb_graph.hpp"

namespace vvjack {

namespace {

/// Accumulates assertions for one check and keeps the first failure.
class Tally {
public:
    explicit Tally(std::string name, double limit = 0.0) : start_(std::chrono::steady_clock::now()) {
        result_.name = std::move(name);
        result_.time_limit = limit;
    }

    bool expect(bool ok, const std::string& what) {
        ++result_.assertions;
        if (!ok) {
            ++result_.failures;
            if (first_failure_.empty()) first_failure_ = what;
        }
        return ok;
    }

    void note(const std::string& text) {
        if (!notes_.empty()) notes_ += "; ";
        notes_ += text;
    }

    CheckResult finish() {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        result_.passed = result_.failures == 0;
        std::ostringstream os;
        os << result_.assertions << " assertions, " << result_.failures << " failed";
        if (!first_failure_.empty()) os << "; first failure: " << first_failure_;
        if (!notes_.empty()) os << "; " << notes_;
        result_.detail = os.str();
        return result_;
    }

    /// Records an unexpected library error as a failure instead of propagating.
    template <class F>
    void guard(F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            expect(false, std::string("unexpected error: ") + e.what());
        }
    }

private:
    CheckResult result_;
    std::string first_failure_;
    std::string notes_;
    std::chrono::steady_clock::time_point start_;
};

std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

std::string label(const Partition& shape, const KappaParam& kappa) {
    return "shape " + shape.to_string() + ", kappa " + kappa.value().to_string();
}

MultiIndex random_composition(std::mt19937_64& rng, int n_vars, int degree) {
    MultiIndex a(static_cast<std::size_t>(n_vars), 0);
    for (int d = 0; d < degree; ++d) ++a[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n_vars))];
    return a;
}

RationalVector random_regular_point(std::mt19937_64& rng, int n) {
    for (;;) {
        RationalVector x;
        for (int i = 0; i < n; ++i) {
            const long num = static_cast<long>(rng() % 41) - 20;
            const long den = static_cast<long>(rng() % 9) + 1;
            x.emplace_back(num, den);
        }
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; ++i) {
            if (x[i].is_zero()) ok = false;
            for (std::size_t j = i + 1; j < x.size() && ok; ++j) ok = !(x[i] == x[j]);
        }
        if (ok) return x;
    }
}

}  // namespace

CheckResult check_rsyt_lists() {
    Tally t("RSYT content lists");
    using Contents = std::vector<int>;
    auto contents_of = [](const Partition& shape) {
        std::set<Contents> out;
        for (const auto& r : enumerate_rsyt(shape)) out.insert(r.contents());
        return out;
    };
    t.guard([&] {
        const std::set<Contents> e31{{2, 1, -1, 0}, {2, -1, 1, 0}, {-1, 2, 1, 0}};
        t.expect(contents_of(Partition({3, 1})) == e31, "content list for (3,1)");
        const std::set<Contents> e311{{2, 1, -2, -1, 0}, {2, -2, 1, -1, 0}, {-2, 2, 1, -1, 0},
                                      {2, -2, -1, 1, 0}, {-2, 2, -1, 1, 0}, {-2, -1, 2, 1, 0}};
        t.expect(contents_of(Partition({3, 1, 1})) == e311, "content list for (3,1,1)");
        t.expect(enumerate_rsyt(Partition({3, 1, 1})).size() == 6, "(3,1,1) has 6 tableaux");
        t.expect(t_zero(Partition({3, 3, 1})).contents() == Contents{1, 2, 0, 1, -2, -1, 0}, "T0 contents for (3,3,1)");
    });
    return t.finish();
}

CheckResult check_representation(const Partition& shape) {
    Tally t("representation relations " + shape.to_string());
    t.guard([&] {
        const auto rep = Representation::of(shape);
        const int n = shape.size();
        const auto d = rep->d_matrix();
        // N! / prod hooks
        mpz_class num = 1, den = 1;
        for (int k = 2; k <= n; ++k) num *= k;
        for (int r = 0; r < shape.length(); ++r)
            for (int c = 0; c < shape.row(r); ++c) den *= shape.hook(r, c);
        t.expect(mpz_class(static_cast<unsigned long>(rep->dim())) * den == num, "dimension equals N!/prod hooks");
        for (int i = 1; i < n; ++i) {
            const auto& s = rep->simple_reflection(i);
            t.expect((s * s).is_identity(), "involution s_" + std::to_string(i));
            t.expect(s.transpose() * d * s == d, "D-orthogonality of s_" + std::to_string(i));
            if (i + 1 < n) {
                const auto& u = rep->simple_reflection(i + 1);
                t.expect(s * u * s == u * s * u, "braid relation at " + std::to_string(i));
            }
            for (int j = i + 2; j < n; ++j) {
                const auto& u = rep->simple_reflection(j);
                t.expect(s * u == u * s, "far commutation " + std::to_string(i) + "," + std::to_string(j));
            }
        }
        for (int i = 1; i <= n; ++i) {
            const auto jm = rep->jucys_murphy(i);
            t.expect(jm.is_diagonal(), "Jucys-Murphy " + std::to_string(i) + " diagonal");
            for (std::size_t k = 0; k < rep->dim(); ++k) {
                t.expect(jm(k, k) == Rational(rep->tableau(k).content(i)), "Jucys-Murphy eigenvalue is the content");
            }
        }
    });
    return t.finish();
}

CheckResult check_counting(int max_vars, int max_grade) {
    Tally t("counting Z_{N,n}");
    t.guard([&] {
        for (int nv = 2; nv <= max_vars; ++nv) {
            for (int n = 0; n <= max_grade; ++n) {
                const mpz_class c = count_Z(nv, n);
                long listed = 0;
                for_each_Z(nv, n, [&](const MultiIndex&) { ++listed; });
                const std::string at = "N=" + std::to_string(nv) + ", n=" + std::to_string(n);
                t.expect(c == listed, "count equals enumeration at " + at);
                if (n == 0) continue;
                const mpz_class nn = n;
                if (nv == 2) t.expect(c == 2, "closed form at " + at);
                if (nv == 3) t.expect(c == 6 * nn, "closed form at " + at);
                if (nv == 4) t.expect(c == 10 * nn * nn + 2, "closed form at " + at);
                if (nv == 5) t.expect(3 * c == 5 * nn * (7 * nn * nn + 5), "closed form at " + at);
            }
        }
    });
    return t.finish();
}

CheckResult check_nsjp(const Partition& shape, const KappaParam& kappa, int max_degree) {
    Tally t("NSJP eigenfunctions " + label(shape, kappa) + ", degree <= " + std::to_string(max_degree));
    t.guard([&] {
        const auto rep = Representation::of(shape);
        YangBaxterGraph g(rep, kappa);
        const auto& root = rep->tableau(rep->root_index());
        long nodes = 0;
        for (int d = 0; d <= max_degree; ++d) {
            g.check_distinct_spectra(d);
            for (const GraphNode* node : g.build_layer(d)) {
                ++nodes;
                const std::string at = to_string(node->alpha) + ", T" + std::to_string(node->tableau);
                for (int i = 1; i <= rep->n(); ++i) {
                    t.expect(cherednik(i, node->poly) == node->spectral[static_cast<std::size_t>(i - 1)] * node->poly,
                             "U_" + std::to_string(i) + " eigen at " + at);
                }
                const auto expected = path_length(node->alpha, rep->tableau(node->tableau), root);
                t.expect(node->jumps == expected.first, "jump count at " + at);
                t.expect(node->steps == expected.second, "step count at " + at);
            }
        }
        t.note(std::to_string(nodes) + " nodes");
    });
    return t.finish();
}

CheckResult check_gram(const Partition& shape, const KappaParam& kappa, int max_degree) {
    Tally t("Gram matrix " + label(shape, kappa) + ", degree <= " + std::to_string(max_degree));
    t.guard([&] {
        const auto rep = Representation::of(shape);
        CoeffStore store(rep, kappa);
        store.ensure_grade(max_degree);
        YangBaxterGraph graph(rep, kappa);
        FormContext ctx(store);
        std::vector<std::pair<MultiIndex, std::size_t>> nodes;
        for (int d = 0; d <= max_degree; ++d)
            for (const auto& a : compositions_of_degree(rep->n(), d))
                for (std::size_t k = 0; k < rep->dim(); ++k) nodes.emplace_back(a, k);
        const auto gm = gram(graph, nodes, ctx);
        t.expect(gm.is_diagonal(), "Gram matrix is diagonal");
        long degenerate = 0;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const auto& [alpha, ti] = nodes[k];
            const Rsyt& tab = rep->tableau(ti);
            const Rational e = e_factor(alpha, tab, 1, kappa) * e_factor(alpha, tab, -1, kappa);
            const std::string at = to_string(alpha) + ", T" + std::to_string(ti);
            if (!e.is_zero()) {
                t.expect(gm(k, k) == expected_norm(alpha, tab, kappa), "closed-form norm at " + at);
            } else {
                // on the boundary |kappa| = 1/h the quotient is 0/0; the product form still holds
                ++degenerate;
                t.expect(gm(k, k) * e == norm_partition(sorted_desc(alpha), tab, kappa), "product-form norm at " + at);
            }
        }
        if (degenerate > 0) t.note(std::to_string(degenerate) + " nodes with E_1 E_-1 = 0 checked in product form");
        long jumps = 0;
        for (int d = 0; d < max_degree; ++d) {
            for (const auto& a : compositions_of_degree(rep->n(), d)) {
                if (!is_partition(a)) continue;
                for (std::size_t k = 0; k < rep->dim(); ++k) {
                    const auto& z = graph.build(a, k).poly;
                    const auto& zj = graph.build(phi(a), k).poly;
                    t.expect(ctx.pair(zj, zj) == ctx.pair(z, z), "jump isometry at " + to_string(a));
                    ++jumps;
                }
            }
        }
        t.note(std::to_string(nodes.size()) + " nodes, " + std::to_string(jumps) + " jump pairs");
    });
    return t.finish();
}

CheckResult check_coeff_symmetries(const Partition& shape, const KappaParam& kappa, int max_grade) {
    Tally t("coefficient symmetries " + label(shape, kappa) + ", grade <= " + std::to_string(max_grade));
    t.guard([&] {
        const auto rep = Representation::of(shape);
        CoeffStore store(rep, kappa);
        store.ensure_grade(max_grade);
        const auto perms = all_permutations(rep->n());
        std::vector<RationalMatrix> sig;
        for (const auto& w : perms) sig.push_back(rep->rep_matrix(w));
        for (int n = 0; n <= max_grade; ++n) {
            for (const auto& g : enumerate_Z(rep->n(), n)) {
                MultiIndex neg = g;
                for (auto& v : neg) v = -v;
                const auto gg = store.pairing(g);
                t.expect(store.pairing(neg) == gg.transpose(), "adjoint relation at " + to_string(g));
                for (std::size_t k = 0; k < perms.size(); ++k) {
                    t.expect(sig[k].transpose() * store.pairing(perms[k].act(g)) * sig[k] == gg,
                             "covariance at " + to_string(g) + " under " + perms[k].to_string());
                }
            }
        }
    });
    return t.finish();
}

CheckResult check_selfadjoint(const Partition& shape, const KappaParam& kappa, int max_degree, int triples,
                              std::uint64_t seed) {
    Tally t("self-adjointness identity " + label(shape, kappa) + ", " + std::to_string(triples) + " triples");
    t.guard([&] {
        const auto rep = Representation::of(shape);
        CoeffStore store(rep, kappa);
        std::mt19937_64 rng(seed);
        const int n = rep->n();
        for (int k = 0; k < triples; ++k) {
            const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
            const MultiIndex a = random_composition(rng, n, d);
            const MultiIndex b = random_composition(rng, n, d);
            const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            t.expect(verify_selfadjoint(a, b, i, store).is_zero(),
                     "residual at " + to_string(a) + ", " + to_string(b) + ", i=" + std::to_string(i));
        }
    });
    return t.finish();
}

CheckResult check_grade2(const Partition& shape, const KappaParam& kappa) {
    Tally t("grade-2 relations " + label(shape, kappa));
    t.guard([&] {
        CoeffStore store(Representation::of(shape), kappa);
        const int n = shape.size();
        for (int j = 3; j <= n; ++j) t.expect(grade2_residual_a(store, j).is_zero(), "relation (a), j=" + std::to_string(j));
        for (int j = 3; j <= n - 1; ++j)
            t.expect(grade2_residual_b(store, j).is_zero(), "relation (b), j=" + std::to_string(j));
        t.expect(grade2_residual_c(store).is_zero(), "relation (c)");
    });
    return t.finish();
}

CheckResult check_poles() {
    Tally t("pole detection");
    auto expect_pole = [&](long p, long q, const Partition& shape, const std::string& witness) {
        const std::string at = std::to_string(p) + "/" + std::to_string(q) + " for " + shape.to_string();
        try {
            make_kappa(p, q, shape);
            t.expect(false, "no PoleExcluded at " + at);
        } catch (const PoleExcluded& e) {
            t.expect(e.witness() == witness, "witness " + e.witness() + " at " + at + ", expected " + witness);
        }
    };
    expect_pole(-1, 2, Partition({3, 1}), "-1/2");
    expect_pole(1, 1, Partition({2, 1}), "1/1");
    t.guard([&] {
        // the recurrence itself reports the pole when the gate is bypassed
        const Partition shape({3, 1});
        CoeffStore bad(Representation::of(shape), KappaParam::unchecked(Rational(-1, 2), shape));
        try {
            bad.ensure_grade(2);
            t.expect(false, "solve_grade at kappa = -1/2 for (3,1) did not report a pole");
        } catch (const PoleExcluded& e) {
            t.expect(e.witness() == "-1/2", "solve_grade witness " + e.witness());
        }
        // admissible runs never reach a vanishing pivot
        const std::vector<std::pair<Partition, int>> runs{{Partition({2, 1}), 4}, {Partition({3, 1}), 3}};
        for (const auto& [s, grade] : runs) {
            CoeffStore store(Representation::of(s), make_kappa(1, 4, s));
            try {
                store.ensure_grade(grade);
                t.expect(store.sealed_grade() == grade, "sealed grade for " + s.to_string());
            } catch (const PoleExcluded& e) {
                t.expect(false, std::string("pole at admissible kappa: ") + e.what());
            }
        }
    });
    return t.finish();
}

CheckResult check_kernel(const Partition& shape, const KappaParam& kappa, int max_n, int samples,
                         std::uint64_t seed) {
    Tally t("kernel positivity " + label(shape, kappa) + ", n <= " + std::to_string(max_n));
    t.guard([&] {
        CoeffStore store(Representation::of(shape), kappa);
        KernelEvaluator eval(store);
        double worst = INFINITY, herm = 0, cov = 0, hom = 0, cyc = 0;
        for (int n = 1; n <= max_n; ++n) {
            const auto r = kernel_report(eval, n, samples, seed);
            worst = std::min(worst, r.worst_min_eigenvalue);
            herm = std::max(herm, r.hermiticity_residual);
            cov = std::max(cov, r.covariance_residual);
            hom = std::max(hom, r.homogeneity_residual);
            cyc = std::max(cyc, r.cyclic_residual);
            const std::string at = " at n=" + std::to_string(n);
            if (kappa.psd_range()) t.expect(r.worst_min_eigenvalue >= -1e-9, "min eigenvalue " + sci(r.worst_min_eigenvalue) + at);
            t.expect(r.hermiticity_residual < 1e-10, "Hermiticity residual " + sci(r.hermiticity_residual) + at);
            t.expect(r.covariance_residual < 1e-10, "covariance residual " + sci(r.covariance_residual) + at);
            t.expect(r.homogeneity_residual < 1e-10, "homogeneity residual " + sci(r.homogeneity_residual) + at);
            t.expect(r.cyclic_residual < 1e-10, "cyclic commutation residual " + sci(r.cyclic_residual) + at);
        }
        t.note("min eigenvalue " + sci(worst) + (kappa.psd_range() ? "" : " (outside the positivity window, not asserted)") +
               ", Hermiticity " + sci(herm) + ", covariance " + sci(cov) + ", homogeneity " + sci(hom) +
               ", cyclic " + sci(cyc));
    });
    return t.finish();
}

CheckResult check_identity(int n_vars, int max_n, int samples, std::uint64_t seed) {
    Tally t("Cesaro identity N=" + std::to_string(n_vars) + ", n <= " + std::to_string(max_n));
    t.guard([&] {
        const auto pts = sample_points(n_vars, samples, seed);
        double worst = 0, lowest = INFINITY;
        for (int n = 0; n <= max_n; ++n) {
            for (const auto& x : pts) {
                const auto r = sigma_identity(n, x);
                worst = std::max(worst, r.residual);
                lowest = std::min(lowest, r.sigma);
                t.expect(r.residual < 1e-10, "residual " + sci(r.residual) + " at n=" + std::to_string(n));
                t.expect(r.sigma >= -1e-10, "negative kernel value " + sci(r.sigma) + " at n=" + std::to_string(n));
            }
        }
        t.note("max residual " + sci(worst) + ", min sigma " + sci(lowest));
    });
    return t.finish();
}

CheckResult check_diffsys(const Partition& shape, const KappaParam& kappa, int points, std::uint64_t seed,
                          bool transport) {
    Tally t("differential system " + label(shape, kappa));
    t.guard([&] {
        DiffSystem sys(Representation::of(shape), kappa);
        const int n = shape.size();
        std::mt19937_64 rng(seed);
        for (int p = 0; p < points; ++p) {
            const auto x = random_regular_point(rng, n);
            t.expect(sys.euler_residual(x).is_zero(), "Euler identity at point " + std::to_string(p));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    t.expect(sys.integrability_residual(i, j, x).is_zero(),
                             "integrability (" + std::to_string(i) + "," + std::to_string(j) + ") at point " +
                                 std::to_string(p));
        }
        if (transport) {
            std::vector<double> base(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) base[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / n;
            std::vector<TorusPoint> loop;
            for (auto [d1, d2] : {std::pair{-0.3, -0.3}, {0.3, -0.3}, {0.3, 0.3}, {-0.3, 0.3}}) {
                TorusPoint v{base};
                v.theta[0] += d1;
                v.theta[1] += d2;
                loop.push_back(v);
            }
            const auto r = sys.integrate_loop(loop, 2500);
            const double defect = (r.transport - ComplexMatrix::identity(sys.rep().dim())).max_abs();
            t.expect(defect < 1e-6, "closed-loop defect " + sci(defect));
            t.note("closed-loop defect " + sci(defect) + " at " + std::to_string(r.steps) + " steps");
        }
    });
    return t.finish();
}

CheckResult check_gamma_formulas(int max_vars) {
    Tally t("gamma formulas, N <= " + std::to_string(max_vars));
    t.guard([&] {
        long shapes = 0;
        for (int n = 3; n <= max_vars; ++n) {
            for (const auto& s : admissible_shapes(n)) {
                ++shapes;
                t.expect(gamma_from_rows(s) == gamma_from_contents(s), "gamma formulas disagree for " + s.to_string());
            }
        }
        t.note(std::to_string(shapes) + " shapes");
    });
    return t.finish();
}

CheckResult combine(const std::string& name, const std::vector<CheckResult>& parts) {
    CheckResult out;
    out.name = name;
    std::string first_failure;
    std::string notes;
    for (const auto& p : parts) {
        out.assertions += p.assertions;
        out.failures += p.failures;
        out.seconds += p.seconds;
        if (!p.passed && first_failure.empty()) first_failure = p.name + ": " + p.detail;
    }
    out.passed = out.failures == 0;
    std::ostringstream os;
    os << out.assertions << " assertions, " << out.failures << " failed";
    if (!first_failure.empty()) os << "; " << first_failure;
    out.detail = os.str();
    return out;
}

namespace {

CheckResult timed(CheckResult r, double limit) {
    r.time_limit = limit;
    if (r.seconds > limit) {
        r.passed = false;
        r.detail += "; exceeded the time limit of " + std::to_string(static_cast<int>(limit)) + " s";
    }
    return r;
}

template <class... R>
CheckResult merged(const std::string& name, double limit, R&&... parts) {
    std::vector<CheckResult> v{std::forward<R>(parts)...};
    CheckResult r = combine(name, v);
    for (const auto& p : v) {
        if (p.detail.find("; ") != std::string::npos && p.passed) {
            r.detail += " | " + p.name + ": " + p.detail.substr(p.detail.find("; ") + 2);
        }
    }
    return timed(r, limit);
}

}  // namespace

std::vector<CheckResult> acceptance_suite(const std::function<void(int, const CheckResult&)>& on_result) {
    std::vector<CheckResult> out;
    auto emit = [&](CheckResult r) {
        out.push_back(r);
        if (on_result) on_result(static_cast<int>(out.size()), out.back());
    };
    const Partition s21({2, 1}), s31({3, 1});
    const auto k21 = make_kappa(1, 4, s21);
    const auto k31 = make_kappa(1, 4, s31);

    emit(timed(check_rsyt_lists(), 1.0));
    {
        std::vector<CheckResult> parts;
        for (int n = 3; n <= 6; ++n)
            for (const auto& s : admissible_shapes(n)) parts.push_back(check_representation(s));
        emit(timed(combine("representation suite, all shapes N <= 6", parts), 30.0));
    }
    emit(timed(check_counting(6, 8), 10.0));
    emit(merged("NSJP eigen-verification, |alpha| <= 4", 120.0, check_nsjp(s21, k21, 4), check_nsjp(s31, k31, 4)));
    emit(merged("Gram matrix diagonal with closed-form norms and jump isometry", 120.0, check_gram(s21, k21, 3),
                check_gram(s31, k31, 2), check_gram(s31, make_kappa(1, 5, s31), 2)));
    emit(timed(check_coeff_symmetries(s21, k21, 4), 60.0));
    emit(merged("self-adjointness identity and grade-2 relations", 60.0, check_selfadjoint(s21, k21, 3, 50, 5),
                check_grade2(s21, k21), check_grade2(s31, k31), check_grade2(Partition({2, 2, 1}), make_kappa(1, 7, Partition({2, 2, 1})))));
    emit(timed(check_poles(), 60.0));
    emit(merged("kernel positivity, shape (2,1), kappa = +-1/5, n <= 8", 60.0,
                check_kernel(s21, make_kappa(1, 5, s21), 8, 100, 2024),
                check_kernel(s21, make_kappa(-1, 5, s21), 8, 100, 2024)));
    emit(merged("Cesaro identity, N = 3, 4, n <= 8", 30.0, check_identity(3, 8, 100, 7), check_identity(4, 8, 100, 7)));
    emit(merged("differential system", 60.0, check_diffsys(s21, k21, 20, 11, true), check_diffsys(s31, k31, 20, 13, true),
                check_gamma_formulas(7)));
    return out;
}

std::vector<CheckResult> verify_suite(const Partition& shape, const KappaParam& kappa, int max_degree,
                                      std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_representation(shape));
    out.push_back(check_nsjp(shape, kappa, max_degree));
    out.push_back(check_gram(shape, kappa, max_degree));
    out.push_back(check_coeff_symmetries(shape, kappa, max_degree));
    out.push_back(check_selfadjoint(shape, kappa, max_degree, 50, seed));
    out.push_back(check_grade2(shape, kappa));
    out.push_back(check_kernel(shape, kappa, max_degree, 20, seed));
    out.push_back(check_identity(shape.size(), max_degree, 20, seed));
    out.push_back(check_diffsys(shape, kappa, 20, seed, false));
    return out;
}

}  // namespace vvjack
