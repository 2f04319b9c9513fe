// vvjack: command-line access to every stage of the library. Each run writes
// one JSON document {command, config, version, results}.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vvjack/cesaro.hpp"
#include "vvjack/checks.hpp"
#include "vvjack/coeff_store.hpp"
#include "vvjack/compositions.hpp"
#include "vvjack/diff_system.hpp"
#include "vvjack/errors.hpp"
#include "vvjack/serialize.hpp"
#include "vvjack/torus_form.hpp"
#include "vvjack/yb_graph.hpp"

using namespace vvjack;

namespace {

constexpr const char* kVersion = "1.0.0";

/// Usage-level problems detected after parsing (bad shape text, missing flag).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Session {
    std::string shape_text;
    std::string kappa_text;
    int max_degree = 3;
    std::uint64_t seed = 2024;
    std::string output;

    std::optional<Partition> shape;
    std::optional<KappaParam> kappa;

    const Partition& need_shape() {
        if (!shape) {
            if (shape_text.empty()) throw UsageError("--shape is required");
            shape = Partition::parse(shape_text);
        }
        return *shape;
    }

    const KappaParam& need_kappa() {
        if (!kappa) {
            const Partition& s = need_shape();
            kappa = kappa_text.empty() ? default_kappa(s) : make_kappa(Rational::parse(kappa_text), s);
        }
        return *kappa;
    }

    Json config() const {
        Json c;
        if (shape) c["shape"] = to_json(*shape);
        if (kappa) c["kappa"] = to_json(kappa->value());
        c["max_degree"] = max_degree;
        c["seed"] = seed;
        return c;
    }
};

std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Json checks_json(const std::vector<CheckResult>& results) {
    Json out = Json::array();
    for (const auto& r : results) {
        out.push_back(Json{{"name", r.name},
                           {"passed", r.passed},
                           {"assertions", r.assertions},
                           {"failures", r.failures},
                           {"detail", r.detail}});
    }
    return out;
}

Json cmd_tableaux(Session& s) {
    const auto rep = Representation::of(s.need_shape());
    Json list = Json::array();
    for (std::size_t k = 0; k < rep->dim(); ++k) {
        const Rsyt& t = rep->tableau(k);
        Json e = to_json(t);
        e["index"] = k;
        e["norm0"] = to_json(norm0(t));
        e["inversions"] = t.inv();
        list.push_back(std::move(e));
    }
    return Json{{"dimension", rep->dim()},
                {"hook_dimension", hook_dimension(rep->shape())},
                {"root_index", rep->root_index()},
                {"basis_order", "lexicographically decreasing content vectors"},
                {"tableaux", std::move(list)}};
}

Json cmd_rep(Session& s, const std::string& perm_text) {
    const auto rep = Representation::of(s.need_shape());
    const Permutation w = Permutation::from_one_based(parse_ints(perm_text, "permutation"));
    if (w.size() != rep->n()) throw UsageError("permutation length must equal N");
    return Json{{"permutation", to_json(w)},
                {"reduced_word", w.reduced_word()},
                {"basis", basis_json(*rep)},
                {"matrix", to_json(rep->rep_matrix(w))}};
}

Json cmd_nsjp(Session& s, const std::string& alpha_text, std::size_t tableau) {
    const auto rep = Representation::of(s.need_shape());
    if (tableau >= rep->dim()) throw UsageError("--tableau must be below dim = " + std::to_string(rep->dim()));
    const MultiIndex alpha = parse_ints(alpha_text, "alpha");
    if (static_cast<int>(alpha.size()) != rep->n()) throw UsageError("alpha length must equal N");
    YangBaxterGraph graph(rep, s.need_kappa());
    return node_json(graph.build(alpha, tableau), *rep);
}

Json cmd_gram(Session& s) {
    const auto rep = Representation::of(s.need_shape());
    const KappaParam& kappa = s.need_kappa();
    CoeffStore store(rep, kappa);
    store.ensure_grade(s.max_degree);
    YangBaxterGraph graph(rep, kappa);
    FormContext ctx(store);
    std::vector<std::pair<MultiIndex, std::size_t>> nodes;
    for (int d = 0; d <= s.max_degree; ++d)
        for (const auto& a : compositions_of_degree(rep->n(), d))
            for (std::size_t k = 0; k < rep->dim(); ++k) nodes.emplace_back(a, k);
    const RationalMatrix g = gram(graph, nodes, ctx);
    Json report = gram_json(nodes, g);
    report["diagonal"] = g.is_diagonal();
    long matches = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const Rsyt& t = rep->tableau(nodes[k].second);
        const Rational e = e_factor(nodes[k].first, t, 1, kappa) * e_factor(nodes[k].first, t, -1, kappa);
        if (g(k, k) * e == norm_partition(sorted_desc(nodes[k].first), t, kappa)) ++matches;
    }
    report["closed_form_matches"] = matches;
    report["nodes"] = nodes.size();
    return report;
}

Json cmd_coeffs(Session& s, int grade, const std::string& load_path, const std::string& store_path) {
    std::unique_ptr<CoeffStore> store;
    if (!load_path.empty()) {
        std::ifstream in(load_path);
        if (!in) throw UsageError("cannot read " + load_path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw FormatError(std::string("store file is not JSON: ") + e.what());
        }
        store = load_store(j);
        s.shape = store->rep().shape();
        s.kappa = store->kappa();
    } else {
        store = std::make_unique<CoeffStore>(Representation::of(s.need_shape()), s.need_kappa());
    }
    store->ensure_grade(grade);
    const Json persisted = store_json(*store);
    if (!store_path.empty()) {
        std::ofstream out(store_path);
        if (!out) throw UsageError("cannot write " + store_path);
        out << persisted.dump(1) << '\n';
    }
    Json counts = Json::array();
    for (int n = 0; n <= store->sealed_grade(); ++n) counts.push_back(store->grade_entries(n).size());
    Json results{{"sealed_grade", store->sealed_grade()}, {"canonical_counts", std::move(counts)}};
    if (store_path.empty()) results["store"] = persisted;
    else results["store_file"] = store_path;
    return results;
}

Json cmd_kernel(Session& s, int n_max, int samples) {
    const Partition& shape = s.need_shape();
    const KappaParam& kappa = s.need_kappa();
    CoeffStore store(Representation::of(shape), kappa);
    KernelEvaluator eval(store);
    Json reports = Json::array();
    for (int n = 1; n <= n_max; ++n) reports.push_back(kernel_report_json(kernel_report(eval, n, samples, s.seed), shape, kappa.value()));
    return Json{{"psd_window", kappa.psd_range()},
                {"max_hook", shape.max_hook()},
                {"positivity_asserted", kappa.psd_range()},
                {"reports", std::move(reports)}};
}

Json cmd_identity(Session& s, int n_vars, int n_max, int samples) {
    if (n_vars < 1) throw UsageError("--N must be positive");
    const auto pts = sample_points(n_vars, samples, s.seed);
    Json rows = Json::array();
    for (int n = 0; n <= n_max; ++n) {
        double worst = 0.0, lowest = INFINITY;
        for (const auto& x : pts) {
            const auto r = sigma_identity(n, x);
            worst = std::max(worst, r.residual);
            lowest = std::min(lowest, r.sigma);
        }
        rows.push_back(Json{{"n", n}, {"max_residual", worst}, {"min_sigma", lowest}});
    }
    return Json{{"N", n_vars}, {"samples", samples}, {"seed", s.seed}, {"grades", std::move(rows)}};
}

Json cmd_diffsys(Session& s, int points, int loop_steps) {
    const Partition& shape = s.need_shape();
    const KappaParam& kappa = s.need_kappa();
    DiffSystem sys(Representation::of(shape), kappa);
    const CheckResult exact = check_diffsys(shape, kappa, points, s.seed, false);
    Json results{{"gamma", to_json(sys.gamma())},
                 {"gamma_from_rows", to_json(gamma_from_rows(shape))},
                 {"gamma_from_contents", to_json(gamma_from_contents(shape))},
                 {"points", points},
                 {"exact_checks", checks_json({exact})}};
    if (loop_steps > 0) {
        const int n = shape.size();
        std::vector<TorusPoint> loop;
        for (auto [d1, d2] : {std::pair{-0.3, -0.3}, {0.3, -0.3}, {0.3, 0.3}, {-0.3, 0.3}}) {
            TorusPoint v{std::vector<double>(static_cast<std::size_t>(n))};
            for (int j = 0; j < n; ++j) v.theta[static_cast<std::size_t>(j)] = 2.0 * 3.14159265358979323846 * j / n;
            v.theta[0] += d1;
            v.theta[1] += d2;
            loop.push_back(v);
        }
        const PathReport r = sys.integrate_loop(loop, loop_steps);
        Json path = path_report_json(r);
        path["defect"] = (r.transport - ComplexMatrix::identity(sys.rep().dim())).max_abs();
        results["closed_loop"] = std::move(path);
    }
    return results;
}

Json cmd_count(int n_vars, int n) {
    if (n_vars < 1 || n < 0) throw UsageError("--N must be positive and --n nonnegative");
    return Json{{"N", n_vars}, {"n", n}, {"count", count_Z(n_vars, n).get_str()}};
}

Json error_record(const std::exception& e, const Session& s) {
    Json rec{{"code", "Error"}, {"message", e.what()}, {"kappa", nullptr}, {"witness", nullptr}};
    if (const auto* err = dynamic_cast<const Error*>(&e)) rec["code"] = err->code();
    if (const auto* pole = dynamic_cast<const PoleExcluded*>(&e)) {
        rec["kappa"] = pole->kappa();
        rec["witness"] = pole->witness();
    } else if (s.kappa) {
        rec["kappa"] = to_json(s.kappa->value());
    }
    return rec;
}

void emit(const Json& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << doc.dump(2) << '\n';
}

bool usage_class(const std::exception& e) {
    if (dynamic_cast<const UsageError*>(&e)) return true;
    const auto* err = dynamic_cast<const Error*>(&e);
    if (!err) return false;
    const std::string& c = err->code();
    return c == "InvalidShape" || c == "FormatError" || c == "InvalidArgument" || c == "NegativeEntry" ||
           c == "IndexOutOfRange";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vector-valued nonsymmetric Jack polynomials and their torus measure"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML or INI file supplying any flag; command-line flags take precedence");
    app.set_version_flag("--version", kVersion);

    Session s;
    app.add_option("--shape", s.shape_text, "partition, comma separated (e.g. 2,1)");
    app.add_option("--kappa", s.kappa_text, "rational parameter p/q (default 1/(h+1))");
    app.add_option("--max-degree,--max-grade", s.max_degree, "degree or grade bound")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", s.seed, "seed for sampling");
    app.add_option("--output,-o", s.output, "write the report here instead of stdout");

    auto* tableaux = app.add_subcommand("tableaux", "list the reverse standard Young tableaux, contents and norms");
    std::string perm_text;
    auto* rep = app.add_subcommand("rep", "matrix of a permutation in the tableau basis");
    rep->add_option("--perm", perm_text, "one-line image w(1),...,w(N)")->required();
    std::string alpha_text;
    std::size_t tableau_index = 0;
    auto* nsjp = app.add_subcommand("nsjp", "dump one nonsymmetric Jack polynomial");
    nsjp->add_option("--alpha", alpha_text, "composition, comma separated")->required();
    nsjp->add_option("--tableau", tableau_index, "basis index of the tableau");
    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of all NSJPs up to --max-degree");
    int grade = 2;
    std::string load_path, store_path;
    auto* coeffs = app.add_subcommand("coeffs", "build or extend the coefficient store");
    coeffs->add_option("--grade", grade, "grade to seal")->check(CLI::NonNegativeNumber);
    coeffs->add_option("--load", load_path, "start from a persisted store");
    coeffs->add_option("--store", store_path, "persist the store to this file");
    int kernel_n = 8, samples = 100;
    auto* kernel = app.add_subcommand("kernel", "positivity report for the approximants K_1..K_n");
    kernel->add_option("--n", kernel_n, "largest n")->check(CLI::PositiveNumber);
    kernel->add_option("--samples", samples, "torus samples")->check(CLI::PositiveNumber);
    int id_vars = 3, id_n = 8;
    auto* identity = app.add_subcommand("identity", "complete-symmetric and Cesaro kernel residuals");
    identity->add_option("--N", id_vars, "number of variables")->check(CLI::PositiveNumber);
    identity->add_option("--n", id_n, "largest degree")->check(CLI::NonNegativeNumber);
    identity->add_option("--samples", samples, "torus samples")->check(CLI::PositiveNumber);
    int points = 20, loop_steps = 0;
    auto* diffsys = app.add_subcommand("diffsys", "integrability and Euler checks of the connection");
    diffsys->add_option("--points", points, "random rational points")->check(CLI::PositiveNumber);
    diffsys->add_option("--loop-steps", loop_steps, "RK4 steps per side of a closed loop (0 skips)")
        ->check(CLI::NonNegativeNumber);
    int count_vars = 3, count_n = 1;
    auto* count = app.add_subcommand("count", "size of Z_{N,n}");
    count->add_option("--N", count_vars, "number of variables")->required();
    count->add_option("--n", count_n, "grade")->required();
    auto* verify = app.add_subcommand("verify", "run the invariant suite; nonzero exit on any failure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    Json doc;
    doc["command"] = sub->get_name();
    doc["config"] = Json::object();
    doc["version"] = kVersion;
    int status = 0;
    try {
        Json results;
        if (sub == tableaux) results = cmd_tableaux(s);
        else if (sub == rep) results = cmd_rep(s, perm_text);
        else if (sub == nsjp) results = cmd_nsjp(s, alpha_text, tableau_index);
        else if (sub == gram_cmd) results = cmd_gram(s);
        else if (sub == coeffs) results = cmd_coeffs(s, grade, load_path, store_path);
        else if (sub == kernel) results = cmd_kernel(s, kernel_n, samples);
        else if (sub == identity) results = cmd_identity(s, id_vars, id_n, samples);
        else if (sub == diffsys) results = cmd_diffsys(s, points, loop_steps);
        else if (sub == count) results = cmd_count(count_vars, count_n);
        else if (sub == verify) {
            const auto checks = verify_suite(s.need_shape(), s.need_kappa(), s.max_degree, s.seed);
            bool ok = true;
            for (const auto& c : checks) ok = ok && c.passed;
            results = Json{{"passed", ok}, {"checks", checks_json(checks)}};
            if (!ok) status = 1;
        }
        doc["config"] = s.config();
        doc["results"] = std::move(results);
    } catch (const std::exception& e) {
        status = usage_class(e) ? 2 : 1;
        doc["config"] = s.config();
        doc["error"] = error_record(e, s);
        std::cerr << "error: " << e.what() << '\n';
    }
    try {
        emit(doc, s.output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}
