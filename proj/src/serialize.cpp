#include "vvjack/serialize.hpp"

#include "vvjack/compositions.hpp"
#include "vvjack/errors.hpp"

namespace vvjack {

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw FormatError("expected a rational string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

Json to_json(ComplexScalar z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("matrix must be an array of rows");
    std::vector<RationalVector> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw FormatError("matrix row must be an array");
        RationalVector v;
        for (const auto& x : row) v.push_back(rational_from_json(x));
        if (!rows.empty() && v.size() != rows.front().size()) throw FormatError("ragged matrix");
        rows.push_back(std::move(v));
    }
    return RationalMatrix::from_rows(rows);
}

Json to_json(const ComplexMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const Permutation& w) { return w.one_based(); }

Json to_json(const Rsyt& t) { return Json{{"rows", t.rows()}, {"contents", t.contents()}}; }

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const VVLaurent& f) {
    Json out = Json::array();
    for (const auto& [a, v] : f.sorted_terms()) out.push_back(Json{{"exponent", a}, {"coeff", to_json(v)}});
    return out;
}

Json to_json(const TorusPoint& x) { return x.theta; }

Json basis_json(const Representation& rep) {
    Json out = Json::array();
    for (const auto& t : rep.basis()) out.push_back(to_json(t));
    return out;
}

Json node_json(const GraphNode& node, const Representation& rep) {
    return Json{{"alpha", node.alpha},
                {"tableau", to_json(rep.tableau(node.tableau))},
                {"tableau_index", node.tableau},
                {"spectral", to_json(node.spectral)},
                {"jumps", node.jumps},
                {"steps", node.steps},
                {"poly", to_json(node.poly)}};
}

Json gram_json(const std::vector<std::pair<MultiIndex, std::size_t>>& nodes, const RationalMatrix& gram) {
    Json basis = Json::array();
    for (const auto& [alpha, t] : nodes) basis.push_back(Json::array({alpha, t}));
    return Json{{"basis", std::move(basis)}, {"matrix", to_json(gram)}};
}

Json kernel_report_json(const KernelReport& r, const Partition& shape, const Rational& kappa) {
    return Json{{"shape", to_json(shape)},
                {"kappa", to_json(kappa)},
                {"n", r.n},
                {"samples", r.samples},
                {"seed", r.seed},
                {"min_eigenvalues", r.min_eigenvalues},
                {"worst_min_eigenvalue", r.worst_min_eigenvalue},
                {"hermiticity_residual", r.hermiticity_residual},
                {"covariance_residual", r.covariance_residual},
                {"homogeneity_residual", r.homogeneity_residual},
                {"cyclic_residual", r.cyclic_residual}};
}

Json path_report_json(const PathReport& r) {
    return Json{{"steps", r.steps},
                {"clearance", r.clearance},
                {"min_separation", r.min_separation},
                {"transport", to_json(r.transport)}};
}

Json store_json(const CoeffStore& store) {
    const auto& rep = store.rep();
    Json order = Json::array();
    for (const auto& t : rep.basis()) order.push_back(t.contents());
    Json grades = Json::array();
    for (int n = 0; n <= store.sealed_grade(); ++n) {
        Json records = Json::array();
        for (const auto& [g, m] : store.grade_entries(n)) records.push_back(Json{{"gamma", g}, {"matrix", to_json(m)}});
        grades.push_back(Json{{"grade", n}, {"records", std::move(records)}});
    }
    return Json{{"header",
                 {{"N", rep.n()},
                  {"shape", to_json(rep.shape())},
                  {"kappa", to_json(store.kappa().value())},
                  {"sealed_grade", store.sealed_grade()},
                  {"basis_order", std::move(order)}}},
                {"grades", std::move(grades)}};
}

std::unique_ptr<CoeffStore> load_store(const Json& j, StoreOptions options) {
    try {
        const Json& h = j.at("header");
        const Partition shape(h.at("shape").get<std::vector<int>>());
        if (h.at("N").get<int>() != shape.size()) throw FormatError("header N does not match the shape");
        auto rep = Representation::of(shape);
        std::vector<std::vector<int>> order;
        for (const auto& t : rep->basis()) order.push_back(t.contents());
        if (h.at("basis_order").get<std::vector<std::vector<int>>>() != order) {
            throw FormatError("stored basis order differs from the canonical order");
        }
        auto store = std::make_unique<CoeffStore>(rep, make_kappa(rational_from_json(h.at("kappa")), shape), options);
        const int sealed = h.at("sealed_grade").get<int>();
        const Json& grades = j.at("grades");
        if (static_cast<int>(grades.size()) != sealed + 1) throw FormatError("grade count does not match sealed_grade");
        for (int n = 0; n <= sealed; ++n) {
            const Json& g = grades.at(static_cast<std::size_t>(n));
            if (g.at("grade").get<int>() != n) throw FormatError("grades out of order");
            std::map<MultiIndex, RationalMatrix> entries;
            for (const auto& rec : g.at("records")) {
                MultiIndex gamma = rec.at("gamma").get<MultiIndex>();
                RationalMatrix m = matrix_from_json(rec.at("matrix"));
                if (m.rows() != rep->dim() || m.cols() != rep->dim()) throw FormatError("matrix has the wrong size");
                entries.emplace(std::move(gamma), std::move(m));
            }
            std::vector<MultiIndex> expected = canonical_Z(shape.size(), n);
            std::vector<MultiIndex> got;
            for (const auto& [gamma, m] : entries) got.push_back(gamma);
            std::sort(expected.begin(), expected.end());
            if (got != expected) throw FormatError("grade " + std::to_string(n) + " records do not cover the canonical set");
            if (n == 0) {
                // grade 0 is the identity, installed by the constructor
                if (entries != store->grade_entries(0)) throw FormatError("grade 0 must be the identity");
                continue;
            }
            store->install_grade(n, std::move(entries));
        }
        return store;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed store file: ") + e.what());
    }
}

}  // namespace vvjack
