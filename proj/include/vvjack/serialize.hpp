#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vvjack/cesaro.hpp"
#include "vvjack/coeff_store.hpp"
#include "vvjack/diff_system.hpp"
#include "vvjack/laurent.hpp"
#include "vvjack/tableau.hpp"
#include "vvjack/yb_graph.hpp"

namespace vvjack {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(ComplexScalar z);
Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);
Json to_json(const ComplexMatrix& m);
Json to_json(const Permutation& w);
Json to_json(const Rsyt& t);
Json to_json(const Partition& p);
Json to_json(const VVLaurent& f);
Json to_json(const TorusPoint& x);

/// Basis tableaux in their internal order.
Json basis_json(const Representation& rep);
/// {alpha, tableau, spectral, poly}
Json node_json(const GraphNode& node, const Representation& rep);
/// {basis: [[alpha, tableau-index], ...], matrix}
Json gram_json(const std::vector<std::pair<MultiIndex, std::size_t>>& nodes, const RationalMatrix& gram);
Json kernel_report_json(const KernelReport& r, const Partition& shape, const Rational& kappa);
Json path_report_json(const PathReport& r);

/// Header {N, shape, kappa, sealed_grade, basis_order} and grade records.
Json store_json(const CoeffStore& store);
/// Rebuilds a store; the header must match a fresh Representation of the
/// shape. Throws FormatError on malformed input.
std::unique_ptr<CoeffStore> load_store(const Json& j, StoreOptions options = {});

}  // namespace vvjack
