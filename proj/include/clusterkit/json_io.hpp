#pragma once

#include <json.hpp>

#include "clusterkit/intmat.hpp"
#include "clusterkit/invariant.hpp"
#include "clusterkit/pattern.hpp"
#include "clusterkit/poly.hpp"
#include "clusterkit/polytope.hpp"
#include "clusterkit/tau.hpp"

namespace clusterkit {

using json = nlohmann::json;

// Integers round-trip as JSON numbers while they fit the double-safe range
// and as decimal strings beyond it; parsing accepts both forms.
json int_to_json(const Int& v);
Int int_from_json(const json& j, const std::string& where);

json to_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const json& j, const std::string& where);

/// {"B": [[..]], "D": [..]}; D is optional on input (canonical D is computed).
json to_json(const ExchangeMatrix& e);
ExchangeMatrix exchange_from_json(const json& j);

/// Laurent terms as {"x": [..], "y": [..], "c": int}; y-polynomials omit "x".
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j, const std::string& where);
json to_json(const YPolynomial& p);
YPolynomial ypoly_from_json(const json& j, const std::string& where);

json seed_to_json(const ClusterPattern& pattern, const Seed& s);
Seed seed_from_json(const ClusterPattern& pattern, const json& j);

json to_json(const LatticePolytope& p);

json to_json(const ClusterVariableId& id);
json to_json(const FInvariantReport& rep);

json to_json(const tau::Interval& m);
tau::Interval interval_from_json(const json& j, const std::string& where);
json to_json(const tau::DecoratedModule& m);
tau::DecoratedModule decorated_from_json(const json& j, const std::string& where);

json parse_json_text(const std::string& text);

}  // namespace clusterkit
