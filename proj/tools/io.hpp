#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "oort/discgeom.hpp"
#include "oort/hurwitz.hpp"
#include "oort/kgb.hpp"
#include "oort/lifting.hpp"
#include "oort/ramification.hpp"

namespace oort::cli {

using nlohmann::json;

/// Malformed input: bad JSON, wrong schema, unparseable fields.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kSchema = 1;

json load_json(const std::string& path_or_text);
void require_schema(const json& j);

json rational_json(const Rational& q);
Rational json_rational(const json& j);

RamFiltration filtration_from_json(const json& j);

/// Integer, symbol, + - * / ^ and parentheses, with juxtaposition as multiplication.
PadicElement parse_padic(const std::string& text, const RingPtr& R, const std::map<std::string, PadicElement>& symbols);

json certificate_json(const DifferentCertificate& c);
json branch_table_json(const std::vector<BranchRow>& rows);
/// Rows [order of H, deg R_X, deg R_Y]; deg R_X is null without a witness.
json kgb_json(const std::vector<KgbRow>& table);
json kgb_subgroups_json(const FiniteGroup& G, const std::vector<KgbRow>& table);
json bcd_json(const FiniteGroup& G, const BranchCycleDescription& b);

json hurwitz_to_json(const HurwitzTree& t);
HurwitzTree hurwitz_from_json(const json& j);

json cluster_tree_json(const ClusterTree& t);
ClusterTree cluster_tree_from_json(const json& j, int precision_override);

struct DepthInput {
    CyclotomicRing ring;
    ValuedLaurentPoly f;
};
DepthInput depth_input_from_json(const json& j, int precision_override);

}  // namespace oort::cli
