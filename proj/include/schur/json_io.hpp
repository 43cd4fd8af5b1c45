#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "schur/apolarity.hpp"
#include "schur/ideals.hpp"
#include "schur/rank_analysis.hpp"

namespace schur {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Throws SchemaError carrying "source:line:column: message".
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
std::string dump(const Json& j);

Partition parse_partition_list(const std::string& text);
Rational rational_from_json(const Json& j);

Json to_json(const Rational& q);
Json to_json(const Partition& p);
Json to_json(const SkewShape& s);
Json to_json(const Tableau& t);
Json to_json(const AmbientElement& a);
Json to_json(const SkewAmbientElement& a);
Json to_json(const FlagPoint& f);
Json to_json(const RationalMatrix& m);
Json to_json(const LabeledVector& v);
Json to_json(const Sigma2Verdict& v);
Json to_json(const LowerBound& b);

Partition partition_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
AmbientElement ambient_from_json(const Json& j);
FlagPoint flag_point_from_json(const Json& j);
// Accepts a single point, an array of points, or {"points": [...]}.
std::vector<FlagPoint> points_from_json(const Json& j);

}  // namespace schur
