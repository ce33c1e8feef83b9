#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "distset/catalog.hpp"
#include "distset/certificates.hpp"
#include "distset/geometry.hpp"
#include "distset/invariants.hpp"

namespace distset {

// insertion-ordered JSON keeps reports byte-stable
using Json = nlohmann::ordered_json;

/// Exact text encoding: rational values render as "p/q" (or "p"); irrational
/// values as {"a": "p/q", "b": "p/q", "m": m}. parse(render(x)) == x.
Json quadext_to_json(const QuadExt& x);
QuadExt quadext_from_json(const Json& j);

/// Exact string plus a 12-significant-digit decimal for human reading.
Json quadext_report_value(const QuadExt& x);

using Configuration = std::variant<PointSet, SquaredDistanceMatrix>;

/// Shared configuration format:
/// {"kind": "points"|"sdm", "m": int, "d": int?, "data": [[...]], "labels"?}
Json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const Json& j);

Json catalog_entry_to_json(const CatalogEntry& e);

Json report_to_json(const InvariantReport& r);
std::string report_to_text(const InvariantReport& r);

Json certificate_to_json(const RankCertificate& c);

std::string format_significant(double v);  // 12 significant digits

}  // namespace distset
