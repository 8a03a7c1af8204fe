#pragma once

#include <json.hpp>

#include <string>

#include "orderlab/matrix.hpp"

namespace orderlab {

using Json = nlohmann::json;

/// {"n": 3, "rows": [["1","2","0"], ...]} with entries as decimal strings,
/// optionally "p/q". Round-trips bit-exactly through canonical form.
Json matrixToJson(const SquareMatrix& m);
SquareMatrix matrixFromJson(const Json& j);

Json elementaryToJson(const ElementaryMatrix& e);
ElementaryMatrix elementaryFromJson(const Json& j, int n);

}  // namespace orderlab
