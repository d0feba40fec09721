// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <nlohmann/json.hpp>
#include <vector>

#include "cdlab/bounds.hpp"
#include "cdlab/dilates.hpp"
#include "cdlab/image.hpp"
#include "cdlab/index_set.hpp"
#include "cdlab/matrix.hpp"
#include "cdlab/poly.hpp"

namespace cdlab {

using Json = nlohmann::ordered_json;

// Readers throw Error(InvalidInput) on schema violations.

/// {"p", "rows", "cols", "entries"} with entries in [0, p).
FpMatrix matrix_from_json(const Json& j);
Json to_json(const FpMatrix& m);

/// {"p", "sets"}.
SetSystem set_system_from_json(const Json& j);
Json to_json(const SetSystem& a);

/// {"p", "vars", "terms": [{"exp", "coef"}]}.
SparsePoly poly_from_json(const Json& j);
Json to_json(const SparsePoly& f);

/// Sorted 1-based index array.
Json to_json(IndexSet s);
IndexSet index_set_from_json(const Json& j);
Json to_json(const std::vector<IndexSet>& family);

/// Exact integers up to 64 bits, decimal strings beyond.
Json to_json(const BigInt& v);

Json to_json(const BoundCertificate& c);
Json to_json(const ImageResult& r);
Json to_json(const ExtremalResult& r);
Json summary_json(const Section4Report& r);

/// Parses text, mapping syntax errors to InvalidInput.
Json parse_json(const std::string& text);

}  // namespace cdlab
