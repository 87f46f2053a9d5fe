#pragma once

#include "hyperkirch/graph.hpp"
#include "hyperkirch/lattice.hpp"
#include "hyperkirch/numeric.hpp"
#include "hyperkirch/poly.hpp"
#include "hyperkirch/stability.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hyperkirch::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input documents.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `{"vertices": [...], "edges": [{"id", "head", "tail"}, ...]}`.
Multigraph graph_from_json(const Json& doc);
Json graph_to_json(const Multigraph& g);
std::string graph_to_dot(const Multigraph& g);

/// Flat edge-id -> integer map; every edge must appear exactly once.
/// Values may be JSON integers or decimal strings.
std::vector<Integer> edge_values_from_json(const Json& doc, const Multigraph& g);
Json edge_values_to_json(const std::vector<Integer>& values, const Multigraph& g);

VertexVector vertex_values_from_json(const Json& doc, const Multigraph& g);
Json vertex_values_to_json(const VertexVector& values, const Multigraph& g);

/// Edge-id -> `"generic"` | `{"type": "segment"|"point", "n": int}`.
OrbitSpec orbit_spec_from_json(const Json& doc, const Multigraph& g);
Json char_box_to_json(const CharBox& box, const Multigraph& g);

/// List of `{"monomial": [edge ids], "coefficient": "c"}`, ordered by
/// degree and then by the positions of the variables.
Json poly_to_json(const MultilinearPoly& p);
Json matrix_to_json(const IntMatrix& m);

Json strata_to_json(const StrataComplex& s, const Multigraph& g);
std::string strata_to_dot(const StrataComplex& s, const Multigraph& g);

/// Parses `text` as JSON when it starts with '{' or '[', otherwise reads the
/// named file.
Json load_document(const std::string& text);

}  // namespace hyperkirch::io
