#include "hyperkirch/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hyperkirch::io {

namespace {

const Json& field(const Json& doc, const char* name) {
    if (!doc.is_object() || !doc.contains(name))
        throw InputError(std::string("missing field '") + name + "'");
    return doc.at(name);
}

std::string string_of(const Json& v, const char* what) {
    if (!v.is_string()) throw InputError(std::string(what) + " must be a string");
    return v.get<std::string>();
}

Integer integer_of(const Json& v, const std::string& what) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(static_cast<unsigned long>(v.get<std::uint64_t>()));
        return Integer(static_cast<long>(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
        try {
            return parse_integer(v.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw InputError(what + " must be an integer");
}

// Checks that the keys of an object are exactly `ids`.
void require_exact_keys(const Json& doc, const std::vector<std::string>& ids, const char* what) {
    if (!doc.is_object()) throw InputError(std::string(what) + " must be an object keyed by id");
    std::set<std::string> wanted(ids.begin(), ids.end());
    for (const auto& [key, value] : doc.items())
        if (!wanted.count(key)) throw InputError(std::string(what) + ": unknown id '" + key + "'");
    for (const auto& id : ids)
        if (!doc.contains(id)) throw InputError(std::string(what) + ": missing value for '" + id + "'");
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string vector_label(const std::vector<std::int64_t>& n) {
    std::string s = "(";
    for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    return s + ")";
}

}  // namespace

Multigraph graph_from_json(const Json& doc) {
    const Json& vs = field(doc, "vertices");
    const Json& es = field(doc, "edges");
    if (!vs.is_array() || !es.is_array()) throw InputError("'vertices' and 'edges' must be arrays");
    std::vector<std::string> vertices;
    for (const auto& v : vs) vertices.push_back(string_of(v, "vertex id"));
    std::vector<Multigraph::EdgeSpec> edges;
    for (const auto& e : es)
        edges.push_back({string_of(field(e, "id"), "edge id"), string_of(field(e, "head"), "edge head"),
                         string_of(field(e, "tail"), "edge tail")});
    try {
        return Multigraph(std::move(vertices), edges);
    } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
    }
}

Json graph_to_json(const Multigraph& g) {
    Json doc;
    doc["vertices"] = g.vertices();
    Json edges = Json::array();
    for (const auto& s : g.edge_specs()) edges.push_back({{"id", s.id}, {"head", s.head}, {"tail", s.tail}});
    doc["edges"] = std::move(edges);
    return doc;
}

std::string graph_to_dot(const Multigraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (const auto& v : g.vertices()) out << "  " << quote(v) << ";\n";
    for (const auto& e : g.edges())
        out << "  " << quote(g.vertex(e.tail)) << " -> " << quote(g.vertex(e.head)) << " [label=" << quote(e.id)
            << "];\n";
    out << "}\n";
    return out.str();
}

std::vector<Integer> edge_values_from_json(const Json& doc, const Multigraph& g) {
    require_exact_keys(doc, g.edge_ids(), "edge map");
    std::vector<Integer> out;
    for (const auto& e : g.edges()) out.push_back(integer_of(doc.at(e.id), "value of edge '" + e.id + "'"));
    return out;
}

Json edge_values_to_json(const std::vector<Integer>& values, const Multigraph& g) {
    Json doc = Json::object();
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        if (values.at(i).fits_slong_p())
            doc[g.edge(i).id] = values[i].get_si();
        else
            doc[g.edge(i).id] = to_string(values[i]);
    }
    return doc;
}

VertexVector vertex_values_from_json(const Json& doc, const Multigraph& g) {
    require_exact_keys(doc, g.vertices(), "vertex map");
    VertexVector out;
    for (const auto& v : g.vertices()) {
        const Integer z = integer_of(doc.at(v), "value of vertex '" + v + "'");
        if (!z.fits_slong_p()) throw InputError("value of vertex '" + v + "' out of range");
        out.values.push_back(z.get_si());
    }
    return out;
}

Json vertex_values_to_json(const VertexVector& values, const Multigraph& g) {
    Json doc = Json::object();
    for (std::size_t i = 0; i < g.num_vertices(); ++i) doc[g.vertex(i)] = values.values.at(i);
    return doc;
}

OrbitSpec orbit_spec_from_json(const Json& doc, const Multigraph& g) {
    require_exact_keys(doc, g.edge_ids(), "orbit spec");
    OrbitSpec spec;
    for (const auto& e : g.edges()) {
        const Json& v = doc.at(e.id);
        if (v.is_string() && v.get<std::string>() == "generic") {
            spec.push_back(OrbitType::generic());
            continue;
        }
        const std::string type = string_of(field(v, "type"), "orbit type");
        const Integer n = integer_of(field(v, "n"), "orbit index of '" + e.id + "'");
        if (!n.fits_slong_p()) throw InputError("orbit index of '" + e.id + "' out of range");
        if (type == "segment")
            spec.push_back(OrbitType::segment(n.get_si()));
        else if (type == "point")
            spec.push_back(OrbitType::point(n.get_si()));
        else if (type == "generic")
            spec.push_back(OrbitType::generic());
        else
            throw InputError("unknown orbit type '" + type + "'");
    }
    return spec;
}

Json char_box_to_json(const CharBox& box, const Multigraph& g) {
    Json doc = Json::object();
    for (std::size_t i = 0; i < box.size(); ++i) {
        const auto& c = box[i];
        switch (c.kind) {
            case CharSet::Kind::all_integers: doc[g.edge(i).id] = "Z"; break;
            case CharSet::Kind::interval: doc[g.edge(i).id] = Json::array({c.lo, c.hi}); break;
            case CharSet::Kind::singleton: doc[g.edge(i).id] = Json::array({c.lo}); break;
        }
    }
    return doc;
}

Json poly_to_json(const MultilinearPoly& p) {
    std::vector<std::pair<std::vector<std::size_t>, Integer>> terms;
    for (const auto& [mono, c] : p.terms()) terms.emplace_back(mono.indices(), c);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    Json out = Json::array();
    for (const auto& [idx, c] : terms) {
        Json names = Json::array();
        for (auto i : idx) names.push_back(p.variables()[i]);
        out.push_back({{"monomial", std::move(names)}, {"coefficient", to_string(c)}});
    }
    return out;
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json strata_to_json(const StrataComplex& s, const Multigraph& g) {
    Json doc;
    doc["N"] = s.N;
    doc["edges"] = g.edge_ids();
    doc["lattice_rank"] = s.lattice_rank;
    Json nodes = Json::array();
    for (const auto& node : s.nodes) {
        Json ranges = Json::array();
        for (auto [lo, hi] : node.char_range) ranges.push_back(Json::array({lo, hi}));
        nodes.push_back({{"n", node.n}, {"char_range", std::move(ranges)}});
    }
    doc["nodes"] = std::move(nodes);
    Json adj = Json::array();
    for (const auto& a : s.adjacency) adj.push_back({{"from", a.from}, {"to", a.to}, {"neighbour", a.neighbour}});
    doc["adjacency"] = std::move(adj);
    doc["node_count"] = s.nodes.size();
    doc["adjacency_count"] = s.adjacency.size();
    doc["connected"] = s.connected;
    return doc;
}

std::string strata_to_dot(const StrataComplex& s, const Multigraph& g) {
    std::ostringstream out;
    out << "graph strata {\n";
    out << "  // edges: ";
    for (std::size_t i = 0; i < g.num_edges(); ++i) out << (i ? "," : "") << g.edge(i).id;
    out << "; N = " << s.N << "\n";
    for (std::size_t i = 0; i < s.nodes.size(); ++i)
        out << "  n" << i << " [label=" << quote(vector_label(s.nodes[i].n)) << "];\n";
    for (const auto& a : s.adjacency)
        out << "  n" << a.from << " -- n" << a.to << " [label=" << quote(vector_label(a.neighbour)) << "];\n";
    out << "}\n";
    return out.str();
}

Json load_document(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return Json::parse(text);
        std::ifstream in(text);
        if (!in) throw InputError("cannot open '" + text + "'");
        return Json::parse(in);
    } catch (const Json::parse_error& err) {
        throw InputError(std::string("malformed JSON: ") + err.what());
    }
}

}  // namespace hyperkirch::io
