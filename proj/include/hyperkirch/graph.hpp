#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyperkirch {

struct Edge {
    std::string id;
    std::size_t head;  // vertex index
    std::size_t tail;  // vertex index

    bool is_loop() const { return head == tail; }
    bool operator==(const Edge&) const = default;
};

/// Finite oriented multigraph. Loops and parallel edges are allowed.
///
/// Vertices and edges carry string ids; every operation also works with the
/// positional indices, which follow the insertion order of the input lists.
/// Instances are immutable once constructed.
class Multigraph {
public:
    struct EdgeSpec {
        std::string id;
        std::string head;
        std::string tail;
    };

    Multigraph() = default;

    /// Throws std::invalid_argument on duplicate ids or unknown endpoints.
    Multigraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    const std::string& vertex(std::size_t i) const { return vertices_.at(i); }

    std::optional<std::size_t> find_edge(const std::string& id) const;
    std::optional<std::size_t> find_vertex(const std::string& id) const;
    /// Throws std::invalid_argument for unknown ids.
    std::size_t edge_index(const std::string& id) const;
    std::size_t vertex_index(const std::string& id) const;

    std::vector<std::string> edge_ids() const;
    std::vector<EdgeSpec> edge_specs() const;

    bool operator==(const Multigraph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> vertex_pos_;
    std::unordered_map<std::string, std::size_t> edge_pos_;
};

/// Chain or cochain on edges, aligned with Multigraph::edges().
struct EdgeVector {
    std::vector<std::int64_t> values;
    bool operator==(const EdgeVector&) const = default;
};

/// Chain on vertices, aligned with Multigraph::vertices().
struct VertexVector {
    std::vector<std::int64_t> values;
    bool operator==(const VertexVector&) const = default;
};

enum class EdgeKind { loop, bridge, ordinary };

const char* to_string(EdgeKind kind);

Multigraph delete_edge(const Multigraph& g, const std::string& edge_id);

/// Identifies the endpoints of the edge and removes it. The merged vertex keeps
/// the id of whichever endpoint comes first in the vertex list.
/// Contracting a loop is rejected with std::invalid_argument.
Multigraph contract_edge(const Multigraph& g, const std::string& edge_id);

EdgeKind classify_edge(const Multigraph& g, const std::string& edge_id);
EdgeKind classify_edge(const Multigraph& g, std::size_t edge);

/// Component label per vertex, labels numbered by first appearance.
std::vector<std::size_t> component_labels(const Multigraph& g);
std::size_t num_components(const Multigraph& g);

/// |E| - |V| + #components.
std::size_t betti1(const Multigraph& g);

using EdgeSubset = std::vector<std::size_t>;

/// Every maximal spanning forest, as sorted edge-index lists, in
/// lexicographic order. Throws BudgetExceeded when more than `budget`
/// candidate subsets would have to be inspected.
std::vector<EdgeSubset> spanning_forests(const Multigraph& g, std::uint64_t budget = UINT64_MAX);

/// Greedy forest in edge order: each edge is taken when it joins two
/// different trees.
EdgeSubset default_spanning_forest(const Multigraph& g);

/// Fundamental cycles of the given maximal spanning forest, one per non-forest
/// edge (in edge order). The non-forest edge carries +1; forest edges carry
/// +1 when traversed tail to head on the way back from the head of the
/// non-forest edge to its tail, -1 otherwise.
std::vector<EdgeVector> cycle_basis(const Multigraph& g, const EdgeSubset& forest);
std::vector<EdgeVector> cycle_basis(const Multigraph& g);

/// d(e) = [head(e)] - [tail(e)], extended linearly.
VertexVector boundary(const Multigraph& g, const EdgeVector& chain);

/// Subdivides each edge e into n_e edges. New vertices and edges are named
/// "<edge id>#1", "<edge id>#2", ... and the path runs from the original tail
/// to the original head.
Multigraph fragment(const Multigraph& g, const std::vector<std::int64_t>& pieces);

/// Disjoint union; ids of the second graph are prefixed to keep them unique.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b, const std::string& prefix = "b.");

/// Same graph with the listed edges reversed.
Multigraph reverse_edges(const Multigraph& g, const std::vector<std::size_t>& edges);

namespace graphs {

Multigraph single_loop();
/// N vertices, N edges v_i -> v_{i+1 mod N}; N = 1 gives the single loop.
Multigraph cycle(std::size_t n);
/// Two vertices u, v and k parallel edges e1..ek oriented u -> v.
Multigraph banana(std::size_t k);
inline Multigraph theta() { return banana(3); }
/// Path on n vertices v0 - v1 - ... oriented v_i -> v_{i+1}.
Multigraph path(std::size_t n);

}  // namespace graphs

}  // namespace hyperkirch
