#include "hyperkirch/graph.hpp"

#include "hyperkirch/numeric.hpp"
#include "union_find.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyperkirch {

Multigraph::Multigraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_pos_.emplace(vertices_[i], i).second)
            throw std::invalid_argument("duplicate vertex id '" + vertices_[i] + "'");
    }
    edges_.reserve(edges.size());
    for (const auto& spec : edges) {
        auto h = vertex_pos_.find(spec.head);
        auto t = vertex_pos_.find(spec.tail);
        if (h == vertex_pos_.end())
            throw std::invalid_argument("edge '" + spec.id + "' has unknown head '" + spec.head + "'");
        if (t == vertex_pos_.end())
            throw std::invalid_argument("edge '" + spec.id + "' has unknown tail '" + spec.tail + "'");
        if (!edge_pos_.emplace(spec.id, edges_.size()).second)
            throw std::invalid_argument("duplicate edge id '" + spec.id + "'");
        edges_.push_back(Edge{spec.id, h->second, t->second});
    }
}

std::optional<std::size_t> Multigraph::find_edge(const std::string& id) const {
    auto it = edge_pos_.find(id);
    if (it == edge_pos_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Multigraph::find_vertex(const std::string& id) const {
    auto it = vertex_pos_.find(id);
    if (it == vertex_pos_.end()) return std::nullopt;
    return it->second;
}

std::size_t Multigraph::edge_index(const std::string& id) const {
    if (auto i = find_edge(id)) return *i;
    throw std::invalid_argument("unknown edge id '" + id + "'");
}

std::size_t Multigraph::vertex_index(const std::string& id) const {
    if (auto i = find_vertex(id)) return *i;
    throw std::invalid_argument("unknown vertex id '" + id + "'");
}

std::vector<std::string> Multigraph::edge_ids() const {
    std::vector<std::string> ids;
    ids.reserve(edges_.size());
    for (const auto& e : edges_) ids.push_back(e.id);
    return ids;
}

std::vector<Multigraph::EdgeSpec> Multigraph::edge_specs() const {
    std::vector<EdgeSpec> specs;
    specs.reserve(edges_.size());
    for (const auto& e : edges_) specs.push_back({e.id, vertices_[e.head], vertices_[e.tail]});
    return specs;
}

const char* to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::loop: return "loop";
        case EdgeKind::bridge: return "bridge";
        case EdgeKind::ordinary: return "ordinary";
    }
    return "?";
}

Multigraph delete_edge(const Multigraph& g, const std::string& edge_id) {
    const std::size_t idx = g.edge_index(edge_id);
    auto specs = g.edge_specs();
    specs.erase(specs.begin() + static_cast<std::ptrdiff_t>(idx));
    return Multigraph(g.vertices(), specs);
}

Multigraph contract_edge(const Multigraph& g, const std::string& edge_id) {
    const std::size_t idx = g.edge_index(edge_id);
    const Edge& e = g.edge(idx);
    if (e.is_loop()) throw std::invalid_argument("cannot contract loop '" + edge_id + "'");
    const std::size_t keep = std::min(e.head, e.tail);
    const std::size_t drop = std::max(e.head, e.tail);
    const std::string& keep_id = g.vertex(keep);
    const std::string& drop_id = g.vertex(drop);

    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (v != drop) vertices.push_back(g.vertex(v));
    std::vector<Multigraph::EdgeSpec> specs;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        if (i == idx) continue;
        auto spec = Multigraph::EdgeSpec{g.edge(i).id, g.vertex(g.edge(i).head), g.vertex(g.edge(i).tail)};
        if (spec.head == drop_id) spec.head = keep_id;
        if (spec.tail == drop_id) spec.tail = keep_id;
        specs.push_back(std::move(spec));
    }
    return Multigraph(std::move(vertices), specs);
}

std::vector<std::size_t> component_labels(const Multigraph& g) {
    detail::UnionFind uf(g.num_vertices());
    for (const auto& e : g.edges()) uf.unite(e.head, e.tail);
    std::vector<std::size_t> label(g.num_vertices());
    std::vector<std::size_t> root_label(g.num_vertices(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const std::size_t r = uf.find(v);
        if (root_label[r] == SIZE_MAX) root_label[r] = next++;
        label[v] = root_label[r];
    }
    return label;
}

std::size_t num_components(const Multigraph& g) {
    detail::UnionFind uf(g.num_vertices());
    for (const auto& e : g.edges()) uf.unite(e.head, e.tail);
    return uf.components();
}

std::size_t betti1(const Multigraph& g) {
    return g.num_edges() + num_components(g) - g.num_vertices();
}

EdgeKind classify_edge(const Multigraph& g, std::size_t edge) {
    const Edge& target = g.edges().at(edge);
    if (target.is_loop()) return EdgeKind::loop;
    detail::UnionFind uf(g.num_vertices());
    for (std::size_t i = 0; i < g.num_edges(); ++i)
        if (i != edge) uf.unite(g.edge(i).head, g.edge(i).tail);
    return uf.same(target.head, target.tail) ? EdgeKind::ordinary : EdgeKind::bridge;
}

EdgeKind classify_edge(const Multigraph& g, const std::string& edge_id) {
    return classify_edge(g, g.edge_index(edge_id));
}

namespace {

// Number of r-subsets of n, saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::vector<EdgeSubset> spanning_forests(const Multigraph& g, std::uint64_t budget) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < g.num_edges(); ++i)
        if (!g.edge(i).is_loop()) candidates.push_back(i);
    const std::size_t rank = g.num_vertices() - num_components(g);
    if (binomial_saturating(candidates.size(), rank) > budget)
        throw BudgetExceeded("spanning forest enumeration exceeds budget");

    std::vector<EdgeSubset> out;
    std::vector<std::size_t> pick(rank);
    std::iota(pick.begin(), pick.end(), 0);
    if (rank > candidates.size()) return out;
    while (true) {
        detail::UnionFind uf(g.num_vertices());
        bool acyclic = true;
        for (std::size_t j : pick) {
            const Edge& e = g.edge(candidates[j]);
            if (!uf.unite(e.head, e.tail)) {
                acyclic = false;
                break;
            }
        }
        if (acyclic) {
            EdgeSubset forest;
            for (std::size_t j : pick) forest.push_back(candidates[j]);
            out.push_back(std::move(forest));
        }
        // next combination
        std::size_t k = rank;
        while (k > 0 && pick[k - 1] == candidates.size() - rank + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < rank; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

EdgeSubset default_spanning_forest(const Multigraph& g) {
    detail::UnionFind uf(g.num_vertices());
    EdgeSubset forest;
    for (std::size_t i = 0; i < g.num_edges(); ++i)
        if (uf.unite(g.edge(i).head, g.edge(i).tail)) forest.push_back(i);
    return forest;
}

std::vector<EdgeVector> cycle_basis(const Multigraph& g, const EdgeSubset& forest) {
    const std::size_t nv = g.num_vertices();
    std::vector<bool> in_forest(g.num_edges(), false);
    detail::UnionFind uf(nv);
    for (std::size_t i : forest) {
        if (i >= g.num_edges()) throw std::invalid_argument("forest edge index out of range");
        if (in_forest[i]) throw std::invalid_argument("forest lists an edge twice");
        if (!uf.unite(g.edge(i).head, g.edge(i).tail))
            throw std::invalid_argument("forest contains a cycle");
        in_forest[i] = true;
    }
    if (forest.size() != nv - num_components(g))
        throw std::invalid_argument("forest is not maximal");

    // Root every tree; parent_edge[v] is the forest edge towards the root.
    std::vector<std::vector<std::size_t>> incident(nv);
    for (std::size_t i : forest) {
        incident[g.edge(i).head].push_back(i);
        incident[g.edge(i).tail].push_back(i);
    }
    std::vector<std::size_t> parent_edge(nv, SIZE_MAX), depth(nv, 0);
    std::vector<bool> seen(nv, false);
    for (std::size_t root = 0; root < nv; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t i : incident[v]) {
                const Edge& e = g.edge(i);
                const std::size_t w = e.head == v ? e.tail : e.head;
                if (seen[w]) continue;
                seen[w] = true;
                parent_edge[w] = i;
                depth[w] = depth[v] + 1;
                stack.push_back(w);
            }
        }
    }

    auto step_up = [&](std::size_t v, EdgeVector& c, std::int64_t walking_sign) {
        // walking from v to its parent along parent_edge[v]
        const std::size_t i = parent_edge[v];
        const Edge& e = g.edge(i);
        const bool forward = e.tail == v;  // tail -> head direction
        c.values[i] += walking_sign * (forward ? 1 : -1);
        return forward ? e.head : e.tail;
    };

    std::vector<EdgeVector> basis;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        if (in_forest[i]) continue;
        EdgeVector c{std::vector<std::int64_t>(g.num_edges(), 0)};
        c.values[i] = 1;
        // walk head(i) -> tail(i) through the tree: up from head to the
        // common ancestor forwards, then the tail's climb reversed.
        std::size_t a = g.edge(i).head;
        std::size_t b = g.edge(i).tail;
        while (depth[a] > depth[b]) a = step_up(a, c, +1);
        while (depth[b] > depth[a]) b = step_up(b, c, -1);
        while (a != b) {
            a = step_up(a, c, +1);
            b = step_up(b, c, -1);
        }
        basis.push_back(std::move(c));
    }
    return basis;
}

std::vector<EdgeVector> cycle_basis(const Multigraph& g) {
    return cycle_basis(g, default_spanning_forest(g));
}

VertexVector boundary(const Multigraph& g, const EdgeVector& chain) {
    if (chain.values.size() != g.num_edges())
        throw std::invalid_argument("edge vector length does not match the graph");
    VertexVector out{std::vector<std::int64_t>(g.num_vertices(), 0)};
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        out.values[g.edge(i).head] += chain.values[i];
        out.values[g.edge(i).tail] -= chain.values[i];
    }
    return out;
}

Multigraph fragment(const Multigraph& g, const std::vector<std::int64_t>& pieces) {
    if (pieces.size() != g.num_edges())
        throw std::invalid_argument("fragmentation vector length does not match the graph");
    std::vector<std::string> vertices = g.vertices();
    std::vector<Multigraph::EdgeSpec> specs;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        const std::int64_t n = pieces[i];
        if (n < 1) throw std::invalid_argument("fragmentation of '" + e.id + "' must be positive");
        if (n == 1) {
            specs.push_back({e.id, g.vertex(e.head), g.vertex(e.tail)});
            continue;
        }
        std::string prev = g.vertex(e.tail);
        for (std::int64_t j = 1; j <= n; ++j) {
            std::string next;
            if (j == n) {
                next = g.vertex(e.head);
            } else {
                next = e.id + "#" + std::to_string(j);
                vertices.push_back(next);
            }
            specs.push_back({e.id + "#" + std::to_string(j), next, prev});
            prev = next;
        }
    }
    return Multigraph(std::move(vertices), specs);
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b, const std::string& prefix) {
    std::vector<std::string> vertices = a.vertices();
    for (const auto& v : b.vertices()) vertices.push_back(prefix + v);
    auto specs = a.edge_specs();
    for (auto s : b.edge_specs()) specs.push_back({prefix + s.id, prefix + s.head, prefix + s.tail});
    return Multigraph(std::move(vertices), specs);
}

Multigraph reverse_edges(const Multigraph& g, const std::vector<std::size_t>& edges) {
    auto specs = g.edge_specs();
    for (std::size_t i : edges) std::swap(specs.at(i).head, specs.at(i).tail);
    return Multigraph(g.vertices(), specs);
}

namespace graphs {

Multigraph single_loop() { return cycle(1); }

Multigraph cycle(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cycle needs at least one vertex");
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
    std::vector<Multigraph::EdgeSpec> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({"e" + std::to_string(i + 1), vertices[(i + 1) % n], vertices[i]});
    return Multigraph(vertices, edges);
}

Multigraph banana(std::size_t k) {
    std::vector<Multigraph::EdgeSpec> edges;
    for (std::size_t i = 1; i <= k; ++i) edges.push_back({"e" + std::to_string(i), "v", "u"});
    return Multigraph({"u", "v"}, edges);
}

Multigraph path(std::size_t n) {
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
    std::vector<Multigraph::EdgeSpec> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back({"e" + std::to_string(i + 1), vertices[i + 1], vertices[i]});
    return Multigraph(vertices, edges);
}

}  // namespace graphs

}  // namespace hyperkirch
