#include "zoo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hktest {

using hyperkirch::canonical_form;

const std::vector<Skeleton>& skeletons_up_to(std::size_t max_edges) {
    static std::map<std::size_t, std::vector<Skeleton>> cache;
    auto it = cache.find(max_edges);
    if (it != cache.end()) return it->second;

    std::vector<Skeleton> all{Skeleton{1, {}}};
    std::vector<Skeleton> level{Skeleton{0, {}}};
    for (std::size_t m = 1; m <= max_edges; ++m) {
        std::set<Skeleton> next;
        auto add = [&](Skeleton s, std::size_t a, std::size_t b) {
            s.ends.emplace_back(std::min(a, b), std::max(a, b));
            s.num_vertices = std::max(s.num_vertices, std::max(a, b) + 1);
            const auto c = canonical_form(s, true, 1U << 30);
            next.insert(c.form);
        };
        for (const auto& s : level) {
            const std::size_t n = s.num_vertices;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a; b < n; ++b) add(s, a, b);
            for (std::size_t a = 0; a < n; ++a) add(s, a, n);
            add(s, n, n);
            add(s, n, n + 1);
        }
        level.assign(next.begin(), next.end());
        all.insert(all.end(), level.begin(), level.end());
    }
    return cache.emplace(max_edges, std::move(all)).first->second;
}

Multigraph to_graph(const Skeleton& s, std::mt19937_64* rng) {
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < s.num_vertices; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<Multigraph::EdgeSpec> edges;
    for (std::size_t i = 0; i < s.ends.size(); ++i) {
        auto [a, b] = s.ends[i];
        if (rng && ((*rng)() & 1)) std::swap(a, b);
        edges.push_back({"e" + std::to_string(i + 1), vertices[b], vertices[a]});
    }
    return Multigraph(vertices, edges);
}

std::vector<Multigraph> zoo(std::size_t max_edges, bool connected_only) {
    std::vector<Multigraph> out;
    for (const auto& s : skeletons_up_to(max_edges)) {
        Multigraph g = to_graph(s);
        if (!connected_only || connected(g)) out.push_back(std::move(g));
    }
    return out;
}

Multigraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t edges) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<Multigraph::EdgeSpec> es;
    for (std::size_t i = 0; i < edges; ++i)
        es.push_back({"e" + std::to_string(i + 1), vertices[pick(rng)], vertices[pick(rng)]});
    return Multigraph(vertices, es);
}

Multigraph shuffled(const Multigraph& g, std::mt19937_64& rng) {
    std::vector<std::size_t> vperm(g.num_vertices()), eperm(g.num_edges());
    std::iota(vperm.begin(), vperm.end(), 0);
    std::iota(eperm.begin(), eperm.end(), 0);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::shuffle(eperm.begin(), eperm.end(), rng);
    std::vector<std::string> vertices(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) vertices[vperm[v]] = "w" + std::to_string(v);
    std::vector<Multigraph::EdgeSpec> es(g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const auto& e = g.edge(i);
        es[eperm[i]] = {"f" + std::to_string(i), vertices[vperm[e.head]], vertices[vperm[e.tail]]};
    }
    return Multigraph(vertices, es);
}

std::vector<Integer> random_integers(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(d(rng));
    return out;
}

namespace {

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const Multigraph& g,
                                                                       const std::vector<std::size_t>& edges) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.num_vertices());
    for (auto i : edges) {
        const auto& e = g.edge(i);
        adj[e.head].emplace_back(e.tail, i);
        adj[e.tail].emplace_back(e.head, i);
    }
    return adj;
}

// Depth-first search; returns the number of trees and flags a cycle when an
// edge other than the one we arrived by reaches a visited vertex.
std::size_t explore(const Multigraph& g, const std::vector<std::size_t>& edges, bool& cyclic) {
    const auto adj = adjacency(g, edges);
    std::vector<int> seen(g.num_vertices(), 0);
    std::size_t trees = 0;
    cyclic = false;
    for (std::size_t root = 0; root < g.num_vertices(); ++root) {
        if (seen[root]) continue;
        ++trees;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, SIZE_MAX}};
        seen[root] = 1;
        while (!stack.empty()) {
            const auto [v, via] = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : adj[v]) {
                if (e == via) continue;
                if (seen[w]) {
                    cyclic = true;
                    continue;
                }
                seen[w] = 1;
                stack.emplace_back(w, e);
            }
        }
    }
    return trees;
}

}  // namespace

bool connected(const Multigraph& g) {
    std::vector<std::size_t> all(g.num_edges());
    std::iota(all.begin(), all.end(), 0);
    bool cyclic = false;
    return explore(g, all, cyclic) <= 1;
}

std::vector<std::vector<std::size_t>> brute_force_forests(const Multigraph& g) {
    std::vector<std::size_t> all(g.num_edges());
    std::iota(all.begin(), all.end(), 0);
    bool cyclic = false;
    const std::size_t components = explore(g, all, cyclic);
    const std::size_t size = g.num_vertices() - components;
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_edges()); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < g.num_edges(); ++i)
            if (mask >> i & 1) subset.push_back(i);
        if (subset.size() != size) continue;
        explore(g, subset, cyclic);
        if (!cyclic) out.push_back(subset);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool brute_force_isomorphic(const Skeleton& a, const Skeleton& b) {
    if (a.num_vertices != b.num_vertices || a.ends.size() != b.ends.size()) return false;
    std::vector<std::pair<std::size_t, std::size_t>> target = b.ends;
    std::sort(target.begin(), target.end());
    std::vector<std::size_t> perm(a.num_vertices);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::pair<std::size_t, std::size_t>> mapped;
        for (auto [x, y] : a.ends) mapped.emplace_back(std::min(perm[x], perm[y]), std::max(perm[x], perm[y]));
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace hktest
