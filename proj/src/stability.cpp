#include "hyperkirch/stability.hpp"

#include "max_flow.hpp"
#include "union_find.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace hyperkirch {

StabilityParam StabilityParam::make(const Multigraph& g, VertexVector eta, std::int64_t N) {
    if (eta.values.size() != g.num_vertices()) throw DomainError("eta length does not match the graph");
    std::int64_t sum = 0;
    for (auto v : eta.values) sum += v;
    if (sum != 0) throw DomainError("eta must sum to zero");
    if (N < 1) throw DomainError("N must be at least 1");
    return StabilityParam{std::move(eta), N};
}

const char* to_string(DeltaPosition p) {
    switch (p) {
        case DeltaPosition::outside: return "outside";
        case DeltaPosition::boundary: return "boundary";
        case DeltaPosition::interior: return "interior";
    }
    return "?";
}

DeltaPosition delta_membership(const Integer& k, const Integer& m, std::int64_t N) {
    if (N < 1) throw DomainError("N must be at least 1");
    const Integer big_n(static_cast<long>(N));
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), m.get_mpz_t(), big_n.get_mpz_t());
    const Integer edge = big_n * (n * n + n) / 2 + big_n + (n + 1) * (m - big_n * n);
    if (k == edge) return DeltaPosition::boundary;
    return k > edge ? DeltaPosition::interior : DeltaPosition::outside;
}

CharBox orbit_char_set(const OrbitSpec& spec, std::int64_t N) {
    if (N < 1) throw DomainError("N must be at least 1");
    CharBox box;
    box.reserve(spec.size());
    for (const auto& s : spec) {
        switch (s.kind) {
            case OrbitKind::generic: box.push_back({CharSet::Kind::all_integers, 0, 0}); break;
            case OrbitKind::segment: box.push_back({CharSet::Kind::interval, N * s.n, N * (s.n + 1)}); break;
            case OrbitKind::point: box.push_back({CharSet::Kind::singleton, N * s.n, N * s.n}); break;
        }
    }
    return box;
}

std::vector<EdgeBounds> bounds_of(const CharBox& box) {
    std::vector<EdgeBounds> out;
    out.reserve(box.size());
    for (const auto& c : box) {
        if (c.kind == CharSet::Kind::all_integers)
            out.push_back({});
        else
            out.push_back({c.lo, c.hi});
    }
    return out;
}

bool has_chain_in_box(const Multigraph& g, const VertexVector& eta, const std::vector<EdgeBounds>& bounds) {
    if (bounds.size() != g.num_edges()) throw std::invalid_argument("bounds length does not match the graph");
    if (eta.values.size() != g.num_vertices()) throw std::invalid_argument("eta length does not match the graph");
    const std::size_t nv = g.num_vertices();

    // Shift c = base + x so that every finite bound becomes x >= 0.
    // need[v]: required net inflow of x at v.
    std::vector<std::int64_t> need(nv);
    for (std::size_t v = 0; v < nv; ++v) need[v] = -eta.values[v];
    struct Arc {
        std::size_t from, to;
        std::optional<std::int64_t> cap;  // nullopt = unbounded
    };
    std::vector<Arc> arcs;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& b = bounds[e];
        if (b.lo && b.hi && *b.lo > *b.hi) return false;
        const Edge& edge = g.edge(e);
        if (edge.is_loop()) continue;
        std::int64_t base = 0;
        if (b.lo) {
            base = *b.lo;
            arcs.push_back({edge.tail, edge.head, b.hi ? std::optional(*b.hi - *b.lo) : std::nullopt});
        } else if (b.hi) {
            base = *b.hi;  // c = hi - x, x flows head -> tail
            arcs.push_back({edge.head, edge.tail, std::nullopt});
        } else {
            arcs.push_back({edge.tail, edge.head, std::nullopt});
            arcs.push_back({edge.head, edge.tail, std::nullopt});
        }
        need[edge.head] -= base;
        need[edge.tail] += base;
    }
    std::int64_t demand = 0, supply = 0;
    for (auto n : need) (n > 0 ? demand : supply) += n > 0 ? n : -n;
    if (demand != supply) return false;
    if (demand == 0) return true;

    const std::size_t source = nv, sink = nv + 1;
    detail::MaxFlow flow(nv + 2);
    const std::int64_t unbounded = demand + 1;
    for (const auto& a : arcs) flow.add_arc(a.from, a.to, a.cap ? *a.cap : unbounded);
    for (std::size_t v = 0; v < nv; ++v) {
        if (need[v] > 0) flow.add_arc(v, sink, need[v]);
        if (need[v] < 0) flow.add_arc(source, v, -need[v]);
    }
    return flow.run(source, sink) == demand;
}

bool is_semistable(const Multigraph& g, const StabilityParam& sp, const OrbitSpec& spec) {
    if (spec.size() != g.num_edges()) throw std::invalid_argument("orbit spec length does not match the graph");
    return has_chain_in_box(g, sp.eta, bounds_of(orbit_char_set(spec, sp.N)));
}

namespace {

bool component_sums_zero(const Multigraph& g, const VertexVector& eta) {
    const auto label = component_labels(g);
    std::map<std::size_t, std::int64_t> sums;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) sums[label[v]] += eta.values[v];
    return std::all_of(sums.begin(), sums.end(), [](const auto& s) { return s.second == 0; });
}

}  // namespace

bool congruence_feasible(const Multigraph& g, const VertexVector& eta, std::int64_t N,
                         const std::vector<std::size_t>& constrained) {
    if (eta.values.size() != g.num_vertices()) throw std::invalid_argument("eta length does not match the graph");
    if (!component_sums_zero(g, eta)) return false;
    std::vector<bool> in_w(g.num_edges(), false);
    for (std::size_t e : constrained) in_w.at(e) = true;
    detail::UnionFind uf(g.num_vertices());
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (!in_w[e]) uf.unite(g.edge(e).head, g.edge(e).tail);
    std::map<std::size_t, std::int64_t> sums;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) sums[uf.find(v)] += eta.values[v];
    return std::all_of(sums.begin(), sums.end(), [&](const auto& s) { return s.second % N == 0; });
}

bool is_generic(const Multigraph& g, const StabilityParam& sp, std::uint64_t budget) {
    std::vector<std::size_t> candidates;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (!g.edge(e).is_loop()) candidates.push_back(e);
    if (candidates.size() >= 63 || (std::uint64_t{1} << candidates.size()) > budget)
        throw BudgetExceeded("genericity check exceeds budget");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
        std::vector<std::size_t> w;
        detail::UnionFind uf(g.num_vertices());
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (mask >> i & 1U) w.push_back(candidates[i]);
        for (std::size_t e = 0; e < g.num_edges(); ++e)
            if (std::find(w.begin(), w.end(), e) == w.end()) uf.unite(g.edge(e).head, g.edge(e).tail);
        if (uf.components() <= 1) continue;
        if (congruence_feasible(g, sp.eta, sp.N, w)) return false;
    }
    return true;
}

std::optional<VertexVector> find_generic_eta(const Multigraph& g, std::int64_t N, std::int64_t range,
                                             std::uint64_t budget) {
    if (N < 1) throw DomainError("N must be at least 1");
    if (range < 0) throw DomainError("search range must be nonnegative");
    const std::size_t nv = g.num_vertices();
    Integer space = ipow(Integer(static_cast<long>(2 * range + 1)), nv);
    if (space > Integer(static_cast<unsigned long>(budget))) throw BudgetExceeded("eta search exceeds budget");
    VertexVector eta{std::vector<std::int64_t>(nv, -range)};
    while (true) {
        if (component_sums_zero(g, eta) && is_generic(g, StabilityParam{eta, N}, budget)) return eta;
        std::size_t i = nv;
        while (i > 0 && eta.values[i - 1] == range) eta.values[--i] = -range;
        if (i == 0) return std::nullopt;
        ++eta.values[i - 1];
    }
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct CycleLattice {
    std::vector<std::size_t> forest;
    std::vector<std::size_t> nonforest;
    std::vector<EdgeVector> basis;  // basis[i] belongs to nonforest[i]
};

CycleLattice cycle_lattice(const Multigraph& g) {
    CycleLattice l;
    l.forest = default_spanning_forest(g);
    std::vector<bool> in(g.num_edges(), false);
    for (auto e : l.forest) in[e] = true;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (!in[e]) l.nonforest.push_back(e);
    l.basis = cycle_basis(g, l.forest);
    return l;
}

std::vector<std::int64_t> reduce(const CycleLattice& l, std::vector<std::int64_t> n, std::int64_t N) {
    for (std::size_t i = 0; i < l.nonforest.size(); ++i) {
        const std::int64_t q = floor_div(n[l.nonforest[i]], N);
        if (q == 0) continue;
        for (std::size_t e = 0; e < n.size(); ++e) n[e] -= N * q * l.basis[i].values[e];
    }
    return n;
}

// Forest edges in leaves-first order with the vertex they hang from.
struct ForestSolver {
    struct Step {
        std::size_t vertex;  // child side
        std::size_t parent;
        std::size_t edge;
    };
    std::vector<Step> steps;

    ForestSolver(const Multigraph& g, const std::vector<std::size_t>& forest) {
        const std::size_t nv = g.num_vertices();
        std::vector<std::vector<std::size_t>> incident(nv);
        for (auto e : forest) {
            incident[g.edge(e).head].push_back(e);
            incident[g.edge(e).tail].push_back(e);
        }
        std::vector<bool> seen(nv, false);
        std::vector<Step> order;
        for (std::size_t root = 0; root < nv; ++root) {
            if (seen[root]) continue;
            seen[root] = true;
            std::vector<std::size_t> queue{root};
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const std::size_t v = queue[qi];
                for (auto e : incident[v]) {
                    const std::size_t w = g.edge(e).head == v ? g.edge(e).tail : g.edge(e).head;
                    if (seen[w]) continue;
                    seen[w] = true;
                    order.push_back({w, v, e});
                    queue.push_back(w);
                }
            }
        }
        steps.assign(order.rbegin(), order.rend());
    }

    /// Fills c on forest edges so that boundary(c) = target; other entries
    /// of c are taken as given.
    void solve(const Multigraph& g, const std::vector<std::int64_t>& target, std::vector<std::int64_t>& c,
               const std::vector<bool>& in_forest) const {
        std::vector<std::int64_t> need = target;
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            if (in_forest[e]) continue;
            need[g.edge(e).head] -= c[e];
            need[g.edge(e).tail] += c[e];
        }
        for (const auto& s : steps) {
            const Edge& edge = g.edge(s.edge);
            const std::int64_t value = edge.head == s.vertex ? need[s.vertex] : -need[s.vertex];
            c[s.edge] = value;
            need[s.parent] -= edge.head == s.parent ? value : -value;
        }
    }
};

std::vector<EdgeBounds> box_bounds(const std::vector<std::int64_t>& n, std::int64_t N) {
    std::vector<EdgeBounds> b;
    b.reserve(n.size());
    for (auto ne : n) b.push_back({N * ne, N * (ne + 1)});
    return b;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1U, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w)
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += threads) fn(i);
        });
    for (auto& w : workers) w.join();
}

}  // namespace

std::vector<std::int64_t> reduce_modulo_cycles(const Multigraph& g, std::vector<std::int64_t> n, std::int64_t N) {
    if (n.size() != g.num_edges()) throw std::invalid_argument("n-vector length does not match the graph");
    if (N < 1) throw DomainError("N must be at least 1");
    return reduce(cycle_lattice(g), std::move(n), N);
}

StrataComplex strata_complex(const Multigraph& g, const StabilityParam& sp, std::uint64_t budget, unsigned threads) {
    const std::int64_t N = sp.N;
    if (N < 1) throw DomainError("N must be at least 1");
    if (!component_sums_zero(g, sp.eta))
        throw DomainError("-eta is not a boundary: eta must sum to zero on every component");
    const std::size_t m = g.num_edges();
    const CycleLattice lattice = cycle_lattice(g);
    const ForestSolver solver(g, lattice.forest);
    std::vector<bool> in_forest(m, false);
    for (auto e : lattice.forest) in_forest[e] = true;

    std::vector<std::size_t> free_edges;  // non-forest, non-loop
    for (auto e : lattice.nonforest)
        if (!g.edge(e).is_loop()) free_edges.push_back(e);

    const std::size_t h = lattice.nonforest.size();
    {
        Integer space = ipow(Integer(static_cast<long>(N)), h) * ipow(Integer(static_cast<long>(N + 1)), free_edges.size()) *
                        ipow(Integer(2), lattice.forest.size());
        if (space > Integer(static_cast<unsigned long>(budget))) throw BudgetExceeded("strata enumeration exceeds budget");
    }

    std::vector<std::int64_t> target(g.num_vertices());
    for (std::size_t v = 0; v < target.size(); ++v) target[v] = -sp.eta.values[v];

    // Representatives: non-forest coordinates in [0, N)^h.
    std::size_t rep_count = 1;
    for (std::size_t i = 0; i < h; ++i) rep_count *= static_cast<std::size_t>(N);
    std::vector<std::set<std::vector<std::int64_t>>> found(rep_count);
    parallel_for(rep_count, threads, [&](std::size_t code) {
        const std::size_t slot = code;
        std::vector<std::int64_t> n(m, 0);
        for (std::size_t i = 0; i < h; ++i) {
            n[lattice.nonforest[i]] = static_cast<std::int64_t>(code % static_cast<std::size_t>(N));
            code /= static_cast<std::size_t>(N);
        }
        std::vector<std::int64_t> c(m, 0);
        std::vector<std::int64_t> offset(free_edges.size(), 0);
        std::set<std::vector<std::int64_t>> local;
        while (true) {
            for (std::size_t i = 0; i < free_edges.size(); ++i) c[free_edges[i]] = N * n[free_edges[i]] + offset[i];
            solver.solve(g, target, c, in_forest);
            // forest coordinates: c_e in [N n_e, N n_e + N]
            std::vector<std::vector<std::int64_t>> choices;
            for (auto e : lattice.forest) {
                const std::int64_t hi = floor_div(c[e], N);
                if (c[e] % N == 0)
                    choices.push_back({hi - 1, hi});
                else
                    choices.push_back({hi});
            }
            std::vector<std::size_t> pick(choices.size(), 0);
            while (true) {
                for (std::size_t j = 0; j < choices.size(); ++j) n[lattice.forest[j]] = choices[j][pick[j]];
                local.insert(n);
                std::size_t j = 0;
                for (; j < pick.size(); ++j) {
                    if (++pick[j] < choices[j].size()) break;
                    pick[j] = 0;
                }
                if (j == pick.size()) break;
            }
            std::size_t i = 0;
            for (; i < offset.size(); ++i) {
                if (++offset[i] <= N) break;
                offset[i] = 0;
            }
            if (i == offset.size()) break;
        }
        found[slot] = std::move(local);
    });

    std::set<std::vector<std::int64_t>> all;
    for (auto& s : found) all.insert(s.begin(), s.end());

    StrataComplex out;
    out.N = N;
    out.lattice_rank = h;
    std::map<std::vector<std::int64_t>, std::size_t> index;
    for (const auto& n : all) {
        index.emplace(n, out.nodes.size());
        out.nodes.push_back(StrataNode{n, {}});
    }

    {
        Integer work = Integer(static_cast<unsigned long>(out.nodes.size())) * ipow(Integer(3), m);
        if (work > Integer(static_cast<unsigned long>(budget))) throw BudgetExceeded("strata adjacency exceeds budget");
    }

    // Face data and adjacency, one node per task.
    using Key = std::pair<std::size_t, std::vector<std::int64_t>>;
    std::vector<std::vector<Key>> keys(out.nodes.size());
    parallel_for(out.nodes.size(), threads, [&](std::size_t i) {
        StrataNode& node = out.nodes[i];
        const auto base = box_bounds(node.n, N);
        for (std::size_t e = 0; e < m; ++e) {
            auto probe = base;
            std::int64_t lo = *base[e].lo, hi = *base[e].hi;
            // smallest feasible c_e
            std::int64_t a = lo, b = hi;
            while (a < b) {
                const std::int64_t mid = floor_div(a + b, 2);
                probe[e] = {lo, mid};
                if (has_chain_in_box(g, sp.eta, probe)) b = mid; else a = mid + 1;
            }
            const std::int64_t min_c = a;
            a = lo, b = hi;
            while (a < b) {
                const std::int64_t mid = floor_div(a + b + 1, 2);
                probe[e] = {mid, hi};
                if (has_chain_in_box(g, sp.eta, probe)) a = mid; else b = mid - 1;
            }
            node.char_range.emplace_back(min_c, a);
        }

        std::vector<int> delta(m, -1);
        while (true) {
            if (std::any_of(delta.begin(), delta.end(), [](int d) { return d != 0; })) {
                std::vector<EdgeBounds> meet(m);
                std::vector<std::int64_t> nb = node.n;
                for (std::size_t e = 0; e < m; ++e) {
                    nb[e] += delta[e];
                    if (delta[e] == 0)
                        meet[e] = base[e];
                    else {
                        const std::int64_t pt = N * std::max(node.n[e], nb[e]);
                        meet[e] = {pt, pt};
                    }
                }
                if (has_chain_in_box(g, sp.eta, meet)) {
                    auto rep = reduce(lattice, nb, N);
                    auto it = index.find(rep);
                    if (it == index.end()) throw std::logic_error("neighbour component missing from enumeration");
                    // the same intersection seen from the other side
                    std::vector<std::int64_t> back(m);
                    for (std::size_t e = 0; e < m; ++e) back[e] = node.n[e] - (nb[e] - rep[e]);
                    Key forward{i, nb}, reverse{it->second, back};
                    keys[i].push_back(std::min(forward, reverse));
                }
            }
            std::size_t e = 0;
            for (; e < m; ++e) {
                if (++delta[e] <= 1) break;
                delta[e] = -1;
            }
            if (e == m) break;
        }
    });

    std::set<Key> unique;
    for (auto& k : keys) unique.insert(k.begin(), k.end());
    detail::UnionFind uf(out.nodes.size());
    for (const auto& [from, nb] : unique) {
        const std::size_t to = index.at(reduce(lattice, nb, N));
        out.adjacency.push_back({from, to, nb});
        uf.unite(from, to);
    }
    out.connected = !out.nodes.empty() && uf.components() == 1;
    return out;
}

}  // namespace hyperkirch
