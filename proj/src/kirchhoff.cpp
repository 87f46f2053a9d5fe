#include "hyperkirch/kirchhoff.hpp"

#include "hyperkirch/canonical.hpp"
#include "hyperkirch/lattice.hpp"
#include "union_find.hpp"

#include <map>
#include <stdexcept>

namespace hyperkirch {

MultilinearPoly psi_enum(const Multigraph& g, std::uint64_t budget) {
    MultilinearPoly psi(g.edge_ids());
    for (const auto& forest : spanning_forests(g, budget)) {
        std::vector<bool> in(g.num_edges(), false);
        for (std::size_t i : forest) in[i] = true;
        VariableSet complement;
        for (std::size_t i = 0; i < g.num_edges(); ++i)
            if (!in[i]) complement.insert(i);
        psi.add_term(complement, 1);
    }
    return psi;
}

namespace {

using Ends = std::vector<std::pair<std::size_t, std::size_t>>;
using TermMap = std::map<VariableSet, Integer>;

// Terms of Psi over the positions 0..m-1 of a skeleton's edge list.
class DelconSolver {
public:
    explicit DelconSolver(DelconStats* stats) : stats_(stats) {}

    TermMap solve(const Skeleton& s) {
        if (stats_) ++stats_->calls;
        const CanonicalForm canon = canonical_form(s);
        auto it = memo_.find(canon.form);
        if (it == memo_.end()) {
            it = memo_.emplace(canon.form, expand(canon.form)).first;
        } else if (stats_) {
            ++stats_->memo_hits;
        }
        // canonical position -> input position
        std::vector<std::size_t> back(canon.position.size());
        for (std::size_t i = 0; i < canon.position.size(); ++i) back[canon.position[i]] = i;
        TermMap out;
        for (const auto& [mono, c] : it->second) {
            VariableSet m;
            for (std::size_t p : mono.indices()) m.insert(back[p]);
            out.emplace(std::move(m), c);
        }
        return out;
    }

private:
    // Lifts sub-minor positions back over the removed position `gap`.
    static VariableSet lift(const VariableSet& mono, std::size_t gap) {
        VariableSet m;
        for (std::size_t p : mono.indices()) m.insert(p >= gap ? p + 1 : p);
        return m;
    }

    static Skeleton without(const Skeleton& s, std::size_t e) {
        Skeleton out{s.num_vertices, {}};
        for (std::size_t i = 0; i < s.ends.size(); ++i)
            if (i != e) out.ends.push_back(s.ends[i]);
        return out;
    }

    static Skeleton contracted(const Skeleton& s, std::size_t e) {
        const auto [keep, drop] = s.ends[e];
        auto relabel = [&](std::size_t v) {
            if (v == drop) v = keep;
            return v > drop ? v - 1 : v;
        };
        Skeleton out{s.num_vertices - 1, {}};
        for (std::size_t i = 0; i < s.ends.size(); ++i) {
            if (i == e) continue;
            const std::size_t a = relabel(s.ends[i].first), b = relabel(s.ends[i].second);
            out.ends.emplace_back(std::min(a, b), std::max(a, b));
        }
        return out;
    }

    static bool is_bridge(const Skeleton& s, std::size_t e) {
        detail::UnionFind uf(s.num_vertices);
        for (std::size_t i = 0; i < s.ends.size(); ++i)
            if (i != e) uf.unite(s.ends[i].first, s.ends[i].second);
        return !uf.same(s.ends[e].first, s.ends[e].second);
    }

    TermMap expand(const Skeleton& s) {
        if (s.ends.empty()) return TermMap{{VariableSet{}, Integer(1)}};
        for (std::size_t e = 0; e < s.ends.size(); ++e) {
            if (s.ends[e].first != s.ends[e].second) continue;
            TermMap out;
            for (const auto& [mono, c] : solve(without(s, e))) {
                VariableSet m = lift(mono, e);
                m.insert(e);
                out.emplace(std::move(m), c);
            }
            return out;
        }
        for (std::size_t e = 0; e < s.ends.size(); ++e) {
            if (!is_bridge(s, e)) continue;
            TermMap out;
            for (const auto& [mono, c] : solve(contracted(s, e))) out.emplace(lift(mono, e), c);
            return out;
        }
        // no loops or bridges left: edge 0 is ordinary
        TermMap out;
        for (const auto& [mono, c] : solve(without(s, 0))) {
            VariableSet m = lift(mono, 0);
            m.insert(0);
            out.emplace(std::move(m), c);
        }
        for (const auto& [mono, c] : solve(contracted(s, 0))) {
            auto [it, inserted] = out.try_emplace(lift(mono, 0), c);
            if (!inserted) it->second += c;
        }
        return out;
    }

    std::map<Skeleton, TermMap> memo_;
    DelconStats* stats_;
};

}  // namespace

MultilinearPoly psi_delcon(const Multigraph& g, DelconStats* stats) {
    DelconSolver solver(stats);
    MultilinearPoly psi(g.edge_ids());
    for (const auto& [mono, c] : solver.solve(skeleton_of(g))) psi.add_term(mono, c);
    return psi;
}

Integer psi_det(const Multigraph& g, const std::vector<Integer>& x) {
    return determinant(tau_matrix(g, x));
}

Rational matrix_tree_dual(const Multigraph& g, const std::vector<Rational>& x) {
    if (x.size() != g.num_edges()) throw std::invalid_argument("weight vector length does not match the graph");
    if (num_components(g) > 1) throw DomainError("matrix-tree oracle needs a connected graph");
    Rational product = 1;
    for (std::size_t e = 0; e < x.size(); ++e) {
        if (x[e] <= 0) throw DomainError("weight of edge '" + g.edge(e).id + "' must be positive");
        product *= x[e];
    }
    const std::size_t n = g.num_vertices();
    if (n == 0) return product;
    std::vector<std::vector<Rational>> lap(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const Edge& edge = g.edge(e);
        if (edge.is_loop()) continue;
        const Rational c = 1 / x[e];
        lap[edge.head][edge.head] += c;
        lap[edge.tail][edge.tail] += c;
        lap[edge.head][edge.tail] -= c;
        lap[edge.tail][edge.head] -= c;
    }
    // drop the last row and column
    lap.pop_back();
    for (auto& row : lap) row.pop_back();
    return product * determinant(std::move(lap));
}

}  // namespace hyperkirch
