#include "hyperkirch/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace hyperkirch {

Skeleton skeleton_of(const Multigraph& g) {
    Skeleton s{g.num_vertices(), {}};
    s.ends.reserve(g.num_edges());
    for (const auto& e : g.edges()) s.ends.emplace_back(std::min(e.head, e.tail), std::max(e.head, e.tail));
    return s;
}

namespace {

using Ends = std::vector<std::pair<std::size_t, std::size_t>>;

// Equitable refinement: split colour classes by the multiset of neighbour
// colours until stable. Colour ids are dense and depend only on signatures, so
// relabeling the input relabels the output the same way.
std::vector<std::size_t> refine(const std::vector<std::vector<std::size_t>>& nbrs, std::vector<std::size_t> colour) {
    const std::size_t nv = colour.size();
    std::size_t classes = SIZE_MAX;
    while (true) {
        using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
        std::vector<Signature> sig(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            std::vector<std::size_t> around;
            around.reserve(nbrs[v].size());
            for (std::size_t w : nbrs[v]) around.push_back(colour[w]);
            std::sort(around.begin(), around.end());
            sig[v] = {colour[v], std::move(around)};
        }
        std::map<Signature, std::size_t> ids;
        for (const auto& s : sig) ids[s];
        std::size_t next = 0;
        for (auto& [k, id] : ids) id = next++;
        for (std::size_t v = 0; v < nv; ++v) colour[v] = ids[sig[v]];
        if (ids.size() == classes) return colour;
        classes = ids.size();
    }
}

Ends relabel_sorted(const Ends& ends, const std::vector<std::size_t>& label) {
    Ends out;
    out.reserve(ends.size());
    for (auto [a, b] : ends) {
        const std::size_t x = label[a], y = label[b];
        out.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Individualisation-refinement over one connected piece. Every discrete
// colouring reached is a candidate labeling; the smallest sorted edge list wins.
struct PieceSearch {
    const Ends& ends;
    std::vector<std::vector<std::size_t>> nbrs;
    std::uint64_t budget;
    std::uint64_t leaves = 0;
    bool cut = false;
    bool have = false;
    Ends best;
    std::vector<std::size_t> best_label;

    PieceSearch(std::size_t nv, const Ends& e, std::uint64_t b) : ends(e), nbrs(nv), budget(b) {}

    void run(std::vector<std::size_t> colour) {
        colour = refine(nbrs, std::move(colour));
        const std::size_t nv = colour.size();
        std::vector<std::size_t> size(nv, 0);
        for (auto c : colour) ++size[c];
        std::size_t target = nv;
        for (std::size_t c = 0; c < nv; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        if (target == nv) {
            ++leaves;
            auto cand = relabel_sorted(ends, colour);
            if (!have || cand < best) {
                best = std::move(cand);
                best_label = colour;
                have = true;
            }
            return;
        }
        for (std::size_t v = 0; v < nv; ++v) {
            if (colour[v] != target) continue;
            if (have && leaves >= budget) {
                cut = true;
                return;
            }
            std::vector<std::size_t> split(nv);
            for (std::size_t w = 0; w < nv; ++w) split[w] = 2 * colour[w] + 1;
            split[v] = 2 * colour[v];
            run(std::move(split));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Skeleton& s, bool drop_isolated, std::uint64_t labeling_budget) {
    // compact away isolated vertices
    std::vector<std::size_t> keep_index(s.num_vertices, SIZE_MAX);
    std::size_t nv = 0;
    {
        std::vector<bool> used(s.num_vertices, !drop_isolated);
        for (auto [a, b] : s.ends) used[a] = used[b] = true;
        for (std::size_t v = 0; v < s.num_vertices; ++v)
            if (used[v]) keep_index[v] = nv++;
    }
    Ends ends;
    ends.reserve(s.ends.size());
    for (auto [a, b] : s.ends) ends.emplace_back(keep_index[a], keep_index[b]);

    // connected pieces are labeled independently, then ordered by their forms
    std::vector<std::size_t> piece(nv);
    std::iota(piece.begin(), piece.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (piece[v] != v) v = piece[v] = piece[piece[v]];
        return v;
    };
    for (auto [a, b] : ends) piece[find(a)] = find(b);
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t v = 0; v < nv; ++v) members[find(v)].push_back(v);

    struct Labeled {
        std::size_t nv;
        Ends form;
        std::vector<std::size_t> vertices;  // global ids
        std::vector<std::size_t> label;     // local label of each vertex
    };
    std::vector<Labeled> pieces;
    CanonicalForm out;
    std::vector<std::size_t> local(nv);
    for (auto& [root, vs] : members) {
        for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = i;
        Ends piece_ends;
        for (auto [a, b] : ends)
            if (find(a) == root) piece_ends.emplace_back(local[a], local[b]);
        PieceSearch search(vs.size(), piece_ends, labeling_budget);
        std::vector<std::size_t> colour(vs.size());
        {
            std::vector<std::size_t> loops(vs.size(), 0);
            for (auto [a, b] : piece_ends) {
                if (a == b) {
                    ++loops[a];
                } else {
                    search.nbrs[a].push_back(b);
                    search.nbrs[b].push_back(a);
                }
            }
            std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
            for (std::size_t v = 0; v < vs.size(); ++v) ids[{search.nbrs[v].size() + 2 * loops[v], loops[v]}];
            std::size_t next = 0;
            for (auto& [k, id] : ids) id = next++;
            for (std::size_t v = 0; v < vs.size(); ++v)
                colour[v] = ids[{search.nbrs[v].size() + 2 * loops[v], loops[v]}];
        }
        search.run(std::move(colour));
        if (search.cut) out.exact = false;
        pieces.push_back({vs.size(), std::move(search.best), vs, std::move(search.best_label)});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Labeled& a, const Labeled& b) {
        return std::tie(a.nv, a.form) < std::tie(b.nv, b.form);
    });

    std::vector<std::size_t> best_label(nv);
    std::size_t offset = 0;
    for (const auto& p : pieces) {
        for (std::size_t i = 0; i < p.vertices.size(); ++i) best_label[p.vertices[i]] = offset + p.label[i];
        offset += p.nv;
    }

    out.form.num_vertices = nv;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> tagged;
    tagged.reserve(ends.size());
    for (std::size_t i = 0; i < ends.size(); ++i) {
        const std::size_t x = best_label[ends[i].first], y = best_label[ends[i].second];
        tagged.push_back({{std::min(x, y), std::max(x, y)}, i});
    }
    std::sort(tagged.begin(), tagged.end());
    out.position.assign(ends.size(), 0);
    for (std::size_t pos = 0; pos < tagged.size(); ++pos) {
        out.form.ends.push_back(tagged[pos].first);
        out.position[tagged[pos].second] = pos;
    }
    return out;
}

}  // namespace hyperkirch
