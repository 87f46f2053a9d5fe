#pragma once

#include "hyperkirch/graph.hpp"
#include "hyperkirch/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hyperkirch {

/// Stability parameter: eta in the zero-sum vertex chains, linearisation power N.
struct StabilityParam {
    VertexVector eta;
    std::int64_t N = 1;

    /// Throws DomainError unless eta matches the graph, sums to zero and N >= 1.
    static StabilityParam make(const Multigraph& g, VertexVector eta, std::int64_t N);
};

enum class OrbitKind { generic, segment, point };

/// Torus orbit type of one edge: the open orbit, (G_m)_n, or the fixed point w_n.
struct OrbitType {
    OrbitKind kind = OrbitKind::generic;
    std::int64_t n = 0;

    static OrbitType generic() { return {OrbitKind::generic, 0}; }
    static OrbitType segment(std::int64_t n) { return {OrbitKind::segment, n}; }
    static OrbitType point(std::int64_t n) { return {OrbitKind::point, n}; }
    bool operator==(const OrbitType&) const = default;
};

/// One orbit type per edge, aligned with the graph's edges.
using OrbitSpec = std::vector<OrbitType>;

/// Characters of one factor: all of Z, [lo, hi], or {lo}.
struct CharSet {
    enum class Kind { all_integers, interval, singleton };
    Kind kind = Kind::all_integers;
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool contains(std::int64_t c) const {
        return kind == Kind::all_integers || (lo <= c && c <= hi);
    }
    bool operator==(const CharSet&) const = default;
};

using CharBox = std::vector<CharSet>;

enum class DeltaPosition { outside, boundary, interior };

const char* to_string(DeltaPosition p);

/// Position of the character (k, m) relative to the polytope spanned by
/// (N(n^2+n)/2 + N, Nn), n in Z.
DeltaPosition delta_membership(const Integer& k, const Integer& m, std::int64_t N);

/// Generic -> Z, Segment(n) -> [Nn, N(n+1)], Point(n) -> {Nn}.
CharBox orbit_char_set(const OrbitSpec& spec, std::int64_t N);

/// Optional lower/upper bound per edge.
struct EdgeBounds {
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;
};

/// Is there an integer chain c with boundary(c) = -eta and c inside the bounds?
/// Decided exactly by a lower-bounded circulation reduced to max-flow; the
/// incidence matrix is totally unimodular, so no integrality gap arises.
bool has_chain_in_box(const Multigraph& g, const VertexVector& eta, const std::vector<EdgeBounds>& bounds);

std::vector<EdgeBounds> bounds_of(const CharBox& box);

bool is_semistable(const Multigraph& g, const StabilityParam& sp, const OrbitSpec& spec);

/// Is there an integer chain c with boundary(c) = -eta and N | c_e for the
/// edges in `constrained`? Holds iff eta sums to zero on every component of
/// g and to a multiple of N on every component of g minus `constrained`.
bool congruence_feasible(const Multigraph& g, const VertexVector& eta, std::int64_t N,
                         const std::vector<std::size_t>& constrained);

/// eta is generic when no semistable orbit has a disconnecting set of
/// point-type edges. Checked over every loop-free edge subset W whose removal
/// leaves g disconnected. Throws BudgetExceeded beyond 2^|E| > budget.
bool is_generic(const Multigraph& g, const StabilityParam& sp, std::uint64_t budget = UINT64_MAX);

/// First generic eta (all component sums zero, entries in [-range, range]) in
/// lexicographic order of the entries, or nullopt when none exists there.
std::optional<VertexVector> find_generic_eta(const Multigraph& g, std::int64_t N, std::int64_t range,
                                             std::uint64_t budget = UINT64_MAX);

struct StrataNode {
    /// Representative n-vector; non-forest coordinates lie in [0, N).
    std::vector<std::int64_t> n;
    /// Per edge, the smallest and largest character c_e realised on the
    /// component (box(n) meets the fibre of the boundary map over -eta).
    std::vector<std::pair<std::int64_t, std::int64_t>> char_range;
};

struct StrataAdjacency {
    std::size_t from;  // node index
    std::size_t to;    // node index
    /// The neighbouring n-vector as seen from the representative of `from`;
    /// it equals the representative of `to` up to a lattice translation.
    std::vector<std::int64_t> neighbour;
};

/// Components of the special fibre modulo translation by N * H_1(G, Z), with
/// their intersection graph.
struct StrataComplex {
    std::int64_t N = 1;
    std::size_t lattice_rank = 0;
    std::vector<StrataNode> nodes;        // sorted by representative
    std::vector<StrataAdjacency> adjacency;  // canonical, sorted, no duplicates
    bool connected = false;
};

/// Canonical representative of n modulo N * (cycle lattice) for the default
/// cycle basis: every non-forest coordinate is reduced into [0, N).
std::vector<std::int64_t> reduce_modulo_cycles(const Multigraph& g, std::vector<std::int64_t> n, std::int64_t N);

/// Enumerates the components over a fundamental domain, reduces them, and
/// records which pairs intersect. Throws BudgetExceeded when the search space
/// exceeds `budget` and DomainError when -eta is not a boundary.
StrataComplex strata_complex(const Multigraph& g, const StabilityParam& sp, std::uint64_t budget = UINT64_MAX,
                             unsigned threads = 1);

}  // namespace hyperkirch
