#pragma once

#include "hyperkirch/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace hyperkirch {

/// Unoriented edge list over vertices 0..num_vertices-1; each pair is stored
/// as (min, max). This is all the structure the Kirchhoff recursions see.
struct Skeleton {
    std::size_t num_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> ends;

    auto operator<=>(const Skeleton&) const = default;
};

Skeleton skeleton_of(const Multigraph& g);

struct CanonicalForm {
    Skeleton form;
    /// position[i] is the index in form.ends of input edge i.
    std::vector<std::size_t> position;
    /// False when the labeling search was cut short; the form is then a
    /// valid relabeling but isomorphic inputs may map to different forms.
    bool exact = true;
};

/// Each connected piece is labeled by individualisation-refinement, keeping
/// the lexicographically smallest sorted edge list; pieces are then ordered by
/// their forms. labeling_budget caps the leaves searched per piece. Isolated
/// vertices are dropped when requested.
CanonicalForm canonical_form(const Skeleton& s, bool drop_isolated = true,
                             std::uint64_t labeling_budget = 5040);

}  // namespace hyperkirch
