#pragma once

#include "hyperkirch/graph.hpp"
#include "hyperkirch/numeric.hpp"
#include "hyperkirch/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperkirch {

/// Kirchhoff polynomial by enumerating maximal spanning forests: one monomial
/// prod_{e not in T} x_e per forest T. Variables are the edge ids.
MultilinearPoly psi_enum(const Multigraph& g, std::uint64_t budget = UINT64_MAX);

struct DelconStats {
    std::size_t calls = 0;
    std::size_t memo_hits = 0;
};

/// Kirchhoff polynomial by deletion-contraction. Loops are peeled first, then
/// bridges, then the smallest ordinary edge of the canonical minor; minors are
/// memoised on their canonical form for the duration of the call.
MultilinearPoly psi_delcon(const Multigraph& g, DelconStats* stats = nullptr);

/// det of tau_matrix(g, x) on the default cycle basis.
Integer psi_det(const Multigraph& g, const std::vector<Integer>& x);

/// Classical oracle: (prod_e x_e) * det(reduced Laplacian with weights 1/x_e).
/// Requires a connected graph and x_e > 0.
Rational matrix_tree_dual(const Multigraph& g, const std::vector<Rational>& x);

}  // namespace hyperkirch
