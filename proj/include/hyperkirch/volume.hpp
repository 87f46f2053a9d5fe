#pragma once

#include "hyperkirch/graph.hpp"
#include "hyperkirch/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperkirch {

/// Residue field size q = p^a, and the precision k used by the residue oracle.
struct LocalFieldParams {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned k = 1;

    /// Validates q as a prime power >= 2 and k >= 1; p is derived from q.
    static LocalFieldParams make(std::uint64_t q, unsigned k = 1);
};

/// Edge valuations nu_e >= 1, aligned with the graph's edges.
struct Valuation {
    std::vector<Integer> nu;

    /// Throws DomainError on a length mismatch or an entry below 1.
    static Valuation make(const Multigraph& g, std::vector<Integer> nu);
};

/// Normalised volume of the fibre over a base point with valuation nu:
/// (1 - 1/q)^{h^1} * Psi(nu).
Rational fibre_volume(const Multigraph& g, const Valuation& nu, std::uint64_t q);

/// F(G) by the volume recursion F = F(G/e) + F(G\e) for ordinary e,
/// F(G/e) for bridges, F(G\e) for loops, and 1 on edgeless graphs.
Integer total_volume(const Multigraph& g);

/// Measure of {x in O_F : v(x) = n} for the Haar measure of mass 1 on O_F.
Rational valuation_shell_measure(std::uint64_t q, unsigned n);

struct OracleResult {
    Rational estimate;
    /// total_volume - estimate lies in [0, error_bound].
    Rational error_bound;
    std::uint64_t residue_classes = 0;
};

/// Exhaustive residue-class estimate of F(G) for prime q = p.
///
/// Points of the base are cycles z = sum_i t_i gamma_i of the default cycle
/// basis with t in (Z/p^k)^{h^1}. A class contributes when all edge coordinates
/// vanish mod p; since each basis cycle owns one non-forest edge with
/// coefficient 1, that is exactly t in (pZ/p^k)^{h^1}. Valuations are capped at
/// k, and the estimate is
///
///     (q-1)^{h^1} * p^{-k h^1} * sum_z Psi(min(nu(z), k)).
///
/// Capping only lowers Psi, so the estimate never overshoots. For one forest
/// complement S the coordinates (z_e)_{e in S} are a unimodular change of
/// variables, so dropping the remaining constraints their valuations become
/// independent with P(v = n) = (q-1) q^{-n-1} on the maximal ideal. Then
///
///     E[prod nu - prod min(nu,k)] <= |S| * E[nu - min(nu,k)] * E[nu]^{|S|-1}
///                                  = h^1 * q^{-k}/(q-1) * (q-1)^{1-h^1},
///
/// and after the (q-1)^{h^1} prefactor every monomial of Psi contributes at
/// most h^1 * q^{-k}. The reported bound is (#monomials) * h^1 * p^{-k}.
///
/// Throws BudgetExceeded when p^{k h^1} > budget and DomainError when q is
/// not prime. Blocks of the first coordinate are spread over `threads`
/// workers and reduced in block order.
OracleResult total_volume_padic_oracle(const Multigraph& g, const LocalFieldParams& params,
                                       std::uint64_t budget, unsigned threads = 1);

struct MonteCarloResult {
    double estimate = 0;
    /// 99% normal-approximation radius plus the deterministic truncation bound.
    double radius99 = 0;
    std::uint64_t samples = 0;
};

/// Sampling variant of the oracle for graphs beyond the exhaustive budget.
MonteCarloResult total_volume_padic_monte_carlo(const Multigraph& g, const LocalFieldParams& params,
                                                std::uint64_t samples, std::uint64_t seed);

/// |central fibre (k_F)| = F(G) * q^{h^1}.
Integer central_fibre_point_count(const Multigraph& g, std::uint64_t q);

/// fibre_volume == (1 - 1/q)^{h^1} * covolume(tropical_jacobian(g, nu)).
bool trop_volume_check(const Multigraph& g, const Valuation& nu, std::uint64_t q);

}  // namespace hyperkirch
