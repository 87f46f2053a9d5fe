#include "hyperkirch/volume.hpp"

#include "hyperkirch/canonical.hpp"
#include "hyperkirch/kirchhoff.hpp"
#include "hyperkirch/lattice.hpp"
#include "union_find.hpp"

#include <cmath>
#include <map>
#include <random>
#include <thread>

namespace hyperkirch {

LocalFieldParams LocalFieldParams::make(std::uint64_t q, unsigned k) {
    const std::uint64_t p = prime_power_base(q);
    if (p == 0) throw DomainError("q = " + std::to_string(q) + " is not a prime power >= 2");
    if (k < 1) throw DomainError("precision k must be at least 1");
    return LocalFieldParams{q, p, k};
}

Valuation Valuation::make(const Multigraph& g, std::vector<Integer> nu) {
    if (nu.size() != g.num_edges()) throw DomainError("valuation length does not match the graph");
    for (std::size_t e = 0; e < nu.size(); ++e)
        if (nu[e] < 1) throw DomainError("valuation of edge '" + g.edge(e).id + "' must be >= 1");
    return Valuation{std::move(nu)};
}

namespace {

void require_q(std::uint64_t q) {
    if (prime_power_base(q) == 0) throw DomainError("q = " + std::to_string(q) + " is not a prime power >= 2");
}

Rational torus_factor(std::uint64_t q, std::size_t h1) {
    return rpow(Rational(Integer(q - 1), Integer(q)), h1);
}

class TotalVolumeSolver {
public:
    Integer solve(const Skeleton& s) {
        const CanonicalForm canon = canonical_form(s);
        auto it = memo_.find(canon.form);
        if (it != memo_.end()) return it->second;
        Integer value = expand(canon.form);
        memo_.emplace(canon.form, value);
        return value;
    }

private:
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

    Integer expand(const Skeleton& s) {
        if (s.ends.empty()) return 1;
        const std::size_t e = 0;
        const auto [a, b] = s.ends[e];
        if (a == b) return solve(without(s, e));
        detail::UnionFind uf(s.num_vertices);
        for (std::size_t i = 1; i < s.ends.size(); ++i) uf.unite(s.ends[i].first, s.ends[i].second);
        if (!uf.same(a, b)) return solve(contracted(s, e));
        return solve(contracted(s, e)) + solve(without(s, e));
    }

    std::map<Skeleton, Integer> memo_;
};

// Non-bridge edges of each monomial of Psi, as index lists.
std::vector<std::vector<std::size_t>> monomial_supports(const Multigraph& g, std::uint64_t budget) {
    const MultilinearPoly psi = psi_enum(g, budget);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& [mono, c] : psi.terms()) out.push_back(mono.indices());
    return out;
}

struct ResidueSetup {
    std::size_t h1 = 0;
    std::vector<std::vector<std::int64_t>> basis;  // h1 x |E|
    std::vector<std::vector<std::size_t>> monomials;
    std::int64_t modulus = 1;                      // p^k
};

ResidueSetup residue_setup(const Multigraph& g, const LocalFieldParams& params, std::uint64_t budget) {
    ResidueSetup s;
    for (const auto& c : cycle_basis(g)) s.basis.push_back(c.values);
    s.h1 = s.basis.size();
    s.monomials = monomial_supports(g, budget);
    Integer modulus = ipow(Integer(params.p), params.k);
    if (modulus > Integer(static_cast<unsigned long>(INT64_MAX / 64 / (g.num_edges() + 1))))
        throw BudgetExceeded("p^k too large for residue arithmetic");
    s.modulus = modulus.get_si();
    return s;
}

// v_p of x mod p^k, capped at k (x = 0 gives k).
unsigned capped_valuation(std::int64_t x, std::int64_t p, unsigned k, std::int64_t modulus) {
    x %= modulus;
    if (x < 0) x += modulus;
    if (x == 0) return k;
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

using Wide = unsigned __int128;

Wide psi_at(const ResidueSetup& s, const std::vector<unsigned>& nu) {
    Wide total = 0;
    for (const auto& mono : s.monomials) {
        Wide t = 1;
        for (std::size_t e : mono) t *= nu[e];
        total += t;
    }
    return total;
}

Integer to_integer(Wide w) {
    const auto hi = static_cast<std::uint64_t>(w >> 64);
    const auto lo = static_cast<std::uint64_t>(w);
    Integer z = Integer(static_cast<unsigned long>(hi));
    z <<= 64;
    z += Integer(static_cast<unsigned long>(lo));
    return z;
}

void valuations_of(const ResidueSetup& s, const std::vector<std::int64_t>& t, const LocalFieldParams& params,
                   std::vector<unsigned>& nu) {
    const std::size_t m = nu.size();
    const auto p = static_cast<std::int64_t>(params.p);
    for (std::size_t e = 0; e < m; ++e) {
        std::int64_t coord = 0;
        for (std::size_t i = 0; i < s.h1; ++i) coord += s.basis[i][e] * t[i];
        nu[e] = capped_valuation(coord, p, params.k, s.modulus);
    }
}

}  // namespace

Rational fibre_volume(const Multigraph& g, const Valuation& nu, std::uint64_t q) {
    require_q(q);
    Valuation::make(g, nu.nu);
    const Integer psi = psi_enum(g).evaluate(nu.nu);
    return torus_factor(q, betti1(g)) * Rational(psi);
}

Integer total_volume(const Multigraph& g) {
    TotalVolumeSolver solver;
    return solver.solve(skeleton_of(g));
}

Rational valuation_shell_measure(std::uint64_t q, unsigned n) {
    require_q(q);
    return Rational(Integer(q - 1), ipow(Integer(q), n + 1));
}

OracleResult total_volume_padic_oracle(const Multigraph& g, const LocalFieldParams& params, std::uint64_t budget,
                                       unsigned threads) {
    if (params.q != params.p || !is_prime(params.p))
        throw DomainError("the residue oracle needs q prime (got q = " + std::to_string(params.q) + ")");
    const std::size_t h1 = betti1(g);
    if (ipow(Integer(params.p), params.k * h1) > Integer(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("p^(k*h1) exceeds the enumeration budget");
    const ResidueSetup s = residue_setup(g, params, budget);

    const auto p = static_cast<std::int64_t>(params.p);
    const std::int64_t per_coord = s.modulus / p;  // residues t = p*j, j < p^{k-1}
    const std::size_t blocks = h1 == 0 ? 1 : static_cast<std::size_t>(per_coord);

    std::vector<Integer> block_sum(blocks);
    auto run_block = [&](std::size_t b) {
        std::vector<std::int64_t> t(h1, 0);
        std::vector<unsigned> nu(g.num_edges(), 0);
        Wide acc = 0;
        Integer total = 0;
        std::uint64_t pending = 0;
        if (h1 > 0) t[0] = p * static_cast<std::int64_t>(b);
        while (true) {
            valuations_of(s, t, params, nu);
            acc += psi_at(s, nu);
            if (++pending == (1U << 20)) {
                total += to_integer(acc);
                acc = 0;
                pending = 0;
            }
            std::size_t i = 1;
            for (; i < h1; ++i) {
                t[i] += p;
                if (t[i] < s.modulus) break;
                t[i] = 0;
            }
            if (i >= h1) break;
        }
        block_sum[b] = total + to_integer(acc);
    };

    threads = std::max(1U, threads);
    if (threads == 1 || blocks == 1) {
        for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < threads; ++w)
            workers.emplace_back([&, w] {
                for (std::size_t b = w; b < blocks; b += threads) run_block(b);
            });
        for (auto& w : workers) w.join();
    }
    Integer sum = 0;
    for (const auto& b : block_sum) sum += b;

    OracleResult out;
    out.residue_classes = 1;
    for (std::size_t i = 0; i < h1; ++i) out.residue_classes *= static_cast<std::uint64_t>(per_coord);
    out.estimate = Rational(ipow(Integer(params.q - 1), h1) * sum, ipow(Integer(params.p), params.k * h1));
    out.estimate.canonicalize();
    out.error_bound = Rational(Integer(static_cast<unsigned long>(s.monomials.size() * h1)),
                               ipow(Integer(params.p), params.k));
    out.error_bound.canonicalize();
    return out;
}

MonteCarloResult total_volume_padic_monte_carlo(const Multigraph& g, const LocalFieldParams& params,
                                                std::uint64_t samples, std::uint64_t seed) {
    if (params.q != params.p || !is_prime(params.p))
        throw DomainError("the residue oracle needs q prime (got q = " + std::to_string(params.q) + ")");
    if (samples < 2) throw DomainError("Monte Carlo needs at least two samples");
    const ResidueSetup s = residue_setup(g, params, UINT64_MAX);
    const auto p = static_cast<std::int64_t>(params.p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(0, s.modulus / p - 1);
    std::vector<std::int64_t> t(s.h1);
    std::vector<unsigned> nu(g.num_edges());
    // Welford running mean / variance
    double mean = 0, m2 = 0;
    for (std::uint64_t n = 1; n <= samples; ++n) {
        for (auto& ti : t) ti = p * pick(rng);
        valuations_of(s, t, params, nu);
        const double x = static_cast<double>(psi_at(s, nu));
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    const double h1 = static_cast<double>(s.h1);
    const double scale = std::pow(static_cast<double>(params.q - 1) / static_cast<double>(params.p), h1);
    const double sd = std::sqrt(m2 / static_cast<double>(samples - 1));
    const double truncation = static_cast<double>(s.monomials.size()) * h1 *
                              std::pow(static_cast<double>(params.p), -static_cast<double>(params.k));
    MonteCarloResult out;
    out.samples = samples;
    out.estimate = scale * mean;
    out.radius99 = 2.5758293035489 * scale * sd / std::sqrt(static_cast<double>(samples)) + truncation;
    return out;
}

Integer central_fibre_point_count(const Multigraph& g, std::uint64_t q) {
    require_q(q);
    return total_volume(g) * ipow(Integer(q), betti1(g));
}

bool trop_volume_check(const Multigraph& g, const Valuation& nu, std::uint64_t q) {
    const Rational lhs = fibre_volume(g, nu, q);
    const TropTorus torus = tropical_jacobian(g, nu.nu);
    return lhs == torus_factor(q, betti1(g)) * Rational(torus.covolume);
}

}  // namespace hyperkirch
