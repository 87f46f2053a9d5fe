#include "hyperkirch/kirchhoff.hpp"
#include "hyperkirch/lattice.hpp"
#include "support/zoo.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace hyperkirch;

namespace {

// Laplace expansion along the first row; independent of both elimination codes.
Integer laplace_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        const Integer term = m(0, j) * laplace_det(minor);
        total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

Integer gcd_of_minors_order1(const IntMatrix& m) {
    Integer g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g = gcd(g, m(i, j));
    return g;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
    const auto s = smith_normal_form(IntMatrix{{2, -1}, {-1, 2}});
    CHECK(s.diagonal == (IntMatrix{{1, 0}, {0, 3}}));
    CHECK(smith_normal_form(IntMatrix::identity(4)).diagonal == IntMatrix::identity(4));
    CHECK(smith_normal_form(IntMatrix{{6}}).diagonal == (IntMatrix{{6}}));
    CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diagonal ==
          (IntMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
}

TEST_CASE("tau matrix examples") {
    // theta with forest {e3}: basis e1 - e3, e2 - e3
    const Multigraph theta = graphs::theta();
    const auto basis = cycle_basis(theta, {2});
    const long a = 2, b = 3, c = 5;
    CHECK(tau_matrix(theta, {a, b, c}, basis) == (IntMatrix{{a + c, c}, {c, b + c}}));
    CHECK(tau_matrix(graphs::single_loop(), {9}) == (IntMatrix{{9}}));
    const Multigraph c4 = graphs::cycle(4);
    CHECK(tau_matrix(c4, {1, 2, 3, 4}) == (IntMatrix{{10}}));
}

TEST_CASE("component group examples") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto g = component_group(graphs::cycle(n), std::vector<Integer>(n, 1));
        CHECK(g.invariant_factors == std::vector<Integer>{Integer(static_cast<unsigned long>(n))});
        CHECK(g.order == static_cast<unsigned long>(n));
    }
    const auto t = component_group(graphs::theta(), {1, 1, 1});
    CHECK(t.invariant_factors == std::vector<Integer>{1, 3});
    CHECK(component_group(graphs::single_loop(), {11}).order == 11);
    CHECK_THROWS_AS(component_group(graphs::theta(), {1, 0, 1}), DomainError);
}

TEST_CASE("tropical Jacobian examples") {
    const auto c = tropical_jacobian(graphs::cycle(5), {1, 2, 3, 4, 5});
    CHECK(c.rank == 1);
    CHECK(c.covolume == 15);
    CHECK(tropical_jacobian(graphs::theta(), {1, 1, 1}).covolume == 3);
    const auto tree = tropical_jacobian(graphs::path(4), {2, 2, 2});
    CHECK(tree.rank == 0);
    CHECK(tree.covolume == 1);
}

TEST_CASE("property: Bareiss and rational elimination match Laplace expansion") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng() % 6;
        const IntMatrix m = random_matrix(rng, n, n, 9);
        const Integer expect = laplace_det(m);
        CHECK(determinant(m) == expect);
        std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) q[i][j] = m(i, j);
        CHECK(determinant(q) == Rational(expect));
    }
}

TEST_CASE("property: Smith forms are valid and keep determinantal divisors") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const IntMatrix m = random_matrix(rng, r, c, trial % 2 ? 3 : 30);
        const SmithForm s = smith_normal_form(m);
        CHECK(is_valid_smith_form(m, s));
        CHECK(s.left * m * s.right == s.diagonal);
        const std::size_t k = std::min(r, c);
        for (std::size_t i = 0; i + 1 < k; ++i) {
            const Integer& a = s.diagonal(i, i);
            const Integer& b = s.diagonal(i + 1, i + 1);
            CHECK(a >= 0);
            if (a == 0) CHECK(b == 0);
            else CHECK(b % a == 0);
        }
        // first determinantal divisor: gcd of all entries
        CHECK(s.diagonal(0, 0) == gcd_of_minors_order1(m));
        if (r == c) CHECK(abs(determinant(m)) == abs(laplace_det(s.diagonal)));
    }
}

TEST_CASE("property: three-way agreement of determinant, group order and Psi") {
    std::mt19937_64 rng(41);
    for (const auto& g : hktest::zoo(6)) {
        const MultilinearPoly psi = psi_enum(g);
        for (int trial = 0; trial < 3; ++trial) {
            const auto x = hktest::random_integers(rng, g.num_edges(), 1, 5);
            const IntMatrix t = tau_matrix(g, x);
            const Integer value = psi.evaluate(x);
            CHECK(abs(determinant(t)) == value);
            CHECK(component_group(g, x).order == value);
            CHECK(t.is_symmetric());
            // positive definite: every leading principal minor is positive
            for (std::size_t k = 1; k <= t.rows(); ++k) {
                IntMatrix lead(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) lead(i, j) = t(i, j);
                CHECK(determinant(lead) > 0);
            }
        }
        const auto critical = component_group(g, std::vector<Integer>(g.num_edges(), 1));
        CHECK(critical.order == Integer(static_cast<unsigned long>(hktest::brute_force_forests(g).size())));
    }
}

TEST_CASE("property: orientation and forest choice leave the invariants alone") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        const Multigraph g = hktest::random_graph(rng, 5, 6);
        const auto x = hktest::random_integers(rng, g.num_edges(), 1, 5);
        const ComponentGroup base = component_group(g, x);
        const TropTorus torus = tropical_jacobian(g, x);

        std::vector<std::size_t> flip;
        for (std::size_t e = 0; e < g.num_edges(); ++e)
            if (rng() & 1) flip.push_back(e);
        const Multigraph r = reverse_edges(g, flip);
        CHECK(component_group(r, x) == base);
        CHECK(same_torus_invariants(tropical_jacobian(r, x), torus));

        const auto forests = spanning_forests(g);
        const auto basis = cycle_basis(g, forests[rng() % forests.size()]);
        CHECK(component_group(g, x, basis) == base);
        CHECK(determinant(tau_matrix(g, x, basis)) == torus.covolume);
    }
}
