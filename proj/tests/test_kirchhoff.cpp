#include "hyperkirch/kirchhoff.hpp"
#include "hyperkirch/lattice.hpp"
#include "support/zoo.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hyperkirch;

namespace {

MultilinearPoly sum_of_variables(const Multigraph& g) {
    MultilinearPoly p(g.edge_ids());
    for (std::size_t e = 0; e < g.num_edges(); ++e) p.add_term(VariableSet::of({e}), 1);
    return p;
}

// Psi built straight from the subset brute force.
MultilinearPoly psi_brute(const Multigraph& g) {
    MultilinearPoly p(g.edge_ids());
    for (const auto& forest : hktest::brute_force_forests(g)) {
        std::vector<std::size_t> complement;
        for (std::size_t e = 0; e < g.num_edges(); ++e)
            if (std::find(forest.begin(), forest.end(), e) == forest.end()) complement.push_back(e);
        p.add_term(VariableSet::of(complement), 1);
    }
    return p;
}

std::vector<Rational> as_rationals(const std::vector<Integer>& x) {
    return {x.begin(), x.end()};
}

}  // namespace

TEST_CASE("enumeration examples") {
    const Multigraph loop = graphs::single_loop();
    CHECK(psi_enum(loop) == sum_of_variables(loop));

    MultilinearPoly theta(graphs::theta().edge_ids());
    theta.add_term(VariableSet::of({0, 1}), 1);
    theta.add_term(VariableSet::of({0, 2}), 1);
    theta.add_term(VariableSet::of({1, 2}), 1);
    CHECK(psi_enum(graphs::theta()) == theta);
    CHECK(psi_delcon(graphs::theta()) == theta);

    const Multigraph path = graphs::path(3);
    CHECK(psi_enum(path) == MultilinearPoly::constant(path.edge_ids(), 1));
}

TEST_CASE("deletion-contraction examples") {
    CHECK(psi_delcon(graphs::single_loop()) == sum_of_variables(graphs::single_loop()));
    for (std::size_t n = 1; n <= 9; ++n) {
        const Multigraph c = graphs::cycle(n);
        CHECK(psi_delcon(c) == sum_of_variables(c));
        CHECK(psi_enum(c) == sum_of_variables(c));
    }
}

TEST_CASE("determinant and matrix-tree examples") {
    const Multigraph loop = graphs::single_loop();
    CHECK(psi_det(loop, {7}) == 7);
    CHECK(psi_det(graphs::path(4), {3, 5, 9}) == 1);
    CHECK(matrix_tree_dual(loop, {Rational(7)}) == 7);
    CHECK(matrix_tree_dual(graphs::cycle(3), {1, 1, 1}) == 3);
    // theta: 2x2 Gram matrix [[a+c, c], [c, b+c]] on the default basis
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b)
            for (long c = 1; c <= 4; ++c) {
                const Integer expect = (a + c) * (b + c) - c * c;
                CHECK(psi_det(graphs::theta(), {a, b, c}) == expect);
                CHECK(matrix_tree_dual(graphs::theta(), {a, b, c}) == expect);
            }
    CHECK_THROWS_AS(matrix_tree_dual(disjoint_union(loop, loop), {1, 1}), DomainError);
    CHECK_THROWS_AS(matrix_tree_dual(loop, {Rational(0)}), DomainError);
}

TEST_CASE("property: engines agree with the subset brute force on the zoo") {
    std::mt19937_64 rng(7);
    std::size_t graphs_checked = 0;
    for (const auto& g : hktest::zoo(6)) {
        const MultilinearPoly reference = psi_brute(g);
        const MultilinearPoly e = psi_enum(g);
        DelconStats stats;
        const MultilinearPoly d = psi_delcon(g, &stats);
        CHECK(e == reference);
        CHECK(d == reference);
        CHECK(e.has_unit_coefficients());
        CHECK(e.is_homogeneous(betti1(g)));
        CHECK(e.evaluate(std::vector<Integer>(g.num_edges(), 1)) ==
              Integer(static_cast<unsigned long>(spanning_forests(g).size())));

        for (int trial = 0; trial < 10; ++trial) {
            const auto x = hktest::random_integers(rng, g.num_edges(), -10, 10);
            CHECK(psi_det(g, x) == e.evaluate(x));
        }
        if (hktest::connected(g)) {
            for (int trial = 0; trial < 5; ++trial) {
                const auto x = hktest::random_integers(rng, g.num_edges(), 1, 9);
                CHECK(matrix_tree_dual(g, as_rationals(x)) == Rational(e.evaluate(x)));
            }
        }
        ++graphs_checked;
    }
    CHECK(graphs_checked > 1000);
}

TEST_CASE("property: the determinant engine reconstructs the polynomial from the cube") {
    for (const auto& g : hktest::zoo(5)) {
        const auto rebuilt = interpolate_from_cube(g.edge_ids(), [&](std::uint64_t mask) {
            std::vector<Integer> x(g.num_edges());
            for (std::size_t e = 0; e < x.size(); ++e) x[e] = (mask >> e) & 1;
            return psi_det(g, x);
        });
        CHECK(rebuilt == psi_enum(g));
    }
}

TEST_CASE("property: orientation, labelling and basis choice do not change Psi") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 150; ++trial) {
        const Multigraph g = hktest::random_graph(rng, 5, 7);
        const MultilinearPoly psi = psi_enum(g);
        std::vector<std::size_t> flip;
        for (std::size_t e = 0; e < g.num_edges(); ++e)
            if (rng() & 1) flip.push_back(e);
        CHECK(psi_delcon(reverse_edges(g, flip)) == psi);

        const auto x = hktest::random_integers(rng, g.num_edges(), -6, 6);
        const Integer value = psi.evaluate(x);
        CHECK(psi_det(reverse_edges(g, flip), x) == value);

        // every maximal forest gives a basis with the same determinant
        const auto forests = spanning_forests(g);
        const auto& forest = forests[rng() % forests.size()];
        const auto basis = cycle_basis(g, forest);
        CHECK(determinant(tau_matrix(g, x, basis)) == value);

        const Multigraph h = hktest::shuffled(g, rng);
        const MultilinearPoly psi_h = psi_delcon(h);
        CHECK(psi_h.terms().size() == psi.terms().size());
        CHECK(psi_h.evaluate(std::vector<Integer>(h.num_edges(), 3)) ==
              psi.evaluate(std::vector<Integer>(g.num_edges(), 3)));
    }
}

TEST_CASE("property: Psi is multiplicative over disjoint unions") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const Multigraph a = hktest::random_graph(rng, 3, 3);
        const Multigraph b = hktest::random_graph(rng, 3, 3);
        const Multigraph u = disjoint_union(a, b);
        const auto xa = hktest::random_integers(rng, a.num_edges(), -4, 4);
        const auto xb = hktest::random_integers(rng, b.num_edges(), -4, 4);
        std::vector<Integer> x = xa;
        x.insert(x.end(), xb.begin(), xb.end());
        CHECK(psi_delcon(u).evaluate(x) == psi_enum(a).evaluate(xa) * psi_enum(b).evaluate(xb));
    }
}

TEST_CASE("property: the three recursion cases") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const Multigraph g = hktest::random_graph(rng, 5, 1 + rng() % 7);
        const MultilinearPoly psi = psi_enum(g);
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            const std::string id = g.edge(e).id;
            switch (classify_edge(g, e)) {
                case EdgeKind::loop:
                    CHECK(psi == psi_enum(delete_edge(g, id)).embed(g.edge_ids()).times_variable(id));
                    break;
                case EdgeKind::bridge:
                    CHECK(psi == psi_enum(contract_edge(g, id)).embed(g.edge_ids()));
                    break;
                case EdgeKind::ordinary:
                    CHECK(psi == psi_enum(contract_edge(g, id)).embed(g.edge_ids()) +
                                     psi_enum(delete_edge(g, id)).embed(g.edge_ids()).times_variable(id));
                    break;
            }
        }
    }
}

TEST_CASE("property: fragmentation counts forests") {
    std::mt19937_64 rng(15);
    for (const auto& g : hktest::zoo(4)) {
        const MultilinearPoly psi = psi_enum(g);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<std::int64_t> n;
            std::vector<Integer> x;
            for (std::size_t e = 0; e < g.num_edges(); ++e) {
                n.push_back(1 + static_cast<std::int64_t>(rng() % 4));
                x.emplace_back(static_cast<long>(n.back()));
            }
            CHECK(Integer(static_cast<unsigned long>(hktest::brute_force_forests(fragment(g, n)).size())) ==
                  psi.evaluate(x));
        }
    }
}

TEST_CASE("memoisation collapses isomorphic minors") {
    DelconStats stats;
    psi_delcon(graphs::banana(8), &stats);
    CHECK(stats.memo_hits > 0);
    CHECK(stats.calls < 200);
}
