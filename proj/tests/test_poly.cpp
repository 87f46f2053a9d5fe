#include "hyperkirch/poly.hpp"

#include <doctest.h>

#include <random>

using namespace hyperkirch;

namespace {

MultilinearPoly random_poly(std::mt19937_64& rng, std::size_t vars) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vars; ++i) names.push_back("x" + std::to_string(i));
    MultilinearPoly p(names);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars); ++mask) {
        if (rng() % 3 != 0) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < vars; ++i)
            if (mask >> i & 1) idx.push_back(i);
        p.add_term(VariableSet::of(idx), coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("variable sets are canonical bitsets") {
    VariableSet s = VariableSet::of({3, 70, 1});
    CHECK(s.size() == 3);
    CHECK(s.contains(70));
    CHECK(s.indices() == std::vector<std::size_t>{1, 3, 70});
    s.erase(70);
    CHECK(s == VariableSet::of({1, 3}));
    s.erase(1);
    s.erase(3);
    CHECK(s.empty());
    CHECK(s == VariableSet{});
}

TEST_CASE("evaluation examples") {
    MultilinearPoly theta({"e1", "e2", "e3"});
    theta.add_term(VariableSet::of({0, 1}), 1);
    theta.add_term(VariableSet::of({0, 2}), 1);
    theta.add_term(VariableSet::of({1, 2}), 1);
    CHECK(theta.evaluate(std::vector<Integer>{1, 1, 1}) == 3);
    CHECK(theta.is_homogeneous(2));
    CHECK(theta.has_unit_coefficients());

    for (int N = 1; N <= 6; ++N)
        for (int n = 1; n <= 4; ++n) {
            std::vector<std::string> names;
            for (int i = 0; i < N; ++i) names.push_back("e" + std::to_string(i));
            MultilinearPoly cyc(names);
            for (int i = 0; i < N; ++i) cyc.add_term(VariableSet::of({std::size_t(i)}), 1);
            CHECK(cyc.evaluate(std::vector<Integer>(N, n)) == N * n);
        }

    std::mt19937_64 rng(1);
    const MultilinearPoly p = random_poly(rng, 5);
    Integer constant = 0;
    auto it = p.terms().find(VariableSet{});
    if (it != p.terms().end()) constant = it->second;
    CHECK(p.evaluate(std::vector<Integer>(5, 0)) == constant);

    CHECK_THROWS_AS(theta.evaluate(std::vector<Integer>{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(theta.evaluate(std::map<std::string, Integer>{{"e1", 1}, {"e2", 1}}), std::invalid_argument);
    CHECK(theta.evaluate(std::map<std::string, Integer>{{"e3", 2}, {"e1", 1}, {"e2", 1}}) == 5);
}

TEST_CASE("equality examples") {
    MultilinearPoly a({"x1", "x2"}), b({"x1", "x2"});
    a.add_term(VariableSet::of({0}), 1);
    b.add_term(VariableSet::of({1}), 1);
    CHECK_FALSE(equal(a, b));
    CHECK(equal(MultilinearPoly(), MultilinearPoly()));
    CHECK(equal(a, a.embed({"x2", "x1"})));
    CHECK_THROWS_AS(equal(a, MultilinearPoly({"x1"})), std::invalid_argument);
    CHECK_THROWS_AS(MultilinearPoly({"x", "x"}), std::invalid_argument);
}

TEST_CASE("zero coefficients are dropped") {
    MultilinearPoly p({"x"});
    p.add_term(VariableSet::of({0}), 3);
    p.add_term(VariableSet::of({0}), -3);
    CHECK(p.terms().empty());
    CHECK(p == MultilinearPoly({"x"}));
}

TEST_CASE("property: evaluation is affine in each variable") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const MultilinearPoly p = random_poly(rng, 4);
        std::vector<Integer> x(4);
        for (auto& v : x) v = d(rng);
        const std::size_t e = rng() % 4;
        const Integer a = d(rng), b = d(rng);
        auto at = [&](const Integer& v) {
            auto y = x;
            y[e] = v;
            return p.evaluate(y);
        };
        CHECK(at(a + b) == at(a) + at(b) - at(0));
    }
}

TEST_CASE("property: values on the cube determine the polynomial") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const MultilinearPoly p = random_poly(rng, 5);
        const auto q = interpolate_from_cube(p.variables(), [&](std::uint64_t mask) {
            std::vector<Integer> x(5);
            for (std::size_t i = 0; i < 5; ++i) x[i] = (mask >> i) & 1;
            return p.evaluate(x);
        });
        CHECK(q == p);
    }
}

TEST_CASE("sums and variable multiplication") {
    MultilinearPoly a({"x", "y"});
    a.add_term(VariableSet::of({0}), 2);
    MultilinearPoly b({"x", "y"});
    b.add_term(VariableSet::of({0}), -2);
    b.add_term(VariableSet{}, 7);
    const auto s = a + b;
    CHECK(s.terms().size() == 1);
    CHECK(s.evaluate(std::vector<Integer>{5, 5}) == 7);
    const auto t = b.times_variable("y");
    CHECK(t.evaluate(std::vector<Integer>{2, 3}) == 3 * (7 - 4));
    CHECK(t.is_homogeneous(1) == false);
    CHECK_THROWS(t.times_variable("y"));
}
