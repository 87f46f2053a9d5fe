#pragma once

#include "hyperkirch/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hyperkirch {

/// Set of variable indices stored as a bitset. Trailing zero words are never
/// kept, so equal sets compare equal structurally.
class VariableSet {
public:
    VariableSet() = default;
    static VariableSet of(const std::vector<std::size_t>& indices);

    bool contains(std::size_t i) const;
    void insert(std::size_t i);
    void erase(std::size_t i);
    std::size_t size() const;
    bool empty() const { return words_.empty(); }
    std::vector<std::size_t> indices() const;

    auto operator<=>(const VariableSet&) const = default;

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

/// Integer polynomial in which every variable appears with exponent at most
/// one. Terms are keyed by the set of variables in the monomial.
class MultilinearPoly {
public:
    using Terms = std::map<VariableSet, Integer>;

    MultilinearPoly() = default;
    /// Throws std::invalid_argument on repeated variable names.
    explicit MultilinearPoly(std::vector<std::string> variables);

    static MultilinearPoly constant(std::vector<std::string> variables, const Integer& c);

    const std::vector<std::string>& variables() const { return variables_; }
    const Terms& terms() const { return terms_; }
    std::size_t variable_index(const std::string& name) const;

    /// Adds c to the coefficient of the monomial; zero coefficients are dropped.
    void add_term(const VariableSet& monomial, const Integer& c);

    /// Values aligned with variables(). Throws on a length mismatch.
    Integer evaluate(const std::vector<Integer>& x) const;
    /// Throws std::invalid_argument when a variable has no value.
    Integer evaluate(const std::map<std::string, Integer>& x) const;

    /// Same polynomial over a larger (or reordered) variable list.
    MultilinearPoly embed(const std::vector<std::string>& variables) const;
    /// Multiplies by the named variable, which must not occur in any term.
    MultilinearPoly times_variable(const std::string& name) const;

    MultilinearPoly operator+(const MultilinearPoly& other) const;

    /// True iff every term has |monomial| == degree.
    bool is_homogeneous(std::size_t degree) const;
    bool has_unit_coefficients() const;

    /// Structural equality including variable order.
    bool operator==(const MultilinearPoly& other) const = default;

private:
    std::vector<std::string> variables_;
    Terms terms_;
};

/// Equality over the same variable set, regardless of variable order.
/// Throws std::invalid_argument when the variable sets differ.
bool equal(const MultilinearPoly& p, const MultilinearPoly& q);

/// Rebuilds a multilinear polynomial from its values on {0,1}^E by Moebius
/// inversion (finite differences). Used to cross-check evaluation-only engines.
template <typename ValueOnSubset>
MultilinearPoly interpolate_from_cube(std::vector<std::string> variables, ValueOnSubset&& value) {
    const std::size_t n = variables.size();
    if (n >= 30) throw std::invalid_argument("cube interpolation limited to < 30 variables");
    std::vector<Integer> f(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < f.size(); ++mask) f[mask] = value(mask);
    for (std::size_t bit = 0; bit < n; ++bit)
        for (std::size_t mask = 0; mask < f.size(); ++mask)
            if (mask & (std::size_t{1} << bit)) f[mask] -= f[mask ^ (std::size_t{1} << bit)];
    MultilinearPoly p(std::move(variables));
    for (std::size_t mask = 0; mask < f.size(); ++mask) {
        if (f[mask] == 0) continue;
        std::vector<std::size_t> idx;
        for (std::size_t bit = 0; bit < n; ++bit)
            if (mask & (std::size_t{1} << bit)) idx.push_back(bit);
        p.add_term(VariableSet::of(idx), f[mask]);
    }
    return p;
}

}  // namespace hyperkirch
