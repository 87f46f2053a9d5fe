#pragma once

#include "hyperkirch/graph.hpp"
#include "hyperkirch/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hyperkirch {

/// Dense row-major matrix of exact integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix transpose() const;
    bool is_symmetric() const;
    bool is_diagonal() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant; the empty matrix has determinant 1.
Integer determinant(const IntMatrix& m);

/// Exact rational determinant by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

struct SmithForm {
    IntMatrix left;      // U, unimodular
    IntMatrix diagonal;  // D = U * M * V
    IntMatrix right;     // V, unimodular
};

/// Smith normal form with transforms. Diagonal entries are nonnegative and
/// each divides the next; zeros come last.
SmithForm smith_normal_form(const IntMatrix& m);

/// Checks U*M*V == D, D diagonal with a divisibility chain, and |det U| =
/// |det V| = 1 for square transforms.
bool is_valid_smith_form(const IntMatrix& m, const SmithForm& s);

/// Gram matrix of the weighted pairing on the given cycle basis:
/// entry (i, j) = sum_e x_e <gamma_i, e> <gamma_j, e>.
IntMatrix tau_matrix(const Multigraph& g, const std::vector<Integer>& x,
                     const std::vector<EdgeVector>& basis);
IntMatrix tau_matrix(const Multigraph& g, const std::vector<Integer>& x);

struct ComponentGroup {
    /// d_1 | d_2 | ... | d_r, unit factors included; 0 marks an infinite factor.
    std::vector<Integer> invariant_factors;
    /// Product of the factors; 0 when some factor is infinite.
    Integer order;

    bool operator==(const ComponentGroup&) const = default;
};

/// Cokernel of tau_x : H_1 -> H^1. Requires x_e >= 1 for every edge.
ComponentGroup component_group(const Multigraph& g, const std::vector<Integer>& x);
ComponentGroup component_group(const Multigraph& g, const std::vector<Integer>& x,
                               const std::vector<EdgeVector>& basis);

/// Flat torus H^1(R) / tau_w(H_1(Z)) recorded by its Gram matrix.
struct TropTorus {
    std::size_t rank = 0;
    IntMatrix gram;
    Integer covolume;
};

TropTorus tropical_jacobian(const Multigraph& g, const std::vector<Integer>& w);

/// Flat tori are compared through rank, covolume and the invariant factors of
/// the Gram matrix; these are invariants of unimodular congruence.
bool same_torus_invariants(const TropTorus& a, const TropTorus& b);

}  // namespace hyperkirch
