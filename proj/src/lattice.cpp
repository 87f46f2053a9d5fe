#include "hyperkirch/lattice.hpp"

#include <cassert>
#include <stdexcept>

namespace hyperkirch {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimensions do not match");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix a = input;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

namespace {

// Quotient rounded to nearest, so remainders land in (-|d|/2, |d|/2].
Integer nearest_quotient(const Integer& a, const Integer& d) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    Integer twice = 2 * r;
    if (abs(twice) > abs(d)) ++q;  // floor remainder shares the sign of d, so r - d is the nearer one
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& d = s.diagonal;
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t t = 0; t < steps; ++t) {
        while (true) {
            // pivot: smallest nonzero magnitude in the trailing block
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (d(i, j) != 0 && (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) break;  // trailing block is zero
            d.swap_rows(t, pr);
            s.left.swap_rows(t, pr);
            d.swap_cols(t, pc);
            s.right.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                const Integer q = -nearest_quotient(d(i, t), d(t, t));
                d.add_row_multiple(i, t, q);
                s.left.add_row_multiple(i, t, q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                const Integer q = -nearest_quotient(d(t, j), d(t, t));
                d.add_col_multiple(j, t, q);
                s.right.add_col_multiple(j, t, q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold any offending row into row t and retry
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        d.add_row_multiple(t, i, 1);
                        s.left.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            s.left.negate_row(t);
        }
    }
#ifndef NDEBUG
    assert(is_valid_smith_form(m, s));
#endif
    return s;
}

bool is_valid_smith_form(const IntMatrix& m, const SmithForm& s) {
    if (s.left * m * s.right != s.diagonal) return false;
    if (!s.diagonal.is_diagonal()) return false;
    if (abs(determinant(s.left)) != 1 || abs(determinant(s.right)) != 1) return false;
    const std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < steps; ++i) {
        if (s.diagonal(i, i) < 0) return false;
        if (i + 1 < steps) {
            const Integer& a = s.diagonal(i, i);
            const Integer& b = s.diagonal(i + 1, i + 1);
            if (a == 0 ? b != 0 : !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return false;
        }
    }
    return true;
}

IntMatrix tau_matrix(const Multigraph& g, const std::vector<Integer>& x, const std::vector<EdgeVector>& basis) {
    if (x.size() != g.num_edges()) throw std::invalid_argument("weight vector length does not match the graph");
    const std::size_t r = basis.size();
    IntMatrix t(r, r);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        for (std::size_t i = 0; i < r; ++i) {
            const auto gi = basis[i].values.at(e);
            if (gi == 0) continue;
            for (std::size_t j = 0; j < r; ++j) {
                const auto gj = basis[j].values[e];
                if (gj != 0) t(i, j) += x[e] * (gi * gj);
            }
        }
    }
    return t;
}

IntMatrix tau_matrix(const Multigraph& g, const std::vector<Integer>& x) {
    return tau_matrix(g, x, cycle_basis(g));
}

namespace {

void require_positive(const Multigraph& g, const std::vector<Integer>& x) {
    if (x.size() != g.num_edges()) throw std::invalid_argument("weight vector length does not match the graph");
    for (std::size_t e = 0; e < x.size(); ++e)
        if (x[e] < 1) throw DomainError("weight of edge '" + g.edge(e).id + "' must be positive");
}

}  // namespace

ComponentGroup component_group(const Multigraph& g, const std::vector<Integer>& x,
                               const std::vector<EdgeVector>& basis) {
    require_positive(g, x);
    const IntMatrix t = tau_matrix(g, x, basis);
    const SmithForm s = smith_normal_form(t);
    ComponentGroup out;
    out.order = 1;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        out.invariant_factors.push_back(s.diagonal(i, i));
        out.order *= s.diagonal(i, i);
    }
    return out;
}

ComponentGroup component_group(const Multigraph& g, const std::vector<Integer>& x) {
    return component_group(g, x, cycle_basis(g));
}

TropTorus tropical_jacobian(const Multigraph& g, const std::vector<Integer>& w) {
    require_positive(g, w);
    TropTorus torus;
    torus.gram = tau_matrix(g, w);
    torus.rank = torus.gram.rows();
    torus.covolume = abs(determinant(torus.gram));
    return torus;
}

bool same_torus_invariants(const TropTorus& a, const TropTorus& b) {
    if (a.rank != b.rank || a.covolume != b.covolume) return false;
    const auto sa = smith_normal_form(a.gram), sb = smith_normal_form(b.gram);
    for (std::size_t i = 0; i < a.rank; ++i)
        if (sa.diagonal(i, i) != sb.diagonal(i, i)) return false;
    return true;
}

}  // namespace hyperkirch
