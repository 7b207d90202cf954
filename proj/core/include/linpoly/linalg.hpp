/*
   Copyright 2026 linpoly contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINPOLY_LINALG_HPP
#define LINPOLY_LINALG_HPP

#include <optional>

#include "linpoly/poly.hpp"
#include "linpoly/ratfun.hpp"

namespace linpoly {

/// Dense row-major matrix over a field type K.  Carries a zero prototype so
/// empty shapes still know their coefficient field.
template <class K>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, K zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)), a_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const K& sample) {
        Matrix m(n, n, sample.zero());
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = sample.one();
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<K>>& rows, const K& zero) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), zero);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const K& zero() const { return zero_; }
    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// M * v for a column vector v.
    std::vector<K> apply(const std::vector<K>& v) const {
        std::vector<K> out(rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    Matrix mul(const Matrix& o) const {
        Matrix out(rows_, o.cols_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
            }
        return out;
    }

private:
    std::size_t rows_, cols_;
    K zero_;
    std::vector<K> a_;
};

template <class K>
struct RrefResult {
    std::size_t rank;
    Matrix<K> rref;
    std::vector<std::vector<K>> kernel;  // pivot-normalized right-kernel basis
};

namespace detail {

/// Kernel basis from a reduced row echelon form (pivot columns ascending).
template <class K>
std::vector<std::vector<K>> kernel_from_rref(const Matrix<K>& R, const std::vector<std::size_t>& pivots) {
    const std::size_t n = R.cols();
    std::vector<long> pivot_of_col(n, -1);
    for (std::size_t k = 0; k < pivots.size(); ++k) pivot_of_col[pivots[k]] = long(k);
    std::vector<std::vector<K>> kernel;
    for (std::size_t j = 0; j < n; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        std::vector<K> v(n, R.zero());
        v[j] = R.zero().one();
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -R.at(k, j);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace detail

/// Reduced row echelon form with rank and a canonical right-kernel basis.
/// Pivots are the first nonzero entry in column order; no pivoting
/// heuristics, so the output is deterministic.
template <class K>
RrefResult<K> rref_kernel(Matrix<K> M) {
    const std::size_t rows = M.rows(), cols = M.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M.at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(M.at(p, j), M.at(r, j));
        K inv = M.at(r, c).one() / M.at(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!M.at(r, j).is_zero()) M.at(r, j) = inv * M.at(r, j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M.at(i, c).is_zero()) continue;
            K f = M.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!M.at(r, j).is_zero()) M.at(i, j) -= f * M.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<K> R(r, cols, M.zero());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) R.at(i, j) = M.at(i, j);
    auto kernel = detail::kernel_from_rref(R, pivots);
    return {r, std::move(R), std::move(kernel)};
}

/// Exact determinant by plain elimination.
template <class K>
K det(Matrix<K> M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant requires a square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return M.zero().one();
    K result = M.zero().one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M.at(p, c).is_zero()) ++p;
        if (p == n) return M.zero();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(p, j), M.at(c, j));
            result = -result;
        }
        result = result * M.at(c, c);
        K inv = M.at(c, c).one() / M.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M.at(i, c).is_zero()) continue;
            K f = inv * M.at(i, c);
            for (std::size_t j = c; j < n; ++j)
                if (!M.at(c, j).is_zero()) M.at(i, j) -= f * M.at(c, j);
        }
    }
    return result;
}

/// Fraction-free variants over GF(q)(t): rows are cleared to polynomials and
/// eliminated with division-exact updates to limit intermediate blowup.
RatFun det(const Matrix<RatFun>& M);
RrefResult<RatFun> rref_kernel(const Matrix<RatFun>& M);

/**
 * Incrementally grown row space with dependence extraction.  Rows are kept
 * in pivot-normalized echelon form together with their expressions in terms
 * of the original inserted vectors, so the first linear dependence is
 * reported as an exact combination.
 */
template <class K>
class SpanTracker {
public:
    SpanTracker(std::size_t cols, K zero) : cols_(cols), zero_(std::move(zero)) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return count_; }

    /// Insert v.  Returns the combination c (size = number of previously
    /// inserted vectors) with v = sum_i c_i * original_i when dependent,
    /// nullopt when v extends the span.
    std::optional<std::vector<K>> add(std::vector<K> v) {
        std::vector<K> combo(count_, zero_);
        reduce(v, combo);
        ++count_;
        std::size_t piv = first_nonzero(v);
        if (piv == cols_) return combo;  // v = sum combo_i * orig_i
        K inv = zero_.one() / v[piv];
        for (K& x : v) x = inv * x;
        for (K& x : combo) x = -(inv * x);
        combo.resize(count_, zero_);
        combo[count_ - 1] = inv;  // row = inv*(v - sum ...) expressed in originals
        rows_.push_back(std::move(v));
        combos_.push_back(std::move(combo));
        pivots_.push_back(piv);
        return std::nullopt;
    }

    bool in_span(const std::vector<K>& v) const {
        std::vector<K> w = v;
        std::vector<K> combo;
        reduce(w, combo);
        return first_nonzero(w) == cols_;
    }

private:
    // rows are kept in insertion order; each stored row has zeros at the
    // pivots of all earlier rows, so one sequential pass reduces fully
    void reduce(std::vector<K>& v, std::vector<K>& combo) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const K& f = v[pivots_[k]];
            if (f.is_zero()) continue;
            K c = f;  // pivot entries are normalized to 1
            for (std::size_t j = pivots_[k]; j < cols_; ++j)
                if (!rows_[k][j].is_zero()) v[j] -= c * rows_[k][j];
            for (std::size_t j = 0; j < combo.size() && j < combos_[k].size(); ++j)
                if (!combos_[k][j].is_zero()) combo[j] += c * combos_[k][j];
        }
    }

    std::size_t first_nonzero(const std::vector<K>& v) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) return j;
        return cols_;
    }

    std::size_t cols_;
    K zero_;
    std::size_t count_ = 0;
    std::vector<std::vector<K>> rows_;
    std::vector<std::vector<K>> combos_;
    std::vector<std::size_t> pivots_;
};

}  // namespace linpoly

#endif
