/*
   Copyright 2026 The hfrac authors

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

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hfrac/error.hpp"
#include "hfrac/polynomial.hpp"

namespace hfrac {

/// Exact division a / b in the coefficient ring. The generic form multiplies
/// by the inverse (fields); the polynomial overload performs checked long
/// division so elimination stays fraction-free over polynomial rings.
template <class R>
R ring_exact_div(const R& a, const R& b) {
    return a * b.inverse();
}

template <class T>
Polynomial<T> ring_exact_div(const Polynomial<T>& a, const Polynomial<T>& b) {
    return Polynomial<T>::exact_divide(a, b);
}

/// Dense row-major matrix over an exact coefficient ring.
template <class R>
class Matrix {
   public:
    Matrix(long rows, long cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows * cols), R::zero()) {
        if (rows < 0 || cols < 0) {
            throw StructureError("Matrix: negative dimension");
        }
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    R& at(long i, long j) { return data_[index(i, j)]; }
    const R& at(long i, long j) const { return data_[index(i, j)]; }

    /// The n x n Hankel matrix (c_{i+j})_{0 <= i,j < n} of a coefficient
    /// sequence c_0, c_1, ...; requires at least 2n-1 terms.
    static Matrix hankel(const std::vector<R>& c, long n) {
        if (n < 0) throw StructureError("Matrix::hankel: negative order");
        if (static_cast<long>(c.size()) < (n == 0 ? 0 : 2 * n - 1)) {
            throw StructureError("Matrix::hankel: sequence too short");
        }
        Matrix m(n, n);
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                m.at(i, j) = c[static_cast<std::size_t>(i + j)];
            }
        }
        return m;
    }

   private:
    std::size_t index(long i, long j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
            throw StructureError("Matrix: index out of range");
        }
        return static_cast<std::size_t>(i * cols_ + j);
    }

    long rows_;
    long cols_;
    std::vector<R> data_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division performed is exact in the ring, so the computation is
/// valid over any integral domain with ring_exact_div support; the empty
/// matrix has determinant one.
template <class R>
R determinant(Matrix<R> m) {
    if (m.rows() != m.cols()) {
        throw StructureError("determinant: matrix is not square");
    }
    const long n = m.rows();
    if (n == 0) return R::one();
    bool negate = false;
    R prev = R::one();
    for (long k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            long swap_row = -1;
            for (long i = k + 1; i < n; ++i) {
                if (!m.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return R::zero();
            for (long j = 0; j < n; ++j) {
                std::swap(m.at(k, j), m.at(swap_row, j));
            }
            negate = !negate;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                R num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = ring_exact_div(num, prev);
            }
            m.at(i, k) = R::zero();
        }
        prev = m.at(k, k);
    }
    R det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

/// The Hankel determinant H_n = det (c_{i+j})_{0 <= i,j < n}, with H_0 = 1.
template <class R>
R hankel_determinant(const std::vector<R>& c, long n) {
    return determinant(Matrix<R>::hankel(c, n));
}

/// H_0, H_1, ..., H_{n_max}; requires 2*n_max - 1 sequence terms.
template <class R>
std::vector<R> hankel_sequence(const std::vector<R>& c, long n_max) {
    std::vector<R> h;
    h.reserve(static_cast<std::size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        h.push_back(hankel_determinant(c, n));
    }
    return h;
}

}  // namespace hfrac
