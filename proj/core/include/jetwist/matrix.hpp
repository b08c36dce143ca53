/*
   Copyright 2026 The jetwist Authors

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

#ifndef JETWIST_MATRIX_HPP
#define JETWIST_MATRIX_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "jetwist/expr.hpp"

namespace jetwist {

/// Dense matrix of expressions. Entries are normalized on construction and
/// never change afterwards; the determinant is computed once and shared by copies.
class MatrixExpr {
public:
    MatrixExpr() : MatrixExpr(0, 0) {}
    MatrixExpr(std::size_t rows, std::size_t cols);
    explicit MatrixExpr(std::vector<std::vector<Expr>> rows);

    static MatrixExpr identity(std::size_t n);
    static MatrixExpr zero(std::size_t rows, std::size_t cols) { return MatrixExpr(rows, cols); }
    static MatrixExpr scalar(std::size_t n, const Expr& c);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const Expr& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    /// Throws DimensionMismatch for a non-square matrix.
    const Expr& determinant() const;
    /// Adjugate over determinant. Throws SingularMatrix when the determinant vanishes.
    MatrixExpr inverse() const;

    MatrixExpr map(const std::function<Expr(const Expr&)>& f) const;
    MatrixExpr scaled(const Expr& c) const;
    MatrixExpr transpose() const;
    std::vector<Expr> apply(const std::vector<Expr>& v) const;

    friend MatrixExpr operator+(const MatrixExpr& a, const MatrixExpr& b);
    friend MatrixExpr operator-(const MatrixExpr& a, const MatrixExpr& b);
    friend MatrixExpr operator*(const MatrixExpr& a, const MatrixExpr& b);

    /// Every entry of the difference vanishes.
    bool equals(const MatrixExpr& o) const;
    bool is_zero() const;

    /// "[[a, b], [c, d]]" with canonical entries.
    std::string render() const;

private:
    struct DeterminantCache;

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Expr> entries_;
    std::shared_ptr<DeterminantCache> det_;
};

/// [A, B] = AB - BA.
MatrixExpr commutator(const MatrixExpr& a, const MatrixExpr& b);

}  // namespace jetwist

#endif
