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

#include "jetwist/matrix.hpp"

#include <mutex>

#include "jetwist/canonical.hpp"
#include "jetwist/errors.hpp"

namespace jetwist {

struct MatrixExpr::DeterminantCache {
    std::once_flag once;
    Expr value;
};

MatrixExpr::MatrixExpr(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Expr(0)), det_(std::make_shared<DeterminantCache>()) {}

MatrixExpr::MatrixExpr(std::vector<std::vector<Expr>> rows) : MatrixExpr(rows.size(), rows.empty() ? 0 : rows[0].size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
        if (rows[i].size() != cols_) throw DimensionMismatch("matrix rows differ in length");
        for (std::size_t j = 0; j < cols_; ++j) entries_[i * cols_ + j] = normalize(rows[i][j]);
    }
}

MatrixExpr MatrixExpr::identity(std::size_t n) { return scalar(n, Expr(1)); }

MatrixExpr MatrixExpr::scalar(std::size_t n, const Expr& c) {
    std::vector<std::vector<Expr>> rows(n, std::vector<Expr>(n, Expr(0)));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = c;
    return MatrixExpr(std::move(rows));
}

namespace {

// Cofactor expansion along the first row of the submatrix given by row/column lists.
Expr det_rec(const MatrixExpr& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.size() == 1) return m(rows[0], cols[0]);
    std::vector<Expr> terms;
    const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Expr& a = m(rows[0], cols[k]);
        if (a.is_zero_constant()) continue;
        std::vector<std::size_t> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(k));
        Expr t = a * det_rec(m, sub_rows, sub_cols);
        terms.push_back(k % 2 == 0 ? t : -t);
    }
    return normalize(sum(std::move(terms)));
}

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

const Expr& MatrixExpr::determinant() const {
    if (!is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    std::call_once(det_->once, [&] { det_->value = rows_ == 0 ? Expr(1) : det_rec(*this, iota(rows_), iota(cols_)); });
    return det_->value;
}

MatrixExpr MatrixExpr::inverse() const {
    const Expr& d = determinant();
    if (vanishes(d)) throw SingularMatrix("determinant " + jetwist::render(d) + " vanishes identically");
    const std::size_t n = rows_;
    std::vector<std::vector<Expr>> out(n, std::vector<Expr>(n));
    if (n == 1) {
        out[0][0] = pow(d, -1);
        return MatrixExpr(std::move(out));
    }
    const Expr inv = pow(d, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Adjugate entry (i, j) is the (j, i) cofactor.
            std::vector<std::size_t> rs = iota(n);
            std::vector<std::size_t> cs = iota(n);
            rs.erase(rs.begin() + static_cast<std::ptrdiff_t>(j));
            cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
            Expr c = det_rec(*this, rs, cs);
            if ((i + j) % 2 != 0) c = -c;
            out[i][j] = c * inv;
        }
    }
    return MatrixExpr(std::move(out));
}

MatrixExpr MatrixExpr::map(const std::function<Expr(const Expr&)>& f) const {
    std::vector<std::vector<Expr>> out(rows_, std::vector<Expr>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = f((*this)(i, j));
    MatrixExpr m(std::move(out));
    m.rows_ = rows_;
    m.cols_ = cols_;
    return m;
}

MatrixExpr MatrixExpr::scaled(const Expr& c) const {
    return map([&](const Expr& e) { return c * e; });
}

MatrixExpr MatrixExpr::transpose() const {
    std::vector<std::vector<Expr>> out(cols_, std::vector<Expr>(rows_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[j][i] = (*this)(i, j);
    return MatrixExpr(std::move(out));
}

std::vector<Expr> MatrixExpr::apply(const std::vector<Expr>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Expr> out;
    for (std::size_t i = 0; i < rows_; ++i) {
        std::vector<Expr> terms;
        for (std::size_t j = 0; j < cols_; ++j) terms.push_back((*this)(i, j) * v[j]);
        out.push_back(normalize(sum(std::move(terms))));
    }
    return out;
}

MatrixExpr operator+(const MatrixExpr& a, const MatrixExpr& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size mismatch");
    std::vector<std::vector<Expr>> out(a.rows_, std::vector<Expr>(a.cols_));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i][j] = a(i, j) + b(i, j);
    return MatrixExpr(std::move(out));
}

MatrixExpr operator-(const MatrixExpr& a, const MatrixExpr& b) { return a + b.scaled(Expr(-1)); }

MatrixExpr operator*(const MatrixExpr& a, const MatrixExpr& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
    std::vector<std::vector<Expr>> out(a.rows_, std::vector<Expr>(b.cols_));
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < b.cols_; ++j) {
            std::vector<Expr> terms;
            for (std::size_t k = 0; k < a.cols_; ++k) terms.push_back(a(i, k) * b(k, j));
            out[i][j] = sum(std::move(terms));
        }
    }
    MatrixExpr m(std::move(out));
    m.rows_ = a.rows_;
    m.cols_ = b.cols_;
    return m;
}

bool MatrixExpr::equals(const MatrixExpr& o) const { return (*this - o).is_zero(); }

bool MatrixExpr::is_zero() const {
    for (const auto& e : entries_)
        if (!vanishes(e)) return false;
    return true;
}

std::string MatrixExpr::render() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += ", ";
        s += '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += jetwist::render((*this)(i, j));
        }
        s += ']';
    }
    return s + "]";
}

MatrixExpr commutator(const MatrixExpr& a, const MatrixExpr& b) { return a * b - b * a; }

}  // namespace jetwist
