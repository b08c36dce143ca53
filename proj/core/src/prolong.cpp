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

#include "jetwist/prolong.hpp"

#include <functional>

#include "jetwist/canonical.hpp"
#include "jetwist/errors.hpp"
#include "jetwist/twist.hpp"

namespace jetwist {

namespace {

// Q^b_J = psi^b_J - u^b_{J,k} xi^k.
std::vector<Expr> characteristic_at(const JetSpace& sp, const std::map<JetRef, Expr>& psi,
                                    const std::vector<Expr>& xi, const MultiIndex& J) {
    std::vector<Expr> out;
    for (std::size_t b = 0; b < sp.p(); ++b) {
        std::vector<Expr> terms{psi.at(JetRef{b, J})};
        for (std::size_t k = 0; k < sp.q(); ++k)
            if (!xi[k].is_zero_constant()) terms.push_back(-(Expr(sp.jet(b, J.increment(k))) * xi[k]));
        out.push_back(sum(std::move(terms)));
    }
    return out;
}

using TwistTerm = std::function<Expr(std::size_t a, std::size_t i, const std::vector<Expr>& q)>;

ProlongedField prolong_impl(const VectorField& X, int n, const TwistTerm& twist, Provenance provenance) {
    if (n < 0) throw PreconditionError("negative prolongation order");
    if (n < X.coefficient_order())
        throw PreconditionError("prolongation order " + std::to_string(n) + " is below the coefficient order " +
                                std::to_string(X.coefficient_order()));
    const JetSpace sp = X.space().with_order(n);
    const std::size_t q = sp.q();
    std::vector<std::vector<Expr>> dxi(q, std::vector<Expr>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t k = 0; k < q; ++k) dxi[i][k] = normalize(total_derivative(X.xi(k), i, sp));

    std::map<JetRef, Expr> psi;
    const MultiIndex zero = MultiIndex::zero(q);
    for (std::size_t a = 0; a < sp.p(); ++a) psi.emplace(JetRef{a, zero}, X.phi(a));
    for (const auto& J : sp.multi_indices_upto(n)) {
        if (J.order() == 0) continue;
        const std::size_t i = J.last_direction();
        const MultiIndex K = J.decrement(i);
        std::vector<Expr> qk;
        if (twist) qk = characteristic_at(sp, psi, X.xi(), K);
        for (std::size_t a = 0; a < sp.p(); ++a) {
            std::vector<Expr> terms{total_derivative(psi.at(JetRef{a, K}), i, sp)};
            for (std::size_t k = 0; k < q; ++k)
                if (!dxi[i][k].is_zero_constant()) terms.push_back(-(Expr(sp.jet(a, K.increment(k))) * dxi[i][k]));
            if (twist) terms.push_back(twist(a, i, qk));
            psi.emplace(JetRef{a, J}, normalize(sum(std::move(terms))));
        }
    }
    return ProlongedField(sp, X.xi(), std::move(psi), provenance);
}

Expr row_times(const MatrixExpr& m, std::size_t a, const std::vector<Expr>& v) {
    std::vector<Expr> terms;
    for (std::size_t b = 0; b < v.size(); ++b)
        if (!m(a, b).is_zero_constant()) terms.push_back(m(a, b) * v[b]);
    return sum(std::move(terms));
}

void require_invertible(const MatrixExpr& A, std::size_t n, const char* what) {
    if (A.rows() != n || A.cols() != n)
        throw DimensionMismatch(std::string(what) + ": gauge matrix must be " + std::to_string(n) + "x" +
                                std::to_string(n));
    if (vanishes(A.determinant())) throw SingularMatrix(std::string(what) + ": gauge matrix is singular");
}

// W_{J,i} = D_i W_J + (D_i f^a) Q_{a;J}, W_0 = 0.
ProlongedField defect_recursion(const std::vector<Expr>& f, const std::vector<ProlongedField>& prolonged) {
    const JetSpace& sp = prolonged.at(0).space();
    const std::size_t q = sp.q();
    const int n = sp.order();
    std::vector<std::vector<Expr>> df(q);
    for (std::size_t i = 0; i < q; ++i)
        for (const auto& fa : f) df[i].push_back(normalize(total_derivative(fa, i, sp)));

    std::map<JetRef, Expr> w;
    const MultiIndex zero = MultiIndex::zero(q);
    for (std::size_t a = 0; a < sp.p(); ++a) w.emplace(JetRef{a, zero}, Expr(0));
    for (const auto& J : sp.multi_indices_upto(n)) {
        if (J.order() == 0) continue;
        const std::size_t i = J.last_direction();
        const MultiIndex K = J.decrement(i);
        std::vector<std::vector<Expr>> qk;
        for (const auto& P : prolonged) qk.push_back(characteristic_at(sp, P.psi(), P.xi(), K));
        for (std::size_t a = 0; a < sp.p(); ++a) {
            std::vector<Expr> terms{total_derivative(w.at(JetRef{a, K}), i, sp)};
            for (std::size_t al = 0; al < prolonged.size(); ++al)
                if (!df[i][al].is_zero_constant()) terms.push_back(df[i][al] * qk[al][a]);
            w.emplace(JetRef{a, J}, normalize(sum(std::move(terms))));
        }
    }
    return ProlongedField(sp, std::vector<Expr>(q, Expr(0)), std::move(w), Provenance::raw);
}

}  // namespace

ProlongedField standard_prolong(const VectorField& X, int n) { return prolong_impl(X, n, nullptr, Provenance::standard); }

ProlongedField mu_prolong(const VectorField& X, int n, const std::vector<MatrixExpr>& lambda, const MuOptions& opts) {
    const JetSpace& sp = X.space();
    if (lambda.size() != sp.q())
        throw DimensionMismatch("mu-prolongation needs one matrix per independent variable");
    for (const auto& L : lambda)
        if (L.rows() != sp.p() || L.cols() != sp.p())
            throw DimensionMismatch("twist matrices must be " + std::to_string(sp.p()) + "x" + std::to_string(sp.p()));
    bool flat = true;
    for (const auto& d : mc_defect(lambda, sp.with_order(std::max(n, 1))))
        if (!d.is_zero()) flat = false;
    if (!flat && opts.require_maurer_cartan)
        throw MaurerCartanViolation("twist does not satisfy the horizontal Maurer-Cartan equation");
    auto twist = [&](std::size_t a, std::size_t i, const std::vector<Expr>& q) { return row_times(lambda[i], a, q); };
    ProlongedField P = prolong_impl(X, n, twist, Provenance::mu);
    if (!flat) P.add_note("Maurer-Cartan defect is nonzero: coefficients depend on the differentiation path");
    return P;
}

ProlongedField lambda_prolong(const VectorField& X, int n, const Expr& lambda) {
    std::vector<MatrixExpr> L(X.space().q(), MatrixExpr::scalar(X.space().p(), lambda));
    ProlongedField P = mu_prolong(X, n, L, MuOptions{false});
    return ProlongedField(P.space(), P.xi(), P.psi(), Provenance::lambda);
}

std::vector<ProlongedField> sigma_prolong(const std::vector<VectorField>& fields, int n, const MatrixExpr& sigma) {
    if (fields.empty()) return {};
    const JetSpace base = fields[0].space();
    if (base.q() != 1) throw PreconditionError("sigma-prolongation needs exactly one independent variable");
    const std::size_t r = fields.size();
    if (sigma.rows() != r || sigma.cols() != r)
        throw DimensionMismatch("sigma must be " + std::to_string(r) + "x" + std::to_string(r));
    int order = 0;
    for (const auto& X : fields) {
        if (!(X.space() == base)) throw DimensionMismatch("fields live on different jet spaces");
        order = std::max(order, X.coefficient_order());
    }
    if (n < order) throw PreconditionError("prolongation order is below the coefficient order");
    const JetSpace sp = base.with_order(n);
    int sigma_order = 0;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) sigma_order = std::max(sigma_order, sp.jet_order(sigma(a, b)));

    std::vector<std::map<JetRef, Expr>> psi(r);
    std::vector<Expr> dxi(r);
    const MultiIndex zero = MultiIndex::zero(1);
    for (std::size_t al = 0; al < r; ++al) {
        dxi[al] = normalize(total_derivative(fields[al].xi(0), 0, sp));
        for (std::size_t a = 0; a < sp.p(); ++a) psi[al].emplace(JetRef{a, zero}, fields[al].phi(a));
    }
    for (int k = 1; k <= n; ++k) {
        const MultiIndex J = MultiIndex({k});
        const MultiIndex K = MultiIndex({k - 1});
        std::vector<std::vector<Expr>> qk;
        for (std::size_t be = 0; be < r; ++be) qk.push_back(characteristic_at(sp, psi[be], fields[be].xi(), K));
        for (std::size_t al = 0; al < r; ++al) {
            for (std::size_t a = 0; a < sp.p(); ++a) {
                std::vector<Expr> terms{total_derivative(psi[al].at(JetRef{a, K}), 0, sp)};
                if (!dxi[al].is_zero_constant()) terms.push_back(-(Expr(sp.jet(a, J)) * dxi[al]));
                for (std::size_t be = 0; be < r; ++be)
                    if (!sigma(al, be).is_zero_constant()) terms.push_back(sigma(al, be) * qk[be][a]);
                psi[al].emplace(JetRef{a, J}, normalize(sum(std::move(terms))));
            }
        }
    }
    std::vector<ProlongedField> out;
    for (std::size_t al = 0; al < r; ++al) {
        out.emplace_back(sp, fields[al].xi(), std::move(psi[al]), Provenance::sigma);
        if (sigma_order > 1) out.back().add_note("sigma depends on jets of order " + std::to_string(sigma_order));
    }
    return out;
}

VectorField apply_gauge_vertical(const MatrixExpr& A, const VectorField& X) {
    require_invertible(A, X.space().p(), "apply_gauge_vertical");
    return VectorField(X.space(), X.xi(), A.apply(X.phi()));
}

ProlongedField apply_gauge_vertical(const MatrixExpr& A, const ProlongedField& P) {
    const JetSpace& sp = P.space();
    require_invertible(A, sp.p(), "apply_gauge_vertical");
    std::map<JetRef, Expr> psi;
    for (const auto& J : sp.multi_indices_upto(sp.order())) {
        std::vector<Expr> block;
        for (std::size_t b = 0; b < sp.p(); ++b) block.push_back(P.psi(b, J));
        const auto mixed = A.apply(block);
        for (std::size_t a = 0; a < sp.p(); ++a) psi.emplace(JetRef{a, J}, mixed[a]);
    }
    return ProlongedField(sp, P.xi(), std::move(psi), Provenance::raw);
}

std::vector<VectorField> apply_gauge_set(const MatrixExpr& A, const std::vector<VectorField>& fields) {
    const std::size_t r = fields.size();
    require_invertible(A, r, "apply_gauge_set");
    std::vector<VectorField> out;
    for (std::size_t al = 0; al < r; ++al) {
        VectorField w = fields[0].scaled(A(al, 0));
        for (std::size_t be = 1; be < r; ++be) w = w + fields[be].scaled(A(al, be));
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<ProlongedField> apply_gauge_set(const MatrixExpr& A, const std::vector<ProlongedField>& fields) {
    const std::size_t r = fields.size();
    require_invertible(A, r, "apply_gauge_set");
    std::vector<ProlongedField> out;
    for (std::size_t al = 0; al < r; ++al) {
        ProlongedField w = fields[0].scaled(A(al, 0));
        for (std::size_t be = 1; be < r; ++be) w = w + fields[be].scaled(A(al, be));
        out.push_back(std::move(w));
    }
    return out;
}

CombinationResult prolong_combination(const std::vector<Expr>& f, const std::vector<VectorField>& fields, int n) {
    if (f.size() != fields.size() || fields.empty())
        throw DimensionMismatch("prolong_combination needs one function per field");
    for (const auto& X : fields)
        if (!X.is_lie_point()) throw PreconditionError("prolong_combination needs Lie-point fields");
    VectorField sum_field = fields[0].scaled(f[0]);
    for (std::size_t al = 1; al < fields.size(); ++al) sum_field = sum_field + fields[al].scaled(f[al]);
    std::vector<ProlongedField> prolonged;
    for (const auto& X : fields) prolonged.push_back(standard_prolong(X, n));
    return CombinationResult{standard_prolong(sum_field, n), defect_recursion(f, prolonged)};
}

std::map<std::pair<std::size_t, std::size_t>, BracketDefect> bracket_defect(const std::vector<VectorField>& fields,
                                                                            int n) {
    std::map<std::pair<std::size_t, std::size_t>, BracketDefect> out;
    if (fields.size() < 2) return out;
    const InvolutionResult inv = involution_coefficients(fields);
    std::vector<ProlongedField> prolonged;
    for (const auto& X : fields) prolonged.push_back(standard_prolong(X, n));
    for (std::size_t a = 0; a < fields.size(); ++a)
        for (std::size_t b = a + 1; b < fields.size(); ++b)
            out.emplace(std::pair{a, b}, BracketDefect{inv.F[a][b], defect_recursion(inv.F[a][b], prolonged)});
    return out;
}

}  // namespace jetwist
