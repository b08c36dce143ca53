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

#include "jetwist/twist.hpp"

#include "jetwist/errors.hpp"

namespace jetwist {

namespace {

MatrixExpr total_derivative(const MatrixExpr& m, std::size_t i, const JetSpace& space) {
    return m.map([&](const Expr& e) { return jetwist::total_derivative(e, i, space); });
}

void require_square(const MatrixExpr& A, const char* what) {
    if (!A.is_square()) throw DimensionMismatch(std::string(what) + ": matrix must be square");
}

}  // namespace

std::vector<MatrixExpr> mc_defect(const std::vector<MatrixExpr>& lambda, const JetSpace& space) {
    if (lambda.size() != space.q()) throw DimensionMismatch("mc_defect needs one matrix per independent variable");
    for (const auto& L : lambda)
        if (!L.is_square() || L.rows() != lambda[0].rows()) throw DimensionMismatch("mc_defect: matrices differ in size");
    std::vector<MatrixExpr> out;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = i + 1; j < lambda.size(); ++j)
            out.push_back(total_derivative(lambda[j], i, space) - total_derivative(lambda[i], j, space) +
                          commutator(lambda[i], lambda[j]));
    return out;
}

std::vector<MatrixExpr> gauge_to_mu(const MatrixExpr& A, const JetSpace& space) {
    require_square(A, "gauge_to_mu");
    const MatrixExpr inv = A.inverse();
    std::vector<MatrixExpr> out;
    for (std::size_t i = 0; i < space.q(); ++i) out.push_back(inv * total_derivative(A, i, space));
    return out;
}

MatrixExpr gauge_to_sigma(const MatrixExpr& A, const JetSpace& space) {
    if (space.q() != 1) throw PreconditionError("gauge_to_sigma needs exactly one independent variable");
    require_square(A, "gauge_to_sigma");
    return A.inverse() * total_derivative(A, 0, space);
}

MatrixExpr lai_residual(const MatrixExpr& A, const MatrixExpr& lambda_i, std::size_t i, const JetSpace& space) {
    return total_derivative(A, i, space) - A * lambda_i;
}

std::vector<CoefficientCheck> compare_fields(const ProlongedField& a, const ProlongedField& b,
                                             const std::string& label) {
    if (!(a.space() == b.space())) throw DimensionMismatch("compared fields live on different jet spaces");
    const auto coords = a.space().coordinates();
    const auto ca = a.components();
    const auto cb = b.components();
    std::vector<CoefficientCheck> out;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const Expr r = normalize(ca[k] - cb[k]);
        out.push_back({label + ": d/d" + coords[k].name(), r, is_zero(r)});
    }
    return out;
}

namespace {

bool all_vanish(const std::vector<CoefficientCheck>& checks) {
    for (const auto& c : checks)
        if (c.verdict != ZeroVerdict::proven_zero && c.verdict != ZeroVerdict::probably_zero) return false;
    return true;
}

}  // namespace

DiagramReport verify_mu_diagram(const VectorField& X, const MatrixExpr& A, int n) {
    DiagramReport r;
    const JetSpace sp = X.space().with_order(std::max(n, 1));
    r.regime = X.is_vertical() ? "vertical" : "expected non-commuting (non-vertical field)";
    r.twist = gauge_to_mu(A, sp);
    r.twisted.push_back(mu_prolong(X, n, r.twist));
    r.gauged.push_back(apply_gauge_vertical(A, r.twisted[0]));
    r.gauged_base.push_back(apply_gauge_vertical(A, X));
    r.standard.push_back(standard_prolong(r.gauged_base[0], n));
    r.checks = compare_fields(r.gauged[0], r.standard[0], "Z - W");
    r.commutes = all_vanish(r.checks);
    return r;
}

DiagramReport verify_sigma_diagram(const std::vector<VectorField>& fields, const MatrixExpr& A, int n) {
    if (fields.empty()) throw PreconditionError("verify_sigma_diagram needs at least one field");
    DiagramReport r;
    const JetSpace sp = fields[0].space().with_order(std::max(n, 1));
    r.regime = "set";
    r.twist.push_back(gauge_to_sigma(A, sp));
    r.twisted = sigma_prolong(fields, n, r.twist[0]);
    r.gauged = apply_gauge_set(A, r.twisted);
    r.gauged_base = apply_gauge_set(A, fields);
    for (std::size_t al = 0; al < fields.size(); ++al) {
        r.standard.push_back(standard_prolong(r.gauged_base[al], n));
        const std::string idx = std::to_string(al + 1);
        auto c = compare_fields(r.gauged[al], r.standard[al], "Z" + idx + " - W" + idx);
        r.checks.insert(r.checks.end(), c.begin(), c.end());
    }
    r.commutes = all_vanish(r.checks);
    return r;
}

}  // namespace jetwist
