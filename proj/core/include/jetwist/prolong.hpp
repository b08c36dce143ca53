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

#ifndef JETWIST_PROLONG_HPP
#define JETWIST_PROLONG_HPP

#include <map>
#include <utility>
#include <vector>

#include "jetwist/matrix.hpp"
#include "jetwist/vfield.hpp"

namespace jetwist {

/// psi^a_{J,i} = D_i psi^a_J - u^a_{J,k} D_i xi^k, psi^a_0 = phi^a.
/// Multi-indices are reached through MultiIndex::last_direction.
ProlongedField standard_prolong(const VectorField& X, int n);

struct MuOptions {
    /// Refuse a twist whose horizontal Maurer-Cartan defect does not vanish.
    /// When off, such a prolongation is still built and carries a note that
    /// it depends on the differentiation path.
    bool require_maurer_cartan = true;
};

/// psi^a_{J,i} = D_i psi^a_J - u^a_{J,k} D_i xi^k + (Lambda_i)^a_b (psi^b_J - u^b_{J,k} xi^k).
/// One p x p matrix per independent variable.
ProlongedField mu_prolong(const VectorField& X, int n, const std::vector<MatrixExpr>& lambda,
                          const MuOptions& opts = {});

/// The mu-prolongation with Lambda_i = lambda * I for every i.
ProlongedField lambda_prolong(const VectorField& X, int n, const Expr& lambda);

/// Joint prolongation of r fields in one independent variable:
/// psi_{a;J,x} = D_x psi_{a;J} - u_{J,x} D_x xi_a + sigma_a^b (psi_{b;J} - u_{J,x} xi_b).
std::vector<ProlongedField> sigma_prolong(const std::vector<VectorField>& fields, int n, const MatrixExpr& sigma);

/// Mixes fiber components: xi unchanged, each coefficient block multiplied by A.
VectorField apply_gauge_vertical(const MatrixExpr& A, const VectorField& X);
ProlongedField apply_gauge_vertical(const MatrixExpr& A, const ProlongedField& P);

/// W_a = A_a^b X_b.
std::vector<VectorField> apply_gauge_set(const MatrixExpr& A, const std::vector<VectorField>& fields);
std::vector<ProlongedField> apply_gauge_set(const MatrixExpr& A, const std::vector<ProlongedField>& fields);

struct CombinationResult {
    ProlongedField combined;  // prolongation of f^a X_a
    ProlongedField defect;    // the recursion W
};

/// Prolongs f^a X_a and computes its defect from f^a X_a^(n) by
/// W_{J,i} = D_i W_J + (D_i f^a) Q_{a;J}, W_0 = 0, Q_{a;J} = psi_{a;J} - u_{J,k} xi^k_a.
CombinationResult prolong_combination(const std::vector<Expr>& f, const std::vector<VectorField>& fields, int n);

struct BracketDefect {
    std::vector<Expr> F;  // [X_a, X_b] = F^c X_c
    ProlongedField gamma;
};

/// For each pair a < b: [X_a^(n), X_b^(n)] = F^c X_c^(n) + Gamma, with Gamma
/// from the recursion above driven by F.
std::map<std::pair<std::size_t, std::size_t>, BracketDefect> bracket_defect(const std::vector<VectorField>& fields,
                                                                            int n);

}  // namespace jetwist

#endif
