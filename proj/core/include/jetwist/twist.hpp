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

#ifndef JETWIST_TWIST_HPP
#define JETWIST_TWIST_HPP

#include <string>
#include <vector>

#include "jetwist/canonical.hpp"
#include "jetwist/matrix.hpp"
#include "jetwist/prolong.hpp"

namespace jetwist {

/// D_i L_j - D_j L_i + [L_i, L_j] for each pair i < j.
std::vector<MatrixExpr> mc_defect(const std::vector<MatrixExpr>& lambda, const JetSpace& space);

/// Lambda_i = A^-1 D_i A. Throws SingularMatrix.
std::vector<MatrixExpr> gauge_to_mu(const MatrixExpr& A, const JetSpace& space);

/// sigma = A^-1 D_x A in one independent variable. Throws SingularMatrix.
MatrixExpr gauge_to_sigma(const MatrixExpr& A, const JetSpace& space);

/// D_i A - A Lambda_i, zero exactly when (Lambda_i, A) are gauge related.
MatrixExpr lai_residual(const MatrixExpr& A, const MatrixExpr& lambda_i, std::size_t i, const JetSpace& space);

struct CoefficientCheck {
    std::string label;  // "<field>: d/d<coordinate>"
    Expr residual;
    ZeroVerdict verdict = ZeroVerdict::unknown;
};

struct DiagramReport {
    bool commutes = false;
    std::string regime;  // "vertical", or the expected outcome for non-vertical input
    std::vector<CoefficientCheck> checks;
    std::vector<MatrixExpr> twist;          // Lambda_i, or sigma as a single entry
    std::vector<ProlongedField> twisted;    // Y
    std::vector<ProlongedField> gauged;     // Z = A Y
    std::vector<VectorField> gauged_base;   // W = A X
    std::vector<ProlongedField> standard;   // W^(n)
};

/// Compares A (mu-prolongation of X with Lambda = gauge_to_mu(A)) against the
/// standard prolongation of A X. Non-vertical X is accepted and labeled.
DiagramReport verify_mu_diagram(const VectorField& X, const MatrixExpr& A, int n);

/// Compares A (sigma-prolongation of the set with sigma = gauge_to_sigma(A))
/// against the standard prolongations of A X.
DiagramReport verify_sigma_diagram(const std::vector<VectorField>& fields, const MatrixExpr& A, int n);

/// Componentwise comparison of two prolonged fields on the same space.
std::vector<CoefficientCheck> compare_fields(const ProlongedField& a, const ProlongedField& b,
                                             const std::string& label);

}  // namespace jetwist

#endif
