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

#ifndef JETWIST_VFIELD_HPP
#define JETWIST_VFIELD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetwist/expr.hpp"
#include "jetwist/jet.hpp"

namespace jetwist {

/// X = xi^i d_i + phi^a d_a. Coefficients may depend on jets (generalized fields).
class VectorField {
public:
    VectorField(JetSpace space, std::vector<Expr> xi, std::vector<Expr> phi);
    static VectorField vertical(JetSpace space, std::vector<Expr> phi);

    const JetSpace& space() const noexcept { return space_; }
    const std::vector<Expr>& xi() const noexcept { return xi_; }
    const std::vector<Expr>& phi() const noexcept { return phi_; }
    const Expr& xi(std::size_t i) const { return xi_.at(i); }
    const Expr& phi(std::size_t a) const { return phi_.at(a); }

    int coefficient_order() const;
    bool is_lie_point() const { return coefficient_order() == 0; }
    bool is_vertical() const;

    /// xi^i df/dx^i + phi^a df/du^a; jets in f are left alone.
    Expr apply(const Expr& f) const;

    VectorField scaled(const Expr& c) const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);

    /// Components in the order x^1..x^q, u^1..u^p.
    std::vector<Expr> components() const;

private:
    JetSpace space_;
    std::vector<Expr> xi_;
    std::vector<Expr> phi_;
};

enum class Provenance : std::uint8_t { standard, lambda, mu, sigma, raw };

const char* to_string(Provenance p) noexcept;

/// xi^i d_i + psi^a_J d^J_a on the jet space of order n (psi^a_0 = phi^a).
class ProlongedField {
public:
    ProlongedField(JetSpace space, std::vector<Expr> xi, std::map<JetRef, Expr> psi, Provenance provenance);

    const JetSpace& space() const noexcept { return space_; }
    int order() const noexcept { return space_.order(); }
    const std::vector<Expr>& xi() const noexcept { return xi_; }
    const Expr& xi(std::size_t i) const { return xi_.at(i); }
    const Expr& psi(std::size_t a, const MultiIndex& J) const;
    const std::map<JetRef, Expr>& psi() const noexcept { return psi_; }
    Provenance provenance() const noexcept { return provenance_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }
    void add_note(std::string note) { notes_.push_back(std::move(note)); }

    /// The underlying field (xi, psi_0).
    VectorField base() const;

    /// Applies the field as a derivation. Throws PreconditionError when f
    /// contains jets above the field's order.
    Expr apply(const Expr& f) const;

    /// Coefficients in the coordinate order of space().coordinates().
    std::vector<Expr> components() const;
    static ProlongedField from_components(const JetSpace& space, const std::vector<Expr>& components,
                                          Provenance provenance);

    /// c * P as a raw field.
    ProlongedField scaled(const Expr& c) const;
    friend ProlongedField operator+(const ProlongedField& a, const ProlongedField& b);
    friend ProlongedField operator-(const ProlongedField& a, const ProlongedField& b);

private:
    JetSpace space_;
    std::vector<Expr> xi_;
    std::map<JetRef, Expr> psi_;
    Provenance provenance_;
    std::vector<std::string> notes_;
};

/// Readable multi-line form "coefficient * d/dcoord".
std::string describe(const VectorField& X);
std::string describe(const ProlongedField& P);

/// Q^a d_a with Q^a = phi^a - u^a_i xi^i. Requires a Lie-point field.
VectorField evolutionary_rep(const VectorField& X);

struct EvolutionaryCheck {
    bool ok = false;
    std::optional<VectorField> recovered;  // the Lie-point field when ok
    std::string reason;                    // violated condition when not ok
};

/// Decides whether a vertical field of order <= 1 is the evolutionary
/// representative of a Lie-point field: dQ^a/du^b_k = -delta^a_b xi^k with
/// xi and phi^a = Q^a + xi^k u^a_k of order zero.
EvolutionaryCheck is_evolutionary_rep(const VectorField& V);

/// Lie bracket of Lie-point fields on M.
VectorField commutator(const VectorField& X, const VectorField& Y);
/// Bracket of prolonged fields as raw fields on the jet space.
ProlongedField commutator(const ProlongedField& X, const ProlongedField& Y);

/// Coefficients F[a][b][c] with [X_a, X_b] = F[a][b][c] X_c.
struct InvolutionResult {
    std::vector<std::vector<std::vector<Expr>>> F;
    std::vector<Expr> pivots;  // denominators whose vanishing locus is excluded
};

/// Solves the brackets against the fields by symbolic elimination. Throws
/// RankDeficient or NotInInvolution.
InvolutionResult involution_coefficients(const std::vector<VectorField>& fields);

struct LieAlgebraCheck {
    bool yes = false;
    InvolutionResult coefficients;
    std::string reason;  // names a non-constant coefficient when not yes
};

LieAlgebraCheck is_lie_algebra(const std::vector<VectorField>& fields);

}  // namespace jetwist

#endif
