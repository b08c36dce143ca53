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

#ifndef JETWIST_SYMCHECK_HPP
#define JETWIST_SYMCHECK_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetwist/canonical.hpp"
#include "jetwist/twist.hpp"
#include "jetwist/vfield.hpp"

namespace jetwist {

enum class Verdict : std::uint8_t { proven, disproven, probable, not_applicable, error };

const char* to_string(Verdict v) noexcept;
/// Inverse of to_string; throws ParseError for other text.
Verdict verdict_from_string(const std::string& s);

struct ResidualCheck {
    std::string label;
    Expr residual;
    ZeroVerdict zero = ZeroVerdict::unknown;
};

struct VerdictReport {
    Verdict verdict = Verdict::proven;
    std::vector<ResidualCheck> checks;
    std::map<std::string, std::string> provenance;
    std::vector<std::string> notes;
};

/// proven when every residual is proven zero, disproven when one is proven
/// nonzero, probable when the rest are probably zero, error otherwise.
Verdict combine(const std::vector<ResidualCheck>& checks);
ResidualCheck make_check(std::string label, const Expr& residual);

/// Equations u^a_K = G^a in solved form.
class DiffSystem {
public:
    DiffSystem(JetSpace space, std::vector<std::pair<JetRef, Expr>> rules);

    const JetSpace& space() const noexcept { return space_; }
    const std::vector<std::pair<JetRef, Expr>>& rules() const noexcept { return rules_; }
    int order() const noexcept { return order_; }

    /// The first declared rule whose K lies below J componentwise.
    const std::pair<JetRef, Expr>* rule_for(const JetRef& r) const;

private:
    JetSpace space_;
    std::vector<std::pair<JetRef, Expr>> rules_;
    int order_ = 0;
};

struct RestrictOptions {
    int max_order = 16;       // highest jet order the closure may generate
    int max_iterations = 64;  // substitution passes before giving up
};

/// Substitutes solved jets and their total-derivative consequences until none remain.
Expr restrict(const Expr& e, const DiffSystem& sys, const RestrictOptions& opts = {});

/// restrict(P(u^a_K - G^a)) for each rule.
VerdictReport is_symmetry(const ProlongedField& P, const DiffSystem& sys, const RestrictOptions& opts = {});

/// u^a_K - G^a on the prolonged section, for each rule.
VerdictReport is_solution(const Section& f, const DiffSystem& sys);

/// Q^a of X on the prolonged section.
std::vector<Expr> characteristic_defect(const VectorField& X, const Section& f);

/// Compares two prolonged fields on a section invariant under both base fields;
/// not_applicable when the section is not invariant.
VerdictReport compare_on_invariant_sections(const ProlongedField& a, const ProlongedField& b, const Section& f);

struct RankInfo {
    std::size_t rank = 0;
    bool exact = false;  // every elimination decision was proven
};

/// Generic rank of the coefficient matrix of the fields over the jet coordinates.
RankInfo generic_rank(const std::vector<ProlongedField>& fields);

/// rank(P) = rank(Q) = rank(P and Q together), by symbolic elimination and
/// numeric rank at random probe points.
VerdictReport same_distribution(const std::vector<ProlongedField>& P, const std::vector<ProlongedField>& Q,
                                const ProbeOptions& opts = default_probe_options());

}  // namespace jetwist

#endif
