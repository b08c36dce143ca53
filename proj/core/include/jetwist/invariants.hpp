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

#ifndef JETWIST_INVARIANTS_HPP
#define JETWIST_INVARIANTS_HPP

#include <string>
#include <vector>

#include "jetwist/symcheck.hpp"

namespace jetwist {

/// P applied to e as a derivation, with its zero verdict.
ResidualCheck is_invariant(const Expr& e, const ProlongedField& P);

/// D_x zeta / D_x eta, normalized. One independent variable; throws
/// PreconditionError when D_x eta vanishes.
Expr ibdp_next(const Expr& zeta, const Expr& eta, const JetSpace& space);

enum class ChainSource : std::uint8_t { user_supplied, ibdp_generated };

/// Invariants grouped by order: levels[k] holds entries of jet order k.
struct InvariantChain {
    std::vector<std::vector<Expr>> levels;
    ChainSource source = ChainSource::user_supplied;
};

enum class IbdpStatus : std::uint8_t { holds, fails, vacuous };

const char* to_string(IbdpStatus s) noexcept;

struct ChainReport {
    VerdictReport invariance;              // one check per entry
    std::vector<ResidualCheck> order_checks;  // entries whose order differs from their level
    std::vector<ResidualCheck> ibdp;       // P(D_x zeta / D_x eta) per tested pair
    IbdpStatus ibdp_status = IbdpStatus::vacuous;
};

/// Checks every entry and runs the IBDP diagnostic: for each order-zero entry
/// eta with D_x eta nonzero and each higher entry zeta whose successor order
/// fits the field, D_x zeta / D_x eta must again be invariant.
ChainReport verify_chain(const InvariantChain& chain, const ProlongedField& P);

/// Extends a chain by one level with ibdp_next of the top level over the first
/// usable order-zero entry.
InvariantChain ibdp_extend(const InvariantChain& chain, const JetSpace& space);

}  // namespace jetwist

#endif
