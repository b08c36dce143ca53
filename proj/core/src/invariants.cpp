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

#include "jetwist/invariants.hpp"

#include "jetwist/errors.hpp"

namespace jetwist {

const char* to_string(IbdpStatus s) noexcept {
    switch (s) {
    case IbdpStatus::holds:
        return "holds";
    case IbdpStatus::fails:
        return "fails";
    case IbdpStatus::vacuous:
        return "vacuous";
    }
    return "vacuous";
}

ResidualCheck is_invariant(const Expr& e, const ProlongedField& P) {
    if (P.space().jet_order(e) > P.order())
        throw PreconditionError("invariant candidate " + render(e) + " exceeds the field order");
    return make_check(render(e), P.apply(e));
}

Expr ibdp_next(const Expr& zeta, const Expr& eta, const JetSpace& space) {
    if (space.q() != 1) throw PreconditionError("ibdp_next needs exactly one independent variable");
    const Expr d_eta = normalize(total_derivative(eta, 0, space));
    if (vanishes(d_eta)) throw PreconditionError("D_x of " + render(eta) + " vanishes");
    return normalize(total_derivative(zeta, 0, space) / d_eta);
}

ChainReport verify_chain(const InvariantChain& chain, const ProlongedField& P) {
    const JetSpace& sp = P.space();
    ChainReport rep;
    for (std::size_t k = 0; k < chain.levels.size(); ++k) {
        for (const auto& e : chain.levels[k]) {
            if (sp.jet_order(e) != static_cast<int>(k))
                rep.order_checks.push_back({"order of " + render(e), Expr(sp.jet_order(e)), ZeroVerdict::proven_nonzero});
            rep.invariance.checks.push_back(is_invariant(e, P));
        }
    }
    rep.invariance.verdict = combine(rep.invariance.checks);
    if (!rep.order_checks.empty()) {
        rep.invariance.verdict = Verdict::disproven;
        rep.invariance.notes.push_back("chain entries do not match their level order");
    }

    if (sp.q() == 1 && !chain.levels.empty()) {
        for (const auto& eta : chain.levels[0]) {
            if (vanishes(total_derivative(eta, 0, sp))) continue;
            for (std::size_t k = 1; k < chain.levels.size(); ++k) {
                if (static_cast<int>(k) + 1 > P.order()) continue;
                for (const auto& zeta : chain.levels[k]) {
                    const Expr next = ibdp_next(zeta, eta, sp);
                    ResidualCheck c = make_check("D(" + render(zeta) + ")/D(" + render(eta) + ") = " + render(next),
                                                 P.apply(next));
                    rep.ibdp.push_back(std::move(c));
                }
            }
        }
    }
    if (!rep.ibdp.empty()) {
        const Verdict v = combine(rep.ibdp);
        rep.ibdp_status = v == Verdict::proven || v == Verdict::probable ? IbdpStatus::holds : IbdpStatus::fails;
    }
    return rep;
}

InvariantChain ibdp_extend(const InvariantChain& chain, const JetSpace& space) {
    if (chain.levels.size() < 2) throw PreconditionError("ibdp_extend needs entries of order zero and one");
    const Expr* eta = nullptr;
    for (const auto& e : chain.levels[0]) {
        if (!vanishes(total_derivative(e, 0, space))) {
            eta = &e;
            break;
        }
    }
    if (eta == nullptr) throw PreconditionError("no order-zero entry with nonvanishing D_x");
    InvariantChain out = chain;
    out.source = ChainSource::ibdp_generated;
    std::vector<Expr> next;
    for (const auto& zeta : chain.levels.back()) next.push_back(ibdp_next(zeta, *eta, space));
    out.levels.push_back(std::move(next));
    return out;
}

}  // namespace jetwist
