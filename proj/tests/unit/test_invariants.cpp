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

#include "doctest.h"

#include "../fixtures.hpp"
#include "jetwist/errors.hpp"

using namespace jetwist;
using fx::P;

TEST_CASE("invariance") {
    const auto sp = fx::mug::space();
    const auto Y = fx::mug::Y();
    const auto Z = fx::mug::Z();
    CHECK(is_invariant(P("u_x*exp(-v)", sp), Y).zero == ZeroVerdict::proven_zero);
    CHECK(is_invariant(P("x", sp), Y).zero == ZeroVerdict::proven_zero);
    CHECK(is_invariant(P("u*exp(-v)", sp), Z).zero == ZeroVerdict::proven_zero);
    CHECK(is_invariant(P("v", sp), Y).zero == ZeroVerdict::proven_nonzero);
    CHECK_THROWS_AS(is_invariant(P("u_xxx", sp), Y), PreconditionError);
}

TEST_CASE("IBDP step") {
    const auto sp = fx::mug::space();
    CHECK(fx::same(ibdp_next(P("u_x/u", sp), P("x", sp), sp), P("u_xx/u - u_x^2/u^2", sp)));
    CHECK(fx::same(ibdp_next(P("u*exp(-v)", sp), P("u*exp(-v)", sp), sp), Expr(1)));
    CHECK_THROWS_AS(ibdp_next(P("u_x", sp), P("1", sp), sp), PreconditionError);
    CHECK_THROWS(ibdp_next(P("u_x", fx::mc::space()), P("x", fx::mc::space()), fx::mc::space()));

    const Expr next = ibdp_next(P("u_x*exp(-v)", sp), P("x", sp), sp);
    CHECK(fx::same(next, P("u_xx*exp(-v) - u_x*v_x*exp(-v)", sp)));
    // d/dv + u_x d/du_x + u_xx d/du_xx annihilates it as well.
    CHECK(is_invariant(next, fx::mug::Y()).zero == ZeroVerdict::proven_zero);
    // The order-0 invariant u is where differentiation leaves the invariant algebra.
    const Expr via_u = ibdp_next(P("u_x*exp(-v)", sp), P("u", sp), sp);
    CHECK(is_invariant(via_u, fx::mug::Y()).zero == ZeroVerdict::proven_nonzero);
}

TEST_CASE("chains") {
    const auto Y = mu_prolong(fx::mug::X(), 2, {fx::mug::Lambda()});
    const auto ry = verify_chain(fx::mug::y_chain(), Y);
    CHECK(ry.invariance.verdict == Verdict::proven);
    CHECK(ry.invariance.checks.size() == 6);
    CHECK(ry.ibdp_status == IbdpStatus::fails);

    const auto Z = standard_prolong(fx::mug::W(), 2);
    const auto rz = verify_chain(fx::mug::z_chain(), Z);
    CHECK(rz.invariance.verdict == Verdict::proven);
    CHECK(rz.invariance.checks.size() == 6);
    CHECK(rz.ibdp_status == IbdpStatus::holds);

    const auto sp = fx::mug::space();
    const auto vac = verify_chain(InvariantChain{{{P("x", sp)}}, ChainSource::user_supplied}, Y);
    CHECK(vac.invariance.verdict == Verdict::proven);
    CHECK(vac.ibdp_status == IbdpStatus::vacuous);

    const auto misplaced = verify_chain(InvariantChain{{{P("u_x/u", sp)}}, ChainSource::user_supplied}, Z);
    CHECK_FALSE(misplaced.order_checks.empty());
    CHECK(std::string(to_string(IbdpStatus::holds)) == "holds");
}

TEST_CASE("IBDP extension of standard prolongations") {
    const auto sp = fx::mug::space();
    const InvariantChain low{{{P("x", sp), P("u*exp(-v)", sp)}, {P("u_x/u", sp), P("v_x", sp)}},
                             ChainSource::user_supplied};
    const auto ext = ibdp_extend(low, sp);
    CHECK(ext.source == ChainSource::ibdp_generated);
    REQUIRE(ext.levels.size() == 3);
    CHECK(fx::same(ext.levels[2][0], P("u_xx/u - u_x^2/u^2", sp)));
    CHECK(fx::same(ext.levels[2][1], P("v_xx", sp)));
    const auto W2 = standard_prolong(fx::mug::W(), 2);
    for (const auto& e : ext.levels[2]) CHECK(is_invariant(e, W2).zero == ZeroVerdict::proven_zero);

    // scaling x d/dx + u d/du: x^-1 u, u_x, x u_xx
    const auto line = JetSpace({"x"}, {"u"}, 3);
    const auto S = standard_prolong(fx::field(line, {"x"}, {"u"}), 3);
    InvariantChain chain{{{P("u/x", line)}, {P("u_x", line)}}, ChainSource::user_supplied};
    const auto more = ibdp_extend(ibdp_extend(chain, line), line);
    REQUIRE(more.levels.size() == 4);
    for (const auto& level : more.levels)
        for (const auto& e : level) CHECK(is_invariant(e, S).zero == ZeroVerdict::proven_zero);
}
