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

TEST_CASE("evolutionary representatives") {
    const auto sp = fx::mupt::space();
    CHECK(fx::same(evolutionary_rep(fx::mupt::X()), fx::mupt::Xv()));
    const auto V = fx::field(sp, {"0"}, {"u*v", "x"});
    CHECK(fx::same(evolutionary_rep(V), V));
    const auto line = fx::line_u(1);
    CHECK(fx::same(evolutionary_rep(fx::field(line, {"1"}, {"0"})), fx::field(line, {"0"}, {"-u_x"})));
}

TEST_CASE("recognizing evolutionary representatives") {
    const auto sp = fx::mupt::space();
    const auto ok = is_evolutionary_rep(fx::mupt::Xv());
    REQUIRE(ok.ok);
    CHECK(fx::same(ok.recovered->xi(0), Expr(-1)));
    CHECK(fx::same(ok.recovered->phi(0), P("u", sp)));
    CHECK(fx::same(ok.recovered->phi(1), P("v", sp)));

    const auto off = is_evolutionary_rep(fx::field(sp, {"0"}, {"u + v_x", "v + v_x"}));
    CHECK_FALSE(off.ok);
    CHECK(off.reason.find("v_x") != std::string::npos);

    const auto wv = is_evolutionary_rep(fx::mupt::Wv());
    CHECK_FALSE(wv.ok);
    CHECK(wv.reason.find("v_x") != std::string::npos);
    CHECK_FALSE(fx::same(evolutionary_rep(fx::mupt::W()), fx::mupt::Wv()));
    CHECK(fx::same(evolutionary_rep(fx::mupt::W()), fx::mupt::Wev()));
}

TEST_CASE("commutators") {
    const auto line = fx::line_u(1);
    CHECK(fx::same(commutator(fx::field(line, {"1"}, {"0"}), fx::field(line, {"x"}, {"0"})),
                   fx::field(line, {"1"}, {"0"})));
    const auto X = fx::sig::X();
    CHECK(fx::same(commutator(X[0], X[1]), fx::field(fx::sig::space(), {"0"}, {"0", "0"})));
    const auto sp = fx::line_uv(1);
    CHECK(fx::same(commutator(fx::field(sp, {"0"}, {"u", "0"}), fx::field(sp, {"0"}, {"v", "0"})),
                   fx::field(sp, {"0"}, {"-v", "0"})));
    const auto Y = fx::field(sp, {"x*u"}, {"v^2", "exp(x)"});
    for (const auto& c : commutator(Y, Y).components()) CHECK(fx::proven_zero(c));
}

TEST_CASE("involution coefficients") {
    const auto line = fx::line_u(1);
    const JetSpace plane({"x", "y"}, {"u"}, 1);
    {
        // d/dx and x d/dx are collinear; a d/dy term keeps the pair independent
        const auto r =
            involution_coefficients({fx::field(plane, {"1", "0"}, {"0"}), fx::field(plane, {"x", "1"}, {"0"})});
        CHECK(fx::same(r.F[0][1][0], Expr(1)));
        CHECK(fx::same(r.F[0][1][1], Expr(0)));
        CHECK(fx::same(r.F[1][0][0], Expr(-1)));
    }
    {
        const auto X = fx::sig::X();
        const auto r = involution_coefficients(X);
        for (const auto& c : r.F[0][1]) CHECK(fx::proven_zero(c));
    }
    {
        const auto sp = fx::line_uv(1);
        const std::vector<VectorField> set{fx::field(sp, {"0"}, {"1", "0"}), fx::field(sp, {"0"}, {"u", "v"})};
        const auto r = involution_coefficients(set);
        CHECK(fx::same(r.F[0][1][0], Expr(1)));
        CHECK(fx::same(r.F[0][1][1], Expr(0)));
        CHECK(is_lie_algebra(set).yes);
    }
    CHECK_THROWS_AS(involution_coefficients({fx::field(line, {"1"}, {"0"}), fx::field(line, {"exp(x)"}, {"0"})}),
                    RankDeficient);
    CHECK_THROWS_AS(involution_coefficients({fx::field(line, {"1"}, {"0"}), fx::field(line, {"x"}, {"0"})}),
                    RankDeficient);
    const auto sp = fx::line_uv(1);
    CHECK_THROWS_AS(involution_coefficients({fx::field(sp, {"1"}, {"0", "0"}), fx::field(sp, {"0"}, {"1", "x"})}),
                    NotInInvolution);
}

TEST_CASE("Lie algebra recognition") {
    CHECK(is_lie_algebra(fx::sig::X()).yes);
    const auto single = is_lie_algebra({fx::mupt::X()});
    CHECK(single.yes);
    const JetSpace plane({"x", "y"}, {"u"}, 1);
    // e^x d/dx against d/dx, made independent by a second base direction.
    const auto r = is_lie_algebra({fx::field(plane, {"1", "0"}, {"0"}), fx::field(plane, {"exp(x)", "1"}, {"0"})});
    CHECK_FALSE(r.yes);
    CHECK(fx::same(r.coefficients.F[0][1][0], P("exp(x)", plane)));
    CHECK_FALSE(r.reason.empty());
}

TEST_CASE("describe lists nonzero coefficients") {
    const auto text = describe(fx::mug::W());
    CHECK(text.find("d/du: u") != std::string::npos);
    CHECK(text.find("d/dv: 1") != std::string::npos);
    CHECK(text.find("d/dx") == std::string::npos);
}

TEST_CASE("prolonged field arithmetic") {
    const auto Y = fx::mug::Y();
    const auto sum = Y + Y.scaled(Expr(2));
    CHECK(sum.provenance() == Provenance::raw);
    CHECK(fx::same(sum.psi(0, MultiIndex({2})), P("3*u_xx", fx::mug::space())));
    CHECK(fx::same(Y.base(), fx::mug::X()));
    CHECK(fx::same(Y.apply(P("u_x*exp(-v)", fx::mug::space())), Expr()));
}
