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

TEST_CASE("standard prolongation") {
    const auto sp = fx::mug::space();
    const auto Z = standard_prolong(fx::mug::W(), 2);
    CHECK(Z.provenance() == Provenance::standard);
    CHECK(fx::same(Z, fx::mug::Z()));

    const auto line = JetSpace({"x"}, {"u"}, 4);
    const auto Du = standard_prolong(fx::field(line, {"0"}, {"1"}), 4);
    for (const auto& J : line.multi_indices_upto(4))
        if (J.order() > 0) CHECK(Du.psi(0, J).is_zero_constant());

    CHECK(fx::same(standard_prolong(fx::sig::W()[1], 2), fx::sig::Z()[1]));

    // x d/dx + u d/du fixes u_x and lowers u_xx.
    const auto S = standard_prolong(fx::field(line, {"x"}, {"u"}), 2);
    CHECK(S.psi(0, MultiIndex({1})).is_zero_constant());
    CHECK(fx::same(S.psi(0, MultiIndex({2})), P("-u_xx", line)));
}

TEST_CASE("lambda prolongation") {
    const auto sp = fx::lam::space();
    const auto Y = lambda_prolong(fx::field(sp, {"0"}, {"1"}), 2, P(fx::lam::lambda(), sp));
    CHECK(Y.provenance() == Provenance::lambda);
    CHECK(fx::same(Y, fx::lam::Y()));

    const auto X = fx::field(sp, {"x"}, {"u^2"});
    CHECK(fx::same(lambda_prolong(X, 2, Expr()), standard_prolong(X, 2)));

    const auto one = fx::line_u(1);
    const auto L = lambda_prolong(fx::field(one, {"0"}, {"1"}), 1, P("sin(x)", one));
    CHECK(fx::same(L.psi(0, MultiIndex({1})), P("sin(x)", one)));
}

TEST_CASE("mu prolongation") {
    const auto Y = mu_prolong(fx::mug::X(), 2, {fx::mug::Lambda()});
    CHECK(Y.provenance() == Provenance::mu);
    CHECK(fx::same(Y, fx::mug::Y()));

    const auto X = fx::field(fx::mug::space(), {"u"}, {"x*v", "u_x"});
    CHECK(fx::same(mu_prolong(X, 2, {MatrixExpr::zero(2, 2)}), standard_prolong(X, 2)));

    const auto sp = fx::lam::space();
    CHECK(fx::same(mu_prolong(fx::field(sp, {"0"}, {"1"}), 2, {fx::matrix(sp, {{fx::lam::lambda()}})}), fx::lam::Y()));
}

TEST_CASE("mu prolongation enforces Maurer-Cartan") {
    const auto sp = fx::mc::space();
    const auto X = VectorField::vertical(sp, {P("1", sp), Expr(), Expr(), Expr(), Expr()});
    auto pad = [&](const MatrixExpr& m) {
        std::vector<std::vector<Expr>> rows(5, std::vector<Expr>(5));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) rows[i][j] = m(i, j);
        return MatrixExpr(rows);
    };
    const std::vector<MatrixExpr> bad{pad(fx::mc::Lx()), pad(fx::mc::Ly_literal())};
    CHECK_THROWS_AS(mu_prolong(X, 1, bad), MaurerCartanViolation);
    const auto loose = mu_prolong(X, 1, bad, MuOptions{false});
    CHECK(loose.provenance() == Provenance::mu);
    const std::vector<MatrixExpr> good{pad(fx::mc::Lx()), pad(fx::mc::Ly_k())};
    CHECK_NOTHROW(mu_prolong(X, 1, good));
    CHECK_THROWS_AS(mu_prolong(X, 1, {pad(fx::mc::Lx())}), DimensionMismatch);
}

TEST_CASE("sigma prolongation") {
    const auto Y = sigma_prolong(fx::sig::X(), 2, fx::sig::sigma());
    REQUIRE(Y.size() == 2);
    CHECK(Y[0].provenance() == Provenance::sigma);
    CHECK(fx::same(Y[0], fx::sig::Y()[0]));
    CHECK(fx::same(Y[1], fx::sig::Y()[1]));

    const auto zero = sigma_prolong(fx::sig::X(), 2, MatrixExpr::zero(2, 2));
    CHECK(fx::same(zero[0], standard_prolong(fx::sig::X()[0], 2)));
    CHECK(fx::same(zero[1], standard_prolong(fx::sig::X()[1], 2)));

    const auto sp = fx::lam::space();
    const auto X = fx::field(sp, {"x^2"}, {"u*x"});
    const Expr lambda = P("x*u_x + exp(u)", sp);
    const auto single = sigma_prolong({X}, 2, MatrixExpr(std::vector<std::vector<Expr>>{{lambda}}));
    CHECK(fx::same(single[0], lambda_prolong(X, 2, lambda)));
}

TEST_CASE("gauge action") {
    const auto A = fx::mug::A();
    CHECK(fx::same(apply_gauge_vertical(A, fx::mug::X()), fx::mug::W()));
    CHECK(fx::same(apply_gauge_vertical(MatrixExpr::identity(2), fx::mug::W()), fx::mug::W()));
    CHECK(fx::same(apply_gauge_vertical(A, fx::mug::Y()), fx::mug::Z()));

    const auto W = apply_gauge_set(A, fx::sig::X());
    CHECK(fx::same(W[0], fx::sig::W()[0]));
    CHECK(fx::same(W[1], fx::sig::W()[1]));
    const auto same_set = apply_gauge_set(MatrixExpr::identity(2), fx::sig::X());
    CHECK(fx::same(same_set[1], fx::sig::X()[1]));
    const auto Z = apply_gauge_set(A, fx::sig::Y());
    CHECK(fx::same(Z[0], fx::sig::Z()[0]));
    CHECK(fx::same(Z[1], fx::sig::Z()[1]));
}

TEST_CASE("combination defect") {
    const auto sp = fx::line_uv(2);
    const auto X = fx::field(sp, {"x"}, {"u*v", "1"});
    const auto c = prolong_combination({Expr::rational(3, 2)}, {X}, 2);
    for (const auto& e : c.defect.components()) CHECK(fx::proven_zero(e));

    const auto one = fx::line_uv(1);
    const auto X1 = fx::field(one, {"u"}, {"x", "v"});
    const Expr f = P("x*u + v^2", one);
    const auto r = prolong_combination({f}, {X1}, 1);
    const Expr Dxf = total_derivative(f, 0, one);
    CHECK(fx::same(r.defect.psi(0, MultiIndex({1})), P("(x - u_x*u)", one) * Dxf));
    CHECK(fx::same(r.defect.psi(1, MultiIndex({1})), P("(v - v_x*u)", one) * Dxf));

    const auto line = fx::line_u(2);
    const auto d = prolong_combination({P("u", line)}, {fx::field(line, {"1"}, {"0"})}, 2);
    CHECK(fx::same(d.defect.psi(0, MultiIndex({1})), P("-u_x^2", line)));
    CHECK(fx::same(d.defect.psi(0, MultiIndex({2})), P("-3*u_x*u_xx", line)));
    CHECK(fx::same(d.combined, standard_prolong(fx::field(line, {"u"}, {"0"}), 2)));
}

TEST_CASE("bracket defect") {
    const auto X = fx::sig::X();
    const auto lie = bracket_defect(X, 2);
    REQUIRE(lie.size() == 1);
    for (const auto& c : lie.at({0, 1}).gamma.components()) CHECK(fx::proven_zero(c));

    CHECK(bracket_defect({X[0]}, 2).empty());

    const JetSpace plane({"x", "y"}, {"u"}, 1);
    const auto Dx = fx::field(plane, {"1", "0"}, {"0"});
    const auto E = fx::field(plane, {"exp(x)", "1"}, {"0"});
    const auto bd = bracket_defect({Dx, E}, 1).at({0, 1});
    CHECK(fx::same(bd.F[0], P("exp(x)", plane)));
    CHECK(fx::same(bd.F[1], Expr()));
    // D_x F times the characteristic -u_x of d/dx.
    const auto direct = commutator(standard_prolong(Dx, 1), standard_prolong(E, 1)) -
                        standard_prolong(Dx, 1).scaled(P("exp(x)", plane));
    CHECK(fx::same(bd.gamma, direct));
    CHECK(fx::same(bd.gamma.psi(0, MultiIndex({1, 0})), P("-exp(x)*u_x", plane)));
    CHECK(fx::same(bd.gamma.psi(0, MultiIndex({0, 1})), Expr()));

    const auto line = fx::line_u(1);
    CHECK_THROWS_AS(bracket_defect({fx::field(line, {"1"}, {"0"}), fx::field(line, {"exp(x)"}, {"0"})}, 1),
                    RankDeficient);
}
