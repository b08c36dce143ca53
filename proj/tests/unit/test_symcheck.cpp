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

TEST_CASE("verdict combination") {
    const auto sp = fx::line_u(1);
    CHECK(combine({make_check("a", Expr()), make_check("b", P("u - u", sp))}) == Verdict::proven);
    CHECK(combine({make_check("a", Expr()), make_check("b", P("u_x", sp))}) == Verdict::disproven);
    CHECK(combine({}) == Verdict::proven);
    CHECK(verdict_from_string("not-applicable") == Verdict::not_applicable);
    CHECK(std::string(to_string(Verdict::probable)) == "probable");
    CHECK_THROWS(verdict_from_string("maybe"));
}

TEST_CASE("restriction to a system") {
    const auto sp = fx::lam::space();
    const auto sys = fx::lam::equation();
    CHECK(restrict(P("u_xx - (1 + 2*x + u_x*(x + x^2))*exp(u)", sp), sys).is_zero_constant());
    CHECK(fx::same(restrict(P("x + u", sp), sys), P("x + u", sp)));

    const auto sp2 = fx::mug::space();
    const auto sys2 = fx::mug::systems()[0];
    CHECK(fx::same(restrict(P("u_xx*v", sp2), sys2), P("(x*u_x + exp(v))*v", sp2)));

    const auto sp3 = fx::line_uv(3);
    const auto sys3 = fx::system(sp3, {{"u_xx", "x*u_x + exp(v)"}});
    CHECK(fx::same(restrict(P("u_xxx", sp3), sys3), P("u_x + x*(x*u_x + exp(v)) + exp(v)*v_x", sp3)));
    CHECK_THROWS(fx::system(sp3, {{"u_xx", "u_xxx"}}));
}

TEST_CASE("symmetry verdicts") {
    const auto Y = lambda_prolong(fx::field(fx::lam::space(), {"0"}, {"1"}), 2, P(fx::lam::lambda(), fx::lam::space()));
    CHECK(is_symmetry(Y, fx::lam::equation()).verdict == Verdict::proven);
    CHECK(is_symmetry(standard_prolong(fx::field(fx::lam::space(), {"0"}, {"1"}), 2), fx::lam::equation()).verdict ==
          Verdict::disproven);
    CHECK(is_symmetry(Y, DiffSystem(fx::lam::space(), {})).verdict == Verdict::proven);

    const auto Ymu = mu_prolong(fx::mug::X(), 2, {fx::mug::Lambda()});
    const auto sp = fx::mug::space();
    CHECK(is_symmetry(Ymu, fx::system(sp, {{"u_xx", "x*u_x + exp(v)"}, {"v_xx", "v_x + x"}})).verdict ==
          Verdict::proven);
    for (const auto& sys : fx::mug::systems()) CHECK(is_symmetry(Ymu, sys).verdict == Verdict::proven);
    // f_12 depending on v breaks the class
    CHECK(is_symmetry(Ymu, fx::system(sp, {{"u_xx", "x*u_x + v*exp(v)"}, {"v_xx", "v_x"}})).verdict ==
          Verdict::disproven);
}

TEST_CASE("solutions") {
    const auto sp = fx::line_uv(2, {"k1", "k2"});
    const auto f = fx::mupt::section();
    CHECK(is_solution(f, fx::system(sp, {{"v_xx", "v"}})).verdict == Verdict::proven);
    const auto line = fx::line_u(2);
    CHECK(is_solution(Section(line, {{"u", Expr()}}), fx::system(line, {{"u_xx", "u_x"}})).verdict == Verdict::proven);
    const auto bad = is_solution(Section(line, {{"u", P("x", line)}}), fx::system(line, {{"u_xx", "1"}}));
    CHECK(bad.verdict == Verdict::disproven);
    REQUIRE(bad.checks.size() == 1);
    CHECK(fx::same(bad.checks[0].residual, Expr(-1)));
}

TEST_CASE("characteristic defects") {
    const auto sp = fx::mupt::space();
    for (const auto& q : characteristic_defect(fx::mupt::X(), fx::mupt::section())) CHECK(fx::proven_zero(q));
    const auto line = fx::line_u(1);
    const auto d = characteristic_defect(fx::field(line, {"0"}, {"1"}), Section(line, {{"u", P("x", line)}}));
    CHECK(fx::same(d[0], Expr(1)));
    CHECK(fx::proven_zero(characteristic_defect(fx::field(line, {"0"}, {"u"}), Section(line, {{"u", Expr()}}))[0]));
}

TEST_CASE("coincidence on invariant sections") {
    const auto sp = fx::mupt::space();
    const auto A = fx::mupt::A();
    const auto Yv = mu_prolong(fx::mupt::Xv(), 2, gauge_to_mu(A, sp));
    const auto Zv = apply_gauge_vertical(A, Yv);
    const auto X0 = standard_prolong(fx::mupt::Xv(), 2);
    const auto f = fx::mupt::section();
    CHECK(compare_on_invariant_sections(Yv, Zv, f).verdict == Verdict::proven);
    CHECK(compare_on_invariant_sections(Yv, X0, f).verdict == Verdict::proven);
    CHECK(compare_on_invariant_sections(Yv, Yv, f).verdict == Verdict::proven);

    const auto line = fx::lam::space();
    const auto Du = fx::field(line, {"0"}, {"1"});
    const auto na = compare_on_invariant_sections(standard_prolong(Du, 2), lambda_prolong(Du, 2, P("x", line)),
                                                  Section(line, {{"u", P("x", line)}}));
    CHECK(na.verdict == Verdict::not_applicable);
}

TEST_CASE("same distribution") {
    const auto sp = fx::lam::space();
    const auto Y = fx::lam::Y();
    CHECK(same_distribution({Y}, {Y.scaled(P("exp(u)", sp))}).verdict == Verdict::proven);
    CHECK(same_distribution({Y}, {fx::prolonged(sp, {{"x", "1"}})}).verdict == Verdict::disproven);
    CHECK(same_distribution(fx::sig::Y(), fx::sig::Z()).verdict == Verdict::proven);
    const auto r = generic_rank(fx::sig::Y());
    CHECK(r.rank == 2);
}
