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

#include <cmath>
#include <filesystem>

#include "doctest.h"

#include "../fixtures.hpp"
#include "jetwist/cli.hpp"
#include "jetwist/errors.hpp"

using namespace jetwist;
using fx::P;

TEST_CASE("parse builds trees over the jet space") {
    const auto sp = fx::line_u(2);
    const Expr e = P("(x + x^2)*exp(u)", sp);
    CHECK(e.kind() == Expr::Kind::product);
    bool has_sum = false, has_exp = false;
    for (const auto& o : e.operands()) {
        has_sum |= o.kind() == Expr::Kind::sum;
        has_exp |= o.kind() == Expr::Kind::exp;
    }
    CHECK(has_sum);
    CHECK(has_exp);

    CHECK(P("0", sp).is_zero_constant());

    const Expr eq = P("u_xx - (1 + 2*x + u_x*(x + x^2))*exp(u)", sp);
    bool ux = false, uxx = false;
    for (const auto& s : symbols(eq)) {
        ux |= s.name() == "u_x" && s.kind() == SymbolKind::dependent_jet;
        uxx |= s.name() == "u_xx" && s.kind() == SymbolKind::dependent_jet;
    }
    CHECK(ux);
    CHECK(uxx);
}

TEST_CASE("parse errors carry positions") {
    const auto sp = fx::line_u(2);
    CHECK_THROWS_AS(P("x +", sp), ParseError);
    CHECK_THROWS_AS(P("w + 1", sp), ParseError);
    CHECK_THROWS_AS(sp.resolve("w"), UnknownSymbol);
    try {
        P("x * (u", sp);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() >= 5);
    }
}

TEST_CASE("positional jets alias named jets") {
    const JetSpace sp({"x", "y"}, {"u"}, 2);
    CHECK(fx::same(P("u[1,1]", sp), P("u_xy", sp)));
    CHECK(fx::same(P("u_yx", sp), P("u_xy", sp)));
    const JetSpace wide({"t", "s1"}, {"w"}, 2);
    CHECK(wide.jet_name(0, MultiIndex({1, 1})) == "w[1,1]");
}

TEST_CASE("diff") {
    const auto sp = fx::line_uv(1);
    const Symbol u = sp.dependent(0);
    const Symbol x = sp.independent(0);
    CHECK(fx::same(diff(P("x*exp(u)", sp), u), P("x*exp(u)", sp)));
    CHECK(fx::same(diff(P("u_x*exp(-v)", sp), sp.jet(0, MultiIndex({1}))), P("exp(-v)", sp)));
    CHECK(diff(Expr(7), x).is_zero_constant());
    CHECK(fx::same(diff(P("sin(x)*cos(x)", sp), x), P("cos(x)^2 - sin(x)^2", sp)));
    CHECK(fx::same(diff(P("ln(1 + x^2)", sp), x), P("2*x/(1 + x^2)", sp)));
}

TEST_CASE("normalize applies the kernel rules") {
    const auto sp = fx::line_uv(1);
    CHECK(normalize(P("exp(x)*exp(u)", sp)) == normalize(P("exp(x + u)", sp)));
    CHECK(normalize(P("x + x", sp)) == normalize(P("2*x", sp)));
    CHECK(normalize(P("exp(0)", sp)).is_one_constant());
    CHECK(normalize(P("ln(1)", sp)).is_zero_constant());
    CHECK(normalize(P("sin(0)", sp)).is_zero_constant());
    CHECK(normalize(P("cos(0)", sp)).is_one_constant());
    CHECK(normalize(P("ln(exp(x + u))", sp)) == normalize(P("x + u", sp)));
    CHECK(normalize(P("(x^2 - 1)/(x - 1)", sp)) == normalize(P("x + 1", sp)));
}

TEST_CASE("rescaled lambda data cancel") {
    // alpha Y for alpha = e^u, written two ways.
    const auto sp = fx::line_u(2);
    const Expr a = P("exp(u)*(exp(u)*(x^2 + x)^2 + 2*x + x*u_x*(x + 1) + 1)*exp(u)", sp);
    const Expr b = P("exp(3*u)*(x + x^2)^2 + exp(2*u)*(1 + 2*x + u_x*(x + x^2))", sp);
    CHECK(normalize(a - b).is_zero_constant());
}

TEST_CASE("is_zero verdicts") {
    const auto sp = fx::line_uv(1);
    CHECK(is_zero(P("exp(x + u) - exp(x)*exp(u)", sp)) == ZeroVerdict::proven_zero);
    CHECK(is_zero(P("u_x", sp)) == ZeroVerdict::proven_nonzero);
    CHECK(is_zero(P("sin(x)^2 + cos(x)^2 - 1", sp)) == ZeroVerdict::proven_zero);
    CHECK(is_zero(P("sin(2*x) - 2*sin(x)*cos(x)", sp)) != ZeroVerdict::proven_nonzero);
    CHECK(std::string(to_string(ZeroVerdict::probably_zero)) == "probably-zero");
}

TEST_CASE("subst") {
    const auto sp = fx::line_uv(2, {"k1", "k2"});
    Assignment a{{"u", P("k1*exp(-x)", sp)},
                 {"v", P("k2*exp(-x)", sp)},
                 {"u_x", P("-k1*exp(-x)", sp)},
                 {"v_x", P("-k2*exp(-x)", sp)}};
    CHECK(fx::same(subst(P("u_x*exp(-v)", sp), a), P("-k1*exp(-x)*exp(-k2*exp(-x))", sp)));
    CHECK(subst(P("x", sp), {}) == P("x", sp));
    const Expr rhs = P("(1 + 2*x + u_x*(x + x^2))*exp(u)", sp);
    CHECK(fx::same(subst(P("u_xx", sp), {{"u_xx", rhs}}), rhs));
    CHECK_THROWS_AS(subst(P("u + x", sp), {{"u", Expr(1)}}, SubstMode::strict), MissingSymbols);
}

TEST_CASE("eval_numeric") {
    const auto sp = fx::line_u(1);
    CHECK(eval_numeric(P("x^2", sp), {{"x", 3.0}}) == doctest::Approx(9.0));
    CHECK(eval_numeric(P("exp(0)", sp), {}) == doctest::Approx(1.0));
    CHECK(eval_numeric(P("(x + x^2)*exp(u)", sp), {{"x", 1.0}, {"u", 0.0}}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(eval_numeric(P("ln(x)", sp), {{"x", -1.0}}), DomainError);
    CHECK_THROWS_AS(eval_numeric(P("1/x", sp), {{"x", 0.0}}), DomainError);
    CHECK_THROWS_AS(eval_numeric(P("x + u", sp), {{"x", 1.0}}), MissingSymbols);
}

TEST_CASE("render round trip over the corpus") {
    namespace fs = std::filesystem;
    std::size_t seen = 0;
    for (const auto& entry : fs::directory_iterator(CORPUS_DIR)) {
        if (entry.path().extension() != ".prob") continue;
        const auto file = load_problem(entry.path().string());
        const auto& sp = *file.space;
        auto check = [&](const Expr& e) {
            ++seen;
            CHECK(normalize(parse(render(e), sp)) == normalize(e));
            CHECK(normalize(parse(to_string(e), sp)) == normalize(e));
        };
        for (const auto& [name, f] : file.fields)
            for (const auto& c : f.components()) check(c);
        for (const auto& [name, d] : file.prolonged)
            for (const auto& [coord, c] : d.coefficients) check(c);
        for (const auto& [name, m] : file.matrices)
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) check(m(i, j));
        for (const auto& [name, sys] : file.equations)
            for (const auto& [lhs, rhs] : sys.rules()) check(rhs);
    }
    CHECK(seen > 100);
}

TEST_CASE("normalize cancels multivariate common factors") {
    const auto sp = fx::line_uv(1);
    const Expr p = P("(x*u + v^2 - 3)*(u_x + x*v + 1/2)", sp);
    CHECK(normalize(P("(x + u)", sp) * p / (P("(x - v)", sp) * p)) == normalize(P("(x + u)/(x - v)", sp)));
    CHECK(normalize(P("(u^2*v^2 - x^2)/(u*v - x)", sp)) == normalize(P("u*v + x", sp)));
    CHECK(normalize(P("(x*u + 1)/(x*v + 1)", sp)) != normalize(P("u/v", sp)));
    CHECK(normalize(P("(u + v)^3/(u^2 - v^2)", sp)) == normalize(P("(u + v)^2/(u - v)", sp)));
}
