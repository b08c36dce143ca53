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

using namespace jetwist;
using fx::P;

TEST_CASE("multi-indices") {
    const MultiIndex J({1, 0});
    CHECK(J.order() == 1);
    CHECK(J.increment(1) == MultiIndex({1, 1}));
    CHECK(J.increment(0).increment(1) == J.increment(1).increment(0));
    const JetSpace sp({"x", "y"}, {"u"}, 2);
    const auto second = sp.multi_indices(2);
    REQUIRE(second.size() == 3);
    CHECK(sp.jet_name(0, second[0]) == "u_xx");
    CHECK(sp.jet_name(0, second[1]) == "u_xy");
    CHECK(sp.jet_name(0, second[2]) == "u_yy");
    CHECK(sp.coordinate_count() == 2 + 6);
    CHECK(sp.jet_order(P("u_x*u_yy + x", sp)) == 2);
}

TEST_CASE("total derivatives") {
    const auto sp = fx::line_uv(2);
    CHECK(total_derivative(P("u", sp), 0, sp) == P("u_x", sp));
    CHECK(fx::same(total_derivative(P("(x + x^2)*exp(u)", sp), 0, sp),
                   P("(1 + 2*x)*exp(u) + (x + x^2)*exp(u)*u_x", sp)));
    CHECK(fx::same(total_derivative(P("u_x*exp(-v)", sp), 0, sp), P("u_xx*exp(-v) - u_x*v_x*exp(-v)", sp)));
    CHECK(fx::same(total_derivative(P("u_xx", sp), 0, sp), P("u_xxx", sp)));

    const JetSpace sp2({"x", "y"}, {"u"}, 2);
    const Expr e = P("x*y*u_x + exp(u)*u_y", sp2);
    CHECK(fx::same(total_derivative(e, MultiIndex({1, 1}), sp2),
                   total_derivative(total_derivative(e, 1, sp2), 0, sp2)));
    CHECK(total_derivative(P("k", JetSpace({"x"}, {"u"}, 1, {"k"})), 0, JetSpace({"x"}, {"u"}, 1, {"k"}))
              .is_zero_constant());
}

TEST_CASE("prolonged sections") {
    const auto sp = fx::line_uv(2, {"k1", "k2"});
    const auto jets = prolong_section(fx::mupt::section(), sp);
    CHECK(fx::same(jets.at("u_x"), P("-k1*exp(-x)", sp)));
    CHECK(fx::same(jets.at("u_xx"), P("k1*exp(-x)", sp)));
    CHECK(fx::same(jets.at("v_x"), P("-k2*exp(-x)", sp)));
    CHECK(fx::same(jets.at("v_xx"), P("k2*exp(-x)", sp)));

    const auto line = JetSpace({"x"}, {"u"}, 3, {"c"});
    const auto constant = prolong_section(Section(line, {{"u", P("c", line)}}), line);
    for (const char* j : {"u_x", "u_xx", "u_xxx"}) CHECK(constant.at(j).is_zero_constant());

    const auto cubic = prolong_section(Section(line, {{"u", P("x^3", line)}}), line);
    CHECK(fx::same(cubic.at("u_x"), P("3*x^2", line)));
    CHECK(fx::same(cubic.at("u_xx"), P("6*x", line)));
    CHECK(fx::same(cubic.at("u_xxx"), P("6", line)));

    CHECK_THROWS(Section(line, {{"u", P("u_x", line)}}));
}

TEST_CASE("contact forms") {
    const auto one = contact_forms(fx::line_u(1));
    REQUIRE(one.size() == 1);
    CHECK(one[0].du.name() == "u");
    CHECK(fx::same(one[0].dx[0], P("-u_x", fx::line_u(1))));

    const JetSpace plane({"x", "y"}, {"u"}, 1);
    const auto two = contact_forms(plane);
    REQUIRE(two.size() == 1);
    CHECK(fx::same(two[0].dx[0], P("-u_x", plane)));
    CHECK(fx::same(two[0].dx[1], P("-u_y", plane)));

    const auto four = contact_forms(fx::line_uv(2));
    REQUIRE(four.size() == 4);
    std::vector<std::string> names;
    for (const auto& f : four) names.push_back(f.du.name());
    CHECK(names == std::vector<std::string>{"u", "v", "u_x", "v_x"});
}
