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

#ifndef JETWIST_TESTS_FIXTURES_HPP
#define JETWIST_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "jetwist/canonical.hpp"
#include "jetwist/expr.hpp"
#include "jetwist/invariants.hpp"
#include "jetwist/jet.hpp"
#include "jetwist/matrix.hpp"
#include "jetwist/prolong.hpp"
#include "jetwist/symcheck.hpp"
#include "jetwist/twist.hpp"
#include "jetwist/vfield.hpp"

namespace fx {

using namespace jetwist;

inline JetSpace line_u(int n) { return JetSpace({"x"}, {"u"}, n); }
inline JetSpace line_uv(int n, std::vector<std::string> params = {}) {
    return JetSpace({"x"}, {"u", "v"}, n, std::move(params));
}

inline Expr P(const std::string& text, const JetSpace& sp) { return parse(text, sp); }

inline bool proven_zero(const Expr& e) { return is_zero(e) == ZeroVerdict::proven_zero; }
inline bool same(const Expr& a, const Expr& b) { return proven_zero(a - b); }

inline bool all_proven(const std::vector<CoefficientCheck>& checks) {
    for (const auto& c : checks)
        if (c.verdict != ZeroVerdict::proven_zero) return false;
    return true;
}

inline bool same(const ProlongedField& a, const ProlongedField& b) { return all_proven(compare_fields(a, b, "d")); }

inline bool same(const VectorField& a, const VectorField& b) {
    const auto ca = a.components();
    const auto cb = b.components();
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!same(ca[i], cb[i])) return false;
    return true;
}

inline bool same(const MatrixExpr& a, const MatrixExpr& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!same(a(i, j), b(i, j))) return false;
    return true;
}

/// A prolonged field on sp given as (coordinate name, coefficient) pairs; omitted coordinates are zero.
inline ProlongedField prolonged(const JetSpace& sp, const std::vector<std::pair<std::string, std::string>>& entries) {
    const auto coords = sp.coordinates();
    std::vector<Expr> comps(coords.size());
    for (const auto& [name, value] : entries)
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (coords[k].name() == name) comps[k] = P(value, sp);
    return ProlongedField::from_components(sp, comps, Provenance::raw);
}

inline VectorField field(const JetSpace& sp, const std::vector<std::string>& xi, const std::vector<std::string>& phi) {
    std::vector<Expr> a, b;
    for (const auto& s : xi) a.push_back(P(s, sp));
    for (const auto& s : phi) b.push_back(P(s, sp));
    return VectorField(sp, a, b);
}

inline MatrixExpr matrix(const JetSpace& sp, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Expr>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (const auto& s : r) out.back().push_back(P(s, sp));
    }
    return MatrixExpr(out);
}

inline DiffSystem system(const JetSpace& sp, const std::vector<std::pair<std::string, std::string>>& rules) {
    std::vector<std::pair<JetRef, Expr>> out;
    for (const auto& [lhs, rhs] : rules) out.emplace_back(*sp.resolve_jet(lhs), P(rhs, sp));
    return DiffSystem(sp, out);
}

// u_xx = D_x[(x + x^2) e^u].
namespace lam {
inline JetSpace space() { return line_u(2); }
inline const char* lambda() { return "(x + x^2)*exp(u)"; }
inline ProlongedField Y() {
    return prolonged(space(), {{"u", "1"},
                               {"u_x", "(x + x^2)*exp(u)"},
                               {"u_xx", "(exp(u)*(x^2 + x)^2 + 2*x + x*u_x*(x + 1) + 1)*exp(u)"}});
}
inline DiffSystem equation() { return system(space(), {{"u_xx", "(1 + 2*x + u_x*(x + x^2))*exp(u)"}}); }
}  // namespace lam

// X = d/dv, A = [[1, u], [0, 1]].
namespace mug {
inline JetSpace space() { return line_uv(2); }
inline VectorField X() { return field(space(), {"0"}, {"0", "1"}); }
inline MatrixExpr A() { return matrix(space(), {{"1", "u"}, {"0", "1"}}); }
inline MatrixExpr Lambda() { return matrix(space(), {{"0", "u_x"}, {"0", "0"}}); }
inline ProlongedField Y() { return prolonged(space(), {{"v", "1"}, {"u_x", "u_x"}, {"u_xx", "u_xx"}}); }
inline VectorField W() { return field(space(), {"0"}, {"u", "1"}); }
inline ProlongedField Z() {
    return prolonged(space(), {{"u", "u"}, {"v", "1"}, {"u_x", "u_x"}, {"u_xx", "u_xx"}});
}
inline InvariantChain y_chain() {
    const auto sp = space();
    return {{{P("x", sp), P("u", sp)}, {P("u_x*exp(-v)", sp), P("v_x", sp)}, {P("u_xx*exp(-v)", sp), P("v_xx", sp)}},
            ChainSource::user_supplied};
}
inline InvariantChain z_chain() {
    const auto sp = space();
    return {{{P("x", sp), P("u*exp(-v)", sp)}, {P("u_x/u", sp), P("v_x", sp)}, {P("u_xx/u", sp), P("v_xx", sp)}},
            ChainSource::user_supplied};
}
/// Concrete instances of u_xx = f11 u_x + f12 e^v, v_xx = f21 v_x + f22 with f_ij free of v.
inline std::vector<DiffSystem> systems() {
    const auto sp = space();
    return {system(sp, {{"u_xx", "x*u_x + exp(v)"}, {"v_xx", "u*v_x + x^2"}}),
            system(sp, {{"u_xx", "sin(x)*u_x + (u^2 + 1)*exp(v)"}, {"v_xx", "exp(x)*v_x + cos(u)"}}),
            system(sp, {{"u_xx", "x*u*u_x + exp(x + u)*exp(v)"}, {"v_xx", "(x - u)*v_x + 3"}})};
}
}  // namespace mug

// scaling and rotation, sigma = [[0, u_x], [0, 0]].
namespace sig {
inline JetSpace space() { return line_uv(2); }
inline std::vector<VectorField> X() {
    return {field(space(), {"0"}, {"u", "v"}), field(space(), {"0"}, {"v", "-u"})};
}
inline MatrixExpr A() { return mug::A(); }
inline MatrixExpr sigma() { return mug::Lambda(); }
inline std::vector<ProlongedField> Y() {
    const auto sp = space();
    return {prolonged(sp, {{"u", "u"},
                           {"v", "v"},
                           {"u_x", "u_x*(1 + v)"},
                           {"v_x", "v_x - u*u_x"},
                           {"u_xx", "u_xx*(1 + v) + 2*u_x*v_x"},
                           {"v_xx", "v_xx - u*u_xx - 2*u_x^2"}}),
            prolonged(sp, {{"u", "v"}, {"v", "-u"}, {"u_x", "v_x"}, {"v_x", "-u_x"}, {"u_xx", "v_xx"}, {"v_xx", "-u_xx"}})};
}
inline std::vector<VectorField> W() {
    return {field(space(), {"0"}, {"u*(1 + v)", "v - u^2"}), field(space(), {"0"}, {"v", "-u"})};
}
inline std::vector<ProlongedField> Z() {
    const auto sp = space();
    return {prolonged(sp, {{"u", "u*(1 + v)"},
                           {"v", "v - u^2"},
                           {"u_x", "u_x*(1 + v) + u*v_x"},
                           {"v_x", "v_x - 2*u*u_x"},
                           {"u_xx", "u_xx*(1 + v) + 2*u_x*v_x + u*v_xx"},
                           {"v_xx", "v_xx - 2*u*u_xx - 2*u_x^2"}}),
            prolonged(sp, {{"u", "v"}, {"v", "-u"}, {"u_x", "v_x"}, {"v_x", "-u_x"}, {"u_xx", "v_xx"}, {"v_xx", "-u_xx"}})};
}
}  // namespace sig

// X = -d/dx + u d/du + v d/dv with the mu_gauge matrix.
namespace mupt {
inline JetSpace space() { return line_uv(2, {"k1", "k2"}); }
inline VectorField X() { return field(space(), {"-1"}, {"u", "v"}); }
inline VectorField Xv() { return field(space(), {"0"}, {"u + u_x", "v + v_x"}); }
inline MatrixExpr A() { return matrix(space(), {{"1", "u"}, {"0", "1"}}); }
inline VectorField W() { return field(space(), {"-1"}, {"u*(1 + v)", "v"}); }
inline VectorField Wv() { return field(space(), {"0"}, {"u_x + u*(1 + v + v_x)", "v + v_x"}); }
inline VectorField Wev() { return field(space(), {"0"}, {"u_x + u*(1 + v)", "v + v_x"}); }
inline Section section() {
    const auto sp = space();
    return Section(sp, {{"u", P("k1*exp(-x)", sp)}, {"v", P("k2*exp(-x)", sp)}});
}
}  // namespace mupt

// The two-variable Maurer-Cartan cases.
namespace mc {
inline JetSpace space() {
    return JetSpace({"x", "y"}, {"u", "a1", "a2", "a3", "a4"}, 1, {"k1", "k2", "k3", "k4"});
}
inline MatrixExpr Lx() { return matrix(space(), {{"0", "u_x"}, {"0", "0"}}); }
inline MatrixExpr Ly_h() { return matrix(space(), {{"0", "u_y + cos(y)"}, {"0", "0"}}); }
inline MatrixExpr Ly_k() {
    return matrix(space(), {{"k1 - k2*u", "u_y - k2*u^2 + u*(k1 - k3) + k4"}, {"k2", "k3 + k2*u"}});
}
/// Literal entries of the k family, which break the Maurer-Cartan condition.
inline MatrixExpr Ly_literal() {
    return matrix(space(), {{"k1 - k2*u", "-k2*u - k2*u^2 + u_y + k4"}, {"k2", "k1 + k3 + k2*u"}});
}
inline MatrixExpr ansatz() { return matrix(space(), {{"a1 + u*a2", "a3 + u*a4"}, {"a2", "a4"}}); }
}  // namespace mc

}  // namespace fx

#endif
