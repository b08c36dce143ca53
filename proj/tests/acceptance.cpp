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

// Acceptance run: one PASS/FAIL line per criterion, with its runtime and limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "properties.hpp"

using namespace jetwist;
using fx::P;

namespace {

struct Item {
    std::string label;
    bool ok;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double limit;  // seconds; 0 for none
    std::function<void(std::vector<Item>&, std::vector<std::string>&)> body;
};

std::string verdict_text(bool ok) { return ok ? "ok" : "not ok"; }

bool all_zero(const ProlongedField& a, const ProlongedField& b, std::string& detail) {
    for (const auto& c : compare_fields(a, b, "diff"))
        if (c.verdict != ZeroVerdict::proven_zero) {
            detail = c.label + " = " + render(c.residual);
            return false;
        }
    return true;
}

Item fields_equal(const std::string& label, const ProlongedField& a, const ProlongedField& b) {
    std::string d;
    const bool ok = all_zero(a, b, d);
    return {label, ok, d};
}

Item vfields_equal(const std::string& label, const VectorField& a, const VectorField& b) {
    return {label, fx::same(a, b), fx::same(a, b) ? "" : describe(a)};
}

Item matrices_equal(const std::string& label, const MatrixExpr& a, const MatrixExpr& b) {
    return {label, fx::same(a, b), fx::same(a, b) ? "" : a.render()};
}

bool zero_matrix(const MatrixExpr& m) { return fx::same(m, MatrixExpr::zero(m.rows(), m.cols())); }

void lambda_scalar(std::vector<Item>& items, std::vector<std::string>&) {
    const auto sp = fx::lam::space();
    const auto Y = lambda_prolong(fx::field(sp, {"0"}, {"1"}), 2, P(fx::lam::lambda(), sp));
    items.push_back(fields_equal("lambda prolongation equals the reference Y", Y, fx::lam::Y()));
    const auto rep = is_symmetry(Y, fx::lam::equation());
    items.push_back({"symmetry of u_xx = [1 + 2x + u_x(x + x^2)] e^u", rep.verdict == Verdict::proven,
                     to_string(rep.verdict)});
}

void mu_gauge(std::vector<Item>& items, std::vector<std::string>&) {
    const auto sp = fx::mug::space();
    const auto Y = mu_prolong(fx::mug::X(), 2, {fx::mug::Lambda()});
    items.push_back(fields_equal("(a) mu prolongation equals the reference Y", Y, fx::mug::Y()));
    const auto L = gauge_to_mu(fx::mug::A(), sp);
    items.push_back(matrices_equal("(b) gauge_to_mu([[1,u],[0,1]])", L.at(0), fx::mug::Lambda()));
    const auto rep = verify_mu_diagram(fx::mug::X(), fx::mug::A(), 2);
    std::string d;
    items.push_back({"(c) diagram commutes with Z the standard prolongation of u d/du + d/dv",
                     rep.commutes && all_zero(rep.gauged.at(0), fx::mug::Z(), d) &&
                         fx::same(rep.gauged_base.at(0), fx::mug::W()),
                     d});
    const auto ry = verify_chain(fx::mug::y_chain(), Y);
    const auto rz = verify_chain(fx::mug::z_chain(), rep.standard.at(0));
    items.push_back({"(d) six Y-invariants and six Z-invariants",
                     ry.invariance.verdict == Verdict::proven && rz.invariance.verdict == Verdict::proven &&
                         ry.invariance.checks.size() == 6 && rz.invariance.checks.size() == 6,
                     std::string(to_string(ry.invariance.verdict)) + "/" + to_string(rz.invariance.verdict)});
    items.push_back({"(e) IBDP fails for Y and holds for Z",
                     ry.ibdp_status == IbdpStatus::fails && rz.ibdp_status == IbdpStatus::holds,
                     std::string(to_string(ry.ibdp_status)) + "/" + to_string(rz.ibdp_status)});
    bool all = true;
    std::string which;
    int k = 0;
    for (const auto& sys : fx::mug::systems()) {
        ++k;
        if (is_symmetry(Y, sys).verdict != Verdict::proven) {
            all = false;
            which += " system " + std::to_string(k);
        }
    }
    items.push_back({"(f) symmetry of the equation class for 3 choices of f_ij", all, which});
}

void sigma_gauge(std::vector<Item>& items, std::vector<std::string>&) {
    const auto sp = fx::sig::space();
    const auto Y = sigma_prolong(fx::sig::X(), 2, fx::sig::sigma());
    items.push_back(fields_equal("sigma prolongation Y1", Y.at(0), fx::sig::Y()[0]));
    items.push_back(fields_equal("sigma prolongation Y2", Y.at(1), fx::sig::Y()[1]));
    items.push_back(matrices_equal("gauge_to_sigma([[1,u],[0,1]])", gauge_to_sigma(fx::sig::A(), sp), fx::sig::sigma()));
    const auto rep = verify_sigma_diagram(fx::sig::X(), fx::sig::A(), 2);
    items.push_back({"diagram commutes", rep.commutes, ""});
    for (std::size_t i = 0; i < 2; ++i) {
        const auto n = std::to_string(i + 1);
        items.push_back(vfields_equal("W" + n + " matches the reference", rep.gauged_base.at(i), fx::sig::W()[i]));
        items.push_back(fields_equal("Z" + n + " matches the reference", rep.gauged.at(i), fx::sig::Z()[i]));
        items.push_back(fields_equal("Z" + n + " is the standard prolongation of W" + n, rep.gauged.at(i),
                                     standard_prolong(fx::sig::W()[i], 2)));
    }
}

void mu_point(std::vector<Item>& items, std::vector<std::string>& info) {
    const auto sp = fx::mupt::space();
    items.push_back(vfields_equal("evolutionary representative", evolutionary_rep(fx::mupt::X()), fx::mupt::Xv()));
    const auto vert = verify_mu_diagram(fx::mupt::Xv(), fx::mupt::A(), 2);
    items.push_back({"Z_v = W_v^(2) for the evolutionary field",
                     vert.commutes && fx::same(vert.gauged_base.at(0), fx::mupt::Wv()), ""});

    const auto rep = verify_mu_diagram(fx::mupt::X(), fx::mupt::A(), 2);
    const auto diff = rep.gauged.at(0) - rep.standard.at(0);
    const auto expected = fx::prolonged(sp, {{"u_x", "u_x*v_x"}, {"u_xx", "u_x*v_xx"}});
    std::string d;
    const bool match = all_zero(diff, expected, d);
    items.push_back({"Z - W^(2) = u_x v_x d/du_x + u_x v_xx d/du_xx", match,
                     "computed u_x: " + render(diff.psi(0, MultiIndex({1}))) +
                         ", u_xx: " + render(diff.psi(0, MultiIndex({2})))});
    info.push_back("computed Z - W^(2): (" + render(diff.psi(0, MultiIndex({1}))) + ") d/du_x + (" +
                   render(diff.psi(0, MultiIndex({2}))) + ") d/du_xx; the v coefficients vanish");

    const auto wv = is_evolutionary_rep(fx::mupt::Wv());
    const bool wrong_rep = !fx::same(evolutionary_rep(fx::mupt::W()), fx::mupt::Wv()) &&
                           fx::same(evolutionary_rep(fx::mupt::W()), fx::mupt::Wev());
    items.push_back({"W_v rejected: it is not the evolutionary representative of W (that is W_ev)",
                     !wv.ok && wrong_rep, wv.reason});

    const auto Yv = vert.twisted.at(0);
    const auto Zv = vert.gauged.at(0);
    const auto X0 = standard_prolong(fx::mupt::Xv(), 2);
    const auto f = fx::mupt::section();
    const bool coincide = compare_on_invariant_sections(Yv, Zv, f).verdict == Verdict::proven &&
                          compare_on_invariant_sections(Yv, X0, f).verdict == Verdict::proven;
    const auto jets = prolong_section(f, sp.with_order(3));
    bool vanish = true;
    for (const auto* P : {&Yv, &Zv, &X0})
        for (const auto& c : P->components()) vanish &= fx::proven_zero(subst(c, jets));
    items.push_back({"Y_v = Z_v = (X_v)_0^(2), all vanishing, on u = k1 e^-x, v = k2 e^-x", coincide && vanish, ""});
}

void maurer_cartan(std::vector<Item>& items, std::vector<std::string>& info) {
    const auto sp = fx::mc::space();
    auto vanishes = [&](const MatrixExpr& Ly) {
        for (const auto& m : mc_defect({fx::mc::Lx(), Ly}, sp))
            if (!zero_matrix(m)) return false;
        return true;
    };
    items.push_back({"MC defect zero for the h(y) pair", vanishes(fx::mc::Ly_h()), ""});
    items.push_back({"MC defect zero for the constant k_i pair", vanishes(fx::mc::Ly_k()), ""});
    const auto res = lai_residual(fx::mc::ansatz(), fx::mc::Ly_k(), 1, sp);
    items.push_back({"D_yA - A Lambda_y nonzero within the ansatz", !zero_matrix(res), res.render()});
    const auto literal = mc_defect({fx::mc::Lx(), fx::mc::Ly_literal()}, sp).at(0);
    info.push_back("literal entries give MC defect (1,2) = " + render(literal(0, 1)));
}

void structural(std::vector<Item>& items, std::vector<std::string>&) {
    for (const auto& p : props::structural()) {
        const auto o = p.run(props::default_seed, 50);
        items.push_back({o.name + " (" + std::to_string(o.cases) + " cases)", o.ok() && o.cases >= 50, o.first_failure});
    }
}

void expression_core(std::vector<Item>& items, std::vector<std::string>&) {
    for (const auto& p : props::expression_core()) {
        const auto o = p.run(props::default_seed, 200);
        items.push_back({o.name + " (" + std::to_string(o.cases) + " expressions)", o.ok() && o.cases >= 200,
                         o.first_failure});
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "lambda-prolonged symmetry end-to-end", 1.0, lambda_scalar},
        {2, "mu gauge end-to-end", 5.0, mu_gauge},
        {3, "sigma gauge end-to-end", 5.0, sigma_gauge},
        {4, "non-vertical mu field end-to-end", 5.0, mu_point},
        {5, "Maurer-Cartan corpus", 5.0, maurer_cartan},
        {6, "property suites", 60.0, structural},
        {7, "expression-core soundness", 0.0, expression_core},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        std::vector<Item> items;
        std::vector<std::string> info;
        const auto t0 = std::chrono::steady_clock::now();
        std::string crash;
        try {
            c.body(items, info);
        } catch (const std::exception& e) {
            crash = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = crash.empty() && !items.empty();
        for (const auto& it : items) ok &= it.ok;
        const bool in_time = c.limit <= 0.0 || secs < c.limit;
        ok &= in_time;
        char timing[64];
        if (c.limit > 0.0)
            std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", secs, c.limit);
        else
            std::snprintf(timing, sizeof timing, "%.3fs", secs);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << timing << "]\n";
        for (const auto& it : items) {
            std::cout << "    " << verdict_text(it.ok) << ": " << it.label;
            if (!it.ok && !it.detail.empty()) std::cout << " -- " << it.detail;
            std::cout << '\n';
        }
        for (const auto& s : info) std::cout << "    info: " << s << '\n';
        if (!crash.empty()) std::cout << "    error: " << crash << '\n';
        if (!in_time) std::cout << "    over the time limit\n";
        if (!ok) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
    return failed == 0 ? 0 : 1;
}
