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

#include <chrono>
#include <ostream>

#include "jetwist/cli.hpp"
#include "jetwist/errors.hpp"
#include "jetwist/prolong.hpp"
#include "jetwist/twist.hpp"
#include "problem_util.hpp"

namespace jetwist {

namespace {

using detail::split_top;

CheckSummary summarize(const ResidualCheck& c) { return {c.label, render(c.residual), to_string(c.zero)}; }

ResidualCheck to_residual(const CoefficientCheck& c) { return {c.label, c.residual, c.verdict}; }

std::vector<ResidualCheck> to_residual(const std::vector<CoefficientCheck>& cs) {
    std::vector<ResidualCheck> out;
    for (const auto& c : cs) out.push_back(to_residual(c));
    return out;
}

std::string join_lines(const std::string& s) {
    std::string out = s;
    while (!out.empty() && out.back() == '\n') out.pop_back();
    return out;
}

/// Embeds P in the jet space of order n; coefficients above n must vanish.
ProlongedField at_order(const ProlongedField& P, int n) {
    if (P.order() == n) return P;
    const JetSpace sp = P.space().with_order(n);
    std::map<JetRef, Expr> psi;
    for (const auto& [r, c] : P.psi()) {
        if (r.index.order() <= n) psi.emplace(r, c);
        else if (!vanishes(c))
            throw PreconditionError("field has a nonzero coefficient on " + P.space().jet_name(r.dependent, r.index) +
                                    " above order " + std::to_string(n));
    }
    return ProlongedField(sp, P.xi(), std::move(psi), P.provenance());
}

class Task {
public:
    Task(const TaskSpec& spec, const ProblemFile& file, const RunOptions& opts,
         std::map<std::string, ProlongedField>& prolonged, std::map<std::string, VectorField>& fields,
         std::map<std::string, MatrixExpr>& matrices, std::map<std::string, Twist>& twists,
         std::map<std::string, InvariantChain>& chains)
        : spec_(spec), file_(file), opts_(opts), prolonged_(prolonged), fields_(fields), matrices_(matrices),
          twists_(twists), chains_(chains), space_(*file.space) {
        result_.id = spec.id;
        result_.kind = spec.kind;
    }

    TaskResult run() {
        const auto start = std::chrono::steady_clock::now();
        try {
            dispatch();
            if (!decided_) result_.computed = combine(checks_);
        } catch (const std::exception& e) {
            result_.computed = Verdict::error;
            result_.error = e.what();
        }
        for (const auto& c : checks_) result_.checks.push_back(summarize(c));
        result_.verdict = result_.computed;
        if (auto it = spec_.keys.find("verdict"); it != spec_.keys.end()) {
            result_.expected = verdict_from_string(it->second);
            result_.verdict = result_.computed == *result_.expected ? Verdict::proven : Verdict::disproven;
            if (result_.verdict == Verdict::disproven)
                result_.notes.push_back(std::string("expected verdict ") + to_string(*result_.expected) + ", computed " +
                                        to_string(result_.computed));
        }
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result_;
    }

private:
    // ------------------------------------------------------------ key access

    bool has(const std::string& k) const { return spec_.keys.count(k) != 0; }
    const std::string& key(const std::string& k) const { return spec_.keys.at(k); }

    std::vector<std::string> list(const std::string& k) const {
        std::vector<std::string> out;
        for (const auto& [s, c] : split_top(key(k), ',')) out.push_back(s);
        return out;
    }

    int order() const {
        const int n = std::stoi(key("order"));
        if (n > opts_.max_order)
            throw PreconditionError("order " + std::to_string(n) + " exceeds the maximum order " +
                                    std::to_string(opts_.max_order));
        return n;
    }

    const VectorField& field(const std::string& name) const { return fields_.at(name); }

    std::vector<VectorField> field_list(const std::string& k) const {
        std::vector<VectorField> out;
        for (const auto& n : list(k)) out.push_back(field(n));
        return out;
    }

    ProlongedField prolonged(const std::string& name) const {
        if (auto it = prolonged_.find(name); it != prolonged_.end()) return it->second;
        const ProlongedDecl& d = file_.prolonged.at(name);
        const JetSpace sp = space_.with_order(d.order);
        std::vector<Expr> xi(sp.q());
        std::map<JetRef, Expr> psi;
        for (const auto& [coord, c] : d.coefficients) {
            if (auto i = sp.independent_index(coord)) xi[*i] = c;
            else psi.emplace(*sp.resolve_jet(coord), c);
        }
        return ProlongedField(sp, std::move(xi), std::move(psi), Provenance::raw);
    }

    ProlongedField prolonged(const std::string& name, int n) const { return at_order(prolonged(name), n); }

    const Twist& twist(TwistKind kind) const {
        const Twist& t = twists_.at(key("twist"));
        if (t.kind != kind)
            throw PreconditionError("twist '" + key("twist") + "' is a " + to_string(t.kind) + " twist, expected " +
                                    to_string(kind));
        return t;
    }

    // --------------------------------------------------------------- results

    void output(const std::string& name, const std::string& value) { result_.outputs.emplace_back(name, join_lines(value)); }

    void output(const std::string& name, const ProlongedField& P) {
        output(name, describe(P));
        result_.provenance[name] = to_string(P.provenance());
        for (const auto& n : P.notes()) result_.notes.push_back(name + ": " + n);
    }

    void add(std::vector<ResidualCheck> cs) {
        for (auto& c : cs) checks_.push_back(std::move(c));
    }

    void add(const VerdictReport& rep) {
        add(rep.checks);
        for (const auto& n : rep.notes) result_.notes.push_back(n);
        for (const auto& [k, v] : rep.provenance) result_.provenance[k] = v;
    }

    void decide(Verdict v) {
        result_.computed = v;
        decided_ = true;
    }

    void compare(const ProlongedField& got, const std::string& expected_name, const std::string& label) {
        add(to_residual(compare_fields(got, prolonged(expected_name, got.order()), label)));
    }

    void compare(const VectorField& got, const VectorField& want, const std::string& label) {
        const auto coords = space_.with_order(0).coordinates();
        const auto a = got.components();
        const auto b = want.components();
        for (std::size_t k = 0; k < coords.size(); ++k)
            checks_.push_back(make_check(label + ": d/d" + coords[k].name(), a[k] - b[k]));
    }

    void compare(const MatrixExpr& got, const MatrixExpr& want, const std::string& label) {
        if (got.rows() != want.rows() || got.cols() != want.cols()) throw DimensionMismatch(label + ": sizes differ");
        for (std::size_t i = 0; i < got.rows(); ++i)
            for (std::size_t j = 0; j < got.cols(); ++j)
                checks_.push_back(make_check(label + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                             got(i, j) - want(i, j)));
    }

    void matrix_checks(const MatrixExpr& m, const std::string& label) {
        compare(m, MatrixExpr::zero(m.rows(), m.cols()), label);
    }

    template <class T, class V>
    void store(std::map<std::string, T>& table, const std::string& k, const V& value) {
        if (has(k)) table.insert_or_assign(key(k), value);
    }

    // ----------------------------------------------------------------- tasks

    void dispatch() {
        const std::string& k = spec_.kind;
        if (k == "prolong") prolong();
        else if (k == "mu-prolong") mu();
        else if (k == "lambda-prolong") lambda();
        else if (k == "sigma-prolong") sigma();
        else if (k == "check-symmetry") symmetry();
        else if (k == "check-mc") mc();
        else if (k == "gauge-to-mu") gauge_mu();
        else if (k == "gauge-to-sigma") gauge_sigma();
        else if (k == "check-mu-diagram") mu_diagram();
        else if (k == "check-sigma-diagram") sigma_diagram();
        else if (k == "check-solution") solution();
        else if (k == "check-invariant-section") invariant_section();
        else if (k == "compare-on-sections") on_sections();
        else if (k == "check-chain") chain();
        else if (k == "ibdp-extend") extend();
        else if (k == "prolong-combination") combination();
        else if (k == "bracket-defect") brackets();
        else if (k == "check-involution") involution();
        else if (k == "check-lie-algebra") lie_algebra();
        else if (k == "same-distribution") distribution();
        else if (k == "evolutionary-rep") evolutionary();
        else if (k == "check-evolutionary-rep") check_evolutionary();
        else if (k == "lai-residual") lai();
        else throw PreconditionError("unknown task kind '" + k + "'");
    }

    void finish_prolonged(const ProlongedField& P) {
        output(has("as") ? key("as") : "result", P);
        if (has("expect")) compare(P, key("expect"), "computed - " + key("expect"));
        store(prolonged_, "as", P);
    }

    void prolong() { finish_prolonged(standard_prolong(field(key("field")), order())); }

    void mu() {
        MuOptions mo;
        mo.require_maurer_cartan = !has("maurer-cartan") || key("maurer-cartan") == "required";
        finish_prolonged(mu_prolong(field(key("field")), order(), twist(TwistKind::mu).matrices, mo));
    }

    void lambda() { finish_prolonged(lambda_prolong(field(key("field")), order(), twist(TwistKind::lambda).lambda)); }

    void sigma() {
        const auto Ys = sigma_prolong(field_list("fields"), order(), twist(TwistKind::sigma).matrices[0]);
        const auto names = has("as") ? list("as") : std::vector<std::string>{};
        const auto expect = has("expect") ? list("expect") : std::vector<std::string>{};
        if ((!names.empty() && names.size() != Ys.size()) || (!expect.empty() && expect.size() != Ys.size()))
            throw DimensionMismatch("sigma-prolong: name lists must match the number of fields");
        for (std::size_t a = 0; a < Ys.size(); ++a) {
            const std::string name = names.empty() ? "result" + std::to_string(a + 1) : names[a];
            output(name, Ys[a]);
            if (!expect.empty()) compare(Ys[a], expect[a], name + " - " + expect[a]);
            if (!names.empty()) prolonged_.insert_or_assign(names[a], Ys[a]);
        }
    }

    RestrictOptions restrict_options() const {
        RestrictOptions ro;
        ro.max_order = opts_.max_order;
        return ro;
    }

    void symmetry() {
        add(is_symmetry(prolonged(key("prolonged")), file_.equations.at(key("equations")), restrict_options()));
    }

    void mc() {
        const Twist& t = twist(TwistKind::mu);
        const JetSpace sp = space_.with_order(std::max(space_.order(), 1));
        const auto defects = mc_defect(t.matrices, sp);
        std::size_t k = 0;
        for (std::size_t i = 0; i < sp.q(); ++i)
            for (std::size_t j = i + 1; j < sp.q(); ++j) {
                const MatrixExpr& d = defects[k++];
                output("MC[" + sp.independents()[i] + "," + sp.independents()[j] + "]", d.render());
                matrix_checks(d, "MC[" + sp.independents()[i] + "," + sp.independents()[j] + "]");
            }
        if (defects.empty()) result_.notes.push_back("one independent variable: no Maurer-Cartan condition");
    }

    void gauge_mu() {
        const JetSpace sp = space_.with_order(std::max(space_.order(), 1));
        Twist t;
        t.kind = TwistKind::mu;
        t.matrices = gauge_to_mu(matrices_.at(key("matrix")), sp);
        for (std::size_t i = 0; i < sp.q(); ++i) output("Lambda_" + sp.independents()[i], t.matrices[i].render());
        if (has("expect")) {
            const Twist& want = twists_.at(key("expect"));
            if (want.kind != TwistKind::mu) throw PreconditionError("expected twist must be a mu twist");
            for (std::size_t i = 0; i < sp.q(); ++i)
                compare(t.matrices[i], want.matrices[i], "Lambda_" + sp.independents()[i] + " - expected");
        }
        store(twists_, "as", t);
    }

    void gauge_sigma() {
        const JetSpace sp = space_.with_order(std::max(space_.order(), 1));
        const MatrixExpr s = gauge_to_sigma(matrices_.at(key("matrix")), sp);
        output("sigma", s.render());
        if (has("expect")) compare(s, matrices_.at(key("expect")), "sigma - " + key("expect"));
        store(matrices_, "as", s);
    }

    void diagram_outputs(const DiagramReport& r, const std::string& suffix, std::size_t a) {
        output("Y" + suffix, r.twisted[a]);
        output("Z" + suffix, r.gauged[a]);
        output("W" + suffix, describe(r.gauged_base[a]));
        output("W" + suffix + "^(n)", r.standard[a]);
    }

    void mu_diagram() {
        const int n = order();
        const DiagramReport r = verify_mu_diagram(field(key("field")), matrices_.at(key("matrix")), n);
        result_.notes.push_back("regime: " + r.regime);
        for (std::size_t i = 0; i < r.twist.size(); ++i)
            output("Lambda_" + space_.independents()[i], r.twist[i].render());
        diagram_outputs(r, "", 0);
        if (has("expect-difference")) {
            const ProlongedField diff = r.gauged[0] - r.standard[0];
            output("Z - W^(n)", diff);
            compare(diff, key("expect-difference"), "Z - W - " + key("expect-difference"));
        } else {
            add(to_residual(r.checks));
        }
        if (has("expect-twisted")) compare(r.twisted[0], key("expect-twisted"), "Y - " + key("expect-twisted"));
        if (has("expect-gauged")) compare(r.gauged[0], key("expect-gauged"), "Z - " + key("expect-gauged"));
        if (has("expect-base")) compare(r.gauged_base[0], field(key("expect-base")), "W - " + key("expect-base"));
        store(prolonged_, "as-twisted", r.twisted[0]);
        store(prolonged_, "as-gauged", r.gauged[0]);
    }

    void sigma_diagram() {
        const int n = order();
        const auto fs = field_list("fields");
        const DiagramReport r = verify_sigma_diagram(fs, matrices_.at(key("matrix")), n);
        output("sigma", r.twist[0].render());
        for (std::size_t a = 0; a < fs.size(); ++a) diagram_outputs(r, std::to_string(a + 1), a);
        add(to_residual(r.checks));
        auto expect = [&](const std::string& k, const std::string& stem, auto get) {
            if (!has(k)) return;
            const auto names = list(k);
            if (names.size() != fs.size()) throw DimensionMismatch(k + ": one name per field");
            for (std::size_t a = 0; a < fs.size(); ++a) get(a, names[a], stem + std::to_string(a + 1) + " - " + names[a]);
        };
        expect("expect-twisted", "Y",
               [&](std::size_t a, const std::string& nm, const std::string& lb) { compare(r.twisted[a], nm, lb); });
        expect("expect-gauged", "Z",
               [&](std::size_t a, const std::string& nm, const std::string& lb) { compare(r.gauged[a], nm, lb); });
        expect("expect-base", "W", [&](std::size_t a, const std::string& nm, const std::string& lb) {
            compare(r.gauged_base[a], field(nm), lb);
        });
    }

    void solution() { add(is_solution(file_.sections.at(key("section")), file_.equations.at(key("equations")))); }

    void invariant_section() {
        const auto Q = characteristic_defect(field(key("field")), file_.sections.at(key("section")));
        for (std::size_t a = 0; a < Q.size(); ++a) checks_.push_back(make_check("Q^" + space_.dependents()[a], Q[a]));
    }

    void on_sections() {
        const auto names = list("prolonged");
        if (names.size() < 2) throw PreconditionError("compare-on-sections needs at least two prolonged fields");
        const Section& f = file_.sections.at(key("section"));
        int n = 0;
        for (const auto& nm : names) n = std::max(n, prolonged(nm).order());
        std::vector<ProlongedField> Ps;
        for (const auto& nm : names) Ps.push_back(prolonged(nm, n));
        bool applicable = true;
        for (std::size_t k = 1; k < Ps.size(); ++k) {
            VerdictReport rep = compare_on_invariant_sections(Ps[0], Ps[k], f);
            for (auto& c : rep.checks) c.label = names[0] + " - " + names[k] + ": " + c.label;
            for (auto& note : rep.notes) note = names[0] + " vs " + names[k] + ": " + note;
            rep.provenance.clear();
            add(rep);
            if (rep.verdict == Verdict::not_applicable) applicable = false;
        }
        for (std::size_t k = 0; k < Ps.size(); ++k) result_.provenance[names[k]] = to_string(Ps[k].provenance());
        if (has("vanish") && key("vanish") == "yes") {
            const JetSpace& sp = Ps[0].space();
            const auto coords = sp.coordinates();
            for (std::size_t k = 0; k < Ps.size(); ++k) {
                const auto comps = Ps[k].components();
                int top = sp.order();
                for (const auto& c : comps) top = std::max(top, sp.jet_order(c));
                const Assignment s = prolong_section(f, sp.with_order(top));
                for (std::size_t c = sp.q(); c < coords.size(); ++c)
                    checks_.push_back(make_check(names[k] + " on section: d/d" + coords[c].name(), subst(comps[c], s)));
            }
        }
        if (!applicable) decide(Verdict::not_applicable);
    }

    void chain() {
        const ProlongedField P = prolonged(key("prolonged"));
        const ChainReport rep = verify_chain(chains_.at(key("chain")), P);
        add(rep.invariance);
        for (auto c : rep.order_checks) checks_.push_back(std::move(c));
        for (auto c : rep.ibdp) {
            c.label = "ibdp " + c.label;
            result_.checks.push_back(summarize(c));
        }
        result_.outputs.emplace_back("ibdp", to_string(rep.ibdp_status));
        Verdict v = rep.invariance.verdict;
        if (has("ibdp") && key("ibdp") != to_string(rep.ibdp_status)) {
            result_.notes.push_back("expected ibdp " + key("ibdp") + ", found " + to_string(rep.ibdp_status));
            v = Verdict::disproven;
        }
        decide(v);
    }

    void extend() {
        const int top = static_cast<int>(chains_.at(key("chain")).levels.size());
        if (top + 1 > opts_.max_order) throw PreconditionError("extension exceeds the maximum order");
        const JetSpace sp = space_.with_order(std::max(space_.order(), top));
        const InvariantChain c = ibdp_extend(chains_.at(key("chain")), sp);
        std::string level;
        for (const auto& e : c.levels.back()) level += (level.empty() ? "" : ", ") + render(e);
        output("level " + std::to_string(c.levels.size() - 1), level);
        if (has("prolonged")) {
            const ProlongedField P = prolonged(key("prolonged"));
            for (const auto& e : c.levels.back()) checks_.push_back(is_invariant(e, P));
        }
        if (has("expect")) {
            const auto want = split_top(key("expect"), ',');
            if (want.size() != c.levels.back().size()) throw DimensionMismatch("expect: one expression per new entry");
            for (std::size_t k = 0; k < want.size(); ++k)
                checks_.push_back(make_check(render(c.levels.back()[k]) + " - expected",
                                             c.levels.back()[k] - parse(want[k].first, space_)));
        }
        store(chains_, "as", c);
    }

    std::vector<Expr> functions() const {
        std::vector<Expr> out;
        for (const auto& [s, c] : split_top(key("functions"), ',')) out.push_back(parse(s, space_));
        return out;
    }

    void combination() {
        const int n = order();
        const auto fs = field_list("fields");
        const auto f = functions();
        if (f.size() != fs.size()) throw DimensionMismatch("prolong-combination: one function per field");
        const CombinationResult r = prolong_combination(f, fs, n);
        output("combined", r.combined);
        output("defect", r.defect);
        ProlongedField sum = r.defect;
        for (std::size_t a = 0; a < fs.size(); ++a) sum = sum + standard_prolong(fs[a], n).scaled(f[a]);
        add(to_residual(compare_fields(r.combined, sum, "combined - (f X^(n) + defect)")));
        if (has("expect-defect")) compare(r.defect, key("expect-defect"), "defect - " + key("expect-defect"));
    }

    void brackets() {
        const int n = order();
        const auto fs = field_list("fields");
        const auto names = list("fields");
        std::vector<ProlongedField> pr;
        for (const auto& X : fs) pr.push_back(standard_prolong(X, n));
        const auto defects = bracket_defect(fs, n);
        for (const auto& [ab, d] : defects) {
            const auto [a, b] = ab;
            const std::string tag = "[" + names[a] + "," + names[b] + "]";
            std::string F;
            for (std::size_t c = 0; c < d.F.size(); ++c) F += (c ? ", " : "") + render(d.F[c]);
            output("F" + tag, F);
            output("Gamma" + tag, d.gamma);
            ProlongedField rhs = d.gamma;
            for (std::size_t c = 0; c < fs.size(); ++c) rhs = rhs + pr[c].scaled(d.F[c]);
            add(to_residual(compare_fields(commutator(pr[a], pr[b]), rhs, tag + " - (F X^(n) + Gamma)")));
            if (has("gamma") && key("gamma") == "zero") {
                const auto zero = ProlongedField::from_components(d.gamma.space(),
                                                                  std::vector<Expr>(d.gamma.components().size()),
                                                                  Provenance::raw);
                add(to_residual(compare_fields(d.gamma, zero, "Gamma" + tag)));
            }
        }
    }

    void coefficient_outputs(const InvolutionResult& r, const std::vector<std::string>& names) {
        for (std::size_t a = 0; a < r.F.size(); ++a)
            for (std::size_t b = a + 1; b < r.F.size(); ++b) {
                std::string F;
                for (std::size_t c = 0; c < r.F[a][b].size(); ++c) F += (c ? ", " : "") + render(r.F[a][b][c]);
                output("F[" + names[a] + "," + names[b] + "]", F);
            }
        if (!r.pivots.empty()) {
            std::string p;
            for (const auto& e : r.pivots) p += (p.empty() ? "" : ", ") + render(e);
            result_.notes.push_back("valid where these are nonzero: " + p);
        }
    }

    void involution() {
        try {
            coefficient_outputs(involution_coefficients(field_list("fields")), list("fields"));
            decide(Verdict::proven);
        } catch (const NotInInvolution& e) {
            result_.notes.push_back(e.what());
            decide(Verdict::disproven);
        }
    }

    void lie_algebra() {
        const LieAlgebraCheck r = is_lie_algebra(field_list("fields"));
        coefficient_outputs(r.coefficients, list("fields"));
        if (!r.reason.empty()) result_.notes.push_back(r.reason);
        decide(r.yes ? Verdict::proven : Verdict::disproven);
    }

    void distribution() {
        auto get = [&](const std::string& k) {
            std::vector<ProlongedField> out;
            for (const auto& nm : list(k)) out.push_back(prolonged(nm));
            return out;
        };
        const VerdictReport rep = same_distribution(get("first"), get("second"));
        add(rep);
        decide(rep.verdict);
    }

    void evolutionary() {
        const VectorField V = evolutionary_rep(field(key("field")));
        output(has("as") ? key("as") : "result", describe(V));
        if (has("expect")) compare(V, field(key("expect")), "computed - " + key("expect"));
        store(fields_, "as", V);
    }

    void check_evolutionary() {
        const EvolutionaryCheck r = is_evolutionary_rep(field(key("field")));
        if (!r.ok) {
            result_.notes.push_back(r.reason);
            decide(Verdict::disproven);
            return;
        }
        output("recovered", describe(*r.recovered));
        if (has("expect-base")) compare(*r.recovered, field(key("expect-base")), "recovered - " + key("expect-base"));
    }

    void lai() {
        const Twist& t = twist(TwistKind::mu);
        const std::size_t i = *space_.independent_index(key("direction"));
        const JetSpace sp = space_.with_order(std::max(space_.order(), 1));
        const MatrixExpr r = lai_residual(matrices_.at(key("matrix")), t.matrices[i], i, sp);
        output("residual", r.render());
        matrix_checks(r, "D_" + key("direction") + "A - A Lambda_" + key("direction"));
    }

    const TaskSpec& spec_;
    const ProblemFile& file_;
    const RunOptions& opts_;
    std::map<std::string, ProlongedField>& prolonged_;
    std::map<std::string, VectorField>& fields_;
    std::map<std::string, MatrixExpr>& matrices_;
    std::map<std::string, Twist>& twists_;
    std::map<std::string, InvariantChain>& chains_;
    const JetSpace& space_;
    TaskResult result_;
    std::vector<ResidualCheck> checks_;
    bool decided_ = false;
};

}  // namespace

FileReport run_problem(const ProblemFile& file, const RunOptions& opts) {
    FileReport rep;
    const auto slash = file.path.find_last_of("/\\");
    rep.file = slash == std::string::npos ? file.path : file.path.substr(slash + 1);
    if (file.tasks.empty()) return rep;
    ProbeOptions po;
    po.seed = opts.seed;
    const ProbeScope scope(po);
    std::map<std::string, ProlongedField> prolonged;
    auto fields = file.fields;
    auto matrices = file.matrices;
    auto twists = file.twists;
    auto chains = file.chains;
    for (const auto& spec : file.tasks)
        rep.tasks.push_back(Task(spec, file, opts, prolonged, fields, matrices, twists, chains).run());
    return rep;
}

int exit_code(const std::vector<FileReport>& reports, const RunOptions& opts) {
    for (const auto& r : reports)
        for (const auto& t : r.tasks)
            if (t.verdict != Verdict::proven && !(t.verdict == Verdict::probable && opts.allow_probable)) return 1;
    return 0;
}

int run_files(const std::vector<std::string>& paths, const RunOptions& opts, ReportFormat format, bool details,
              std::ostream& out, std::ostream& err) {
    std::vector<ProblemFile> files;
    for (const auto& p : paths) {
        try {
            files.push_back(load_problem(p));
        } catch (const ParseError& e) {
            err << p << ":" << e.line() << ":" << e.column() << ": " << e.message() << '\n';
            return 2;
        } catch (const Error& e) {
            err << p << ": " << e.what() << '\n';
            return 2;
        }
    }
    std::vector<FileReport> reports;
    for (const auto& f : files) reports.push_back(run_problem(f, opts));
    out << render_report(reports, format, opts, details);
    return exit_code(reports, opts);
}

}  // namespace jetwist
