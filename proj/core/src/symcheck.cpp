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

#include "jetwist/symcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "jetwist/errors.hpp"

namespace jetwist {

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::proven:
        return "proven";
    case Verdict::disproven:
        return "disproven";
    case Verdict::probable:
        return "probable";
    case Verdict::not_applicable:
        return "not-applicable";
    case Verdict::error:
        return "error";
    }
    return "error";
}

Verdict verdict_from_string(const std::string& s) {
    for (Verdict v : {Verdict::proven, Verdict::disproven, Verdict::probable, Verdict::not_applicable, Verdict::error})
        if (s == to_string(v)) return v;
    throw ParseError("unknown verdict '" + s + "'", 1);
}

Verdict combine(const std::vector<ResidualCheck>& checks) {
    bool probable = false;
    bool unknown = false;
    for (const auto& c : checks) {
        switch (c.zero) {
        case ZeroVerdict::proven_nonzero:
            return Verdict::disproven;
        case ZeroVerdict::probably_zero:
            probable = true;
            break;
        case ZeroVerdict::unknown:
            unknown = true;
            break;
        case ZeroVerdict::proven_zero:
            break;
        }
    }
    if (unknown) return Verdict::error;
    return probable ? Verdict::probable : Verdict::proven;
}

ResidualCheck make_check(std::string label, const Expr& residual) {
    const Expr r = normalize(residual);
    return ResidualCheck{std::move(label), r, is_zero(r)};
}

// ---------------------------------------------------------------- systems

namespace {

bool below(const MultiIndex& k, const MultiIndex& j) {
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] > j[i]) return false;
    return true;
}

}  // namespace

DiffSystem::DiffSystem(JetSpace space, std::vector<std::pair<JetRef, Expr>> rules)
    : space_(std::move(space)), rules_(std::move(rules)) {
    for (auto& [lhs, rhs] : rules_) {
        if (lhs.dependent >= space_.p() || lhs.index.size() != space_.q())
            throw DimensionMismatch("equation for a jet outside the space");
        rhs = normalize(rhs);
        order_ = std::max(order_, lhs.index.order());
        for (const auto& s : symbols(rhs)) {
            auto r = space_.resolve_jet(s.name());
            if (r && r->dependent == lhs.dependent && below(lhs.index, r->index))
                throw PreconditionError("equation for " + space_.jet_name(lhs.dependent, lhs.index) +
                                        " refers to its own solved jet " + s.name());
        }
    }
}

const std::pair<JetRef, Expr>* DiffSystem::rule_for(const JetRef& r) const {
    for (const auto& rule : rules_)
        if (rule.first.dependent == r.dependent && below(rule.first.index, r.index)) return &rule;
    return nullptr;
}

namespace {

class Restrictor {
public:
    Restrictor(const DiffSystem& sys, const RestrictOptions& opts) : sys_(sys), opts_(opts) {}

    Expr run(const Expr& e) {
        Expr cur = e;
        for (int pass = 0; pass < opts_.max_iterations; ++pass) {
            Assignment a;
            for (const auto& s : symbols(cur)) {
                auto r = sys_.space().resolve_jet(s.name());
                if (r && sys_.rule_for(*r)) a[s.name()] = value(*r);
            }
            if (a.empty()) return normalize(cur);
            cur = subst(cur, a);
        }
        throw Error("restrict: substitution did not terminate");
    }

private:
    Expr value(const JetRef& r) {
        if (auto it = memo_.find(r); it != memo_.end()) return it->second;
        if (r.index.order() > opts_.max_order)
            throw Error("restrict: order overflow at " + sys_.space().jet_name(r.dependent, r.index));
        if (!active_.insert(r).second) throw Error("restrict: cyclic equations");
        const auto* rule = sys_.rule_for(r);
        Expr v;
        if (rule->first == r) {
            v = rule->second;
        } else {
            std::size_t i = r.index.size();
            while (i-- > 0)
                if (r.index[i] > rule->first.index[i]) break;
            v = total_derivative(value(JetRef{r.dependent, r.index.decrement(i)}), i, sys_.space());
        }
        v = run(v);
        active_.erase(r);
        memo_.emplace(r, v);
        return v;
    }

    const DiffSystem& sys_;
    RestrictOptions opts_;
    std::map<JetRef, Expr> memo_;
    std::set<JetRef> active_;
};

int max_jet_order(const JetSpace& sp, const std::vector<Expr>& es) {
    int n = 0;
    for (const auto& e : es) n = std::max(n, sp.jet_order(e));
    return n;
}

Assignment section_assignment(const Section& f, const JetSpace& sp, int order) {
    return prolong_section(f, sp.with_order(order));
}

// Q^a = phi^a - u^a_i xi^i for a field of any coefficient order.
std::vector<Expr> characteristic(const VectorField& X) {
    const JetSpace& sp = X.space();
    std::vector<Expr> out;
    for (std::size_t a = 0; a < sp.p(); ++a) {
        std::vector<Expr> terms{X.phi(a)};
        for (std::size_t i = 0; i < sp.q(); ++i)
            terms.push_back(-(Expr(sp.jet(a, MultiIndex::zero(sp.q()).increment(i))) * X.xi(i)));
        out.push_back(normalize(sum(std::move(terms))));
    }
    return out;
}

}  // namespace

Expr restrict(const Expr& e, const DiffSystem& sys, const RestrictOptions& opts) {
    return Restrictor(sys, opts).run(e);
}

VerdictReport is_symmetry(const ProlongedField& P, const DiffSystem& sys, const RestrictOptions& opts) {
    const JetSpace& ps = P.space();
    const JetSpace& ss = sys.space();
    if (ps.independents() != ss.independents() || ps.dependents() != ss.dependents())
        throw DimensionMismatch("field and equations live on different jet spaces");
    if (P.order() < sys.order())
        throw PreconditionError("field order " + std::to_string(P.order()) + " is below the equation order " +
                                std::to_string(sys.order()));
    VerdictReport rep;
    rep.provenance["field"] = to_string(P.provenance());
    Restrictor r(sys, opts);
    for (const auto& [lhs, rhs] : sys.rules()) {
        const Expr action = P.psi(lhs.dependent, lhs.index) - P.apply(rhs);
        rep.checks.push_back(make_check("equation " + ss.jet_name(lhs.dependent, lhs.index), r.run(action)));
    }
    rep.verdict = combine(rep.checks);
    return rep;
}

VerdictReport is_solution(const Section& f, const DiffSystem& sys) {
    const JetSpace& sp = sys.space();
    std::vector<Expr> residuals;
    for (const auto& [lhs, rhs] : sys.rules()) residuals.push_back(Expr(sp.jet(lhs)) - rhs);
    const Assignment a = section_assignment(f, sp, max_jet_order(sp, residuals));
    VerdictReport rep;
    for (std::size_t k = 0; k < residuals.size(); ++k) {
        const auto& lhs = sys.rules()[k].first;
        rep.checks.push_back(make_check("equation " + sp.jet_name(lhs.dependent, lhs.index), subst(residuals[k], a)));
    }
    rep.verdict = combine(rep.checks);
    return rep;
}

std::vector<Expr> characteristic_defect(const VectorField& X, const Section& f) {
    const auto q = characteristic(X);
    const Assignment a = section_assignment(f, X.space(), std::max(1, max_jet_order(X.space(), q)));
    std::vector<Expr> out;
    for (const auto& e : q) out.push_back(subst(e, a));
    return out;
}

VerdictReport compare_on_invariant_sections(const ProlongedField& a, const ProlongedField& b, const Section& f) {
    if (!(a.space() == b.space())) throw DimensionMismatch("compared fields live on different jet spaces");
    VerdictReport rep;
    rep.provenance["first"] = to_string(a.provenance());
    rep.provenance["second"] = to_string(b.provenance());
    const char* names[] = {"first", "second"};
    int k = 0;
    for (const auto* P : {&a, &b}) {
        const auto defect = characteristic_defect(P->base(), f);
        for (std::size_t c = 0; c < defect.size(); ++c) {
            if (!vanishes(defect[c])) {
                rep.verdict = Verdict::not_applicable;
                rep.notes.push_back(std::string("section is not invariant under the ") + names[k] +
                                    " base field: Q^" + a.space().dependents()[c] + " = " + render(defect[c]));
                return rep;
            }
        }
        ++k;
    }
    const auto coords = a.space().coordinates();
    const auto ca = a.components();
    const auto cb = b.components();
    std::vector<Expr> diffs;
    for (std::size_t c = 0; c < ca.size(); ++c) diffs.push_back(ca[c] - cb[c]);
    const Assignment s = section_assignment(f, a.space(), std::max(a.order(), max_jet_order(a.space(), diffs)));
    for (std::size_t c = 0; c < diffs.size(); ++c)
        rep.checks.push_back(make_check("d/d" + coords[c].name(), subst(diffs[c], s)));
    rep.verdict = combine(rep.checks);
    return rep;
}

// ---------------------------------------------------------------- distributions

RankInfo generic_rank(const std::vector<ProlongedField>& fields) {
    RankInfo info;
    info.exact = true;
    if (fields.empty()) return info;
    std::vector<std::vector<Expr>> m;
    for (const auto& P : fields) m.push_back(P.components());
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::optional<std::size_t> pivot;
        std::size_t best_len = 0;
        for (std::size_t r = rank; r < m.size(); ++r) {
            const ZeroVerdict v = is_zero(m[r][c]);
            if (v == ZeroVerdict::proven_nonzero) {
                const std::size_t len = to_string(m[r][c]).size();
                if (!pivot || len < best_len) {
                    pivot = r;
                    best_len = len;
                }
            } else if (v != ZeroVerdict::proven_zero) {
                info.exact = false;
            }
        }
        if (!pivot) continue;
        std::swap(m[rank], m[*pivot]);
        const Expr p = m[rank][c];
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c].is_zero_constant()) continue;
            const Expr f = m[r][c] / p;
            for (std::size_t j = c; j < cols; ++j) m[r][j] = normalize(m[r][j] - f * m[rank][j]);
        }
        ++rank;
    }
    info.rank = rank;
    return info;
}

namespace {

std::size_t numeric_rank(std::vector<std::vector<double>> m) {
    if (m.empty()) return 0;
    double scale = 0;
    for (const auto& row : m)
        for (double v : row) scale = std::max(scale, std::abs(v));
    const double tol = 1e-9 * std::max(1.0, scale);
    std::size_t rank = 0;
    const std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t best = rank;
        for (std::size_t r = rank; r < m.size(); ++r)
            if (std::abs(m[r][c]) > std::abs(m[best][c])) best = r;
        if (std::abs(m[best][c]) <= tol) continue;
        std::swap(m[rank], m[best]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            const double f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Largest numeric rank over the probe points.
std::size_t probed_rank(const std::vector<ProlongedField>& fields, std::mt19937_64& rng, const ProbeOptions& opts) {
    if (fields.empty()) return 0;
    std::vector<std::vector<Expr>> m;
    std::set<std::string> names;
    for (const auto& P : fields) {
        m.push_back(P.components());
        for (const auto& e : m.back())
            for (const auto& s : symbols(e)) names.insert(s.name());
    }
    std::size_t best = 0;
    int regular = 0;
    for (int attempt = 0; attempt < opts.max_attempts && regular < opts.points; ++attempt) {
        NumericAssignment point;
        for (const auto& n : names) point[n] = random_probe_value(rng).get_d();
        try {
            std::vector<std::vector<double>> v;
            for (const auto& row : m) {
                v.emplace_back();
                for (const auto& e : row) v.back().push_back(eval_numeric(e, point));
            }
            best = std::max(best, numeric_rank(std::move(v)));
            ++regular;
        } catch (const DomainError&) {
        }
    }
    return best;
}

}  // namespace

VerdictReport same_distribution(const std::vector<ProlongedField>& P, const std::vector<ProlongedField>& Q,
                                const ProbeOptions& opts) {
    for (const auto& f : P)
        for (const auto& g : Q)
            if (!(f.space() == g.space())) throw DimensionMismatch("fields live on different jet spaces");
    std::vector<ProlongedField> U = P;
    U.insert(U.end(), Q.begin(), Q.end());

    const RankInfo sp = generic_rank(P);
    const RankInfo sq = generic_rank(Q);
    const RankInfo su = generic_rank(U);
    std::mt19937_64 rng(opts.seed);
    const std::size_t np = probed_rank(P, rng, opts);
    const std::size_t nq = probed_rank(Q, rng, opts);
    const std::size_t nu = probed_rank(U, rng, opts);

    VerdictReport rep;
    rep.notes.push_back("symbolic ranks " + std::to_string(sp.rank) + ", " + std::to_string(sq.rank) + ", " +
                        std::to_string(su.rank) + (sp.exact && sq.exact && su.exact ? " (exact)" : " (inexact)"));
    rep.notes.push_back("probed ranks " + std::to_string(np) + ", " + std::to_string(nq) + ", " + std::to_string(nu));
    const bool exact = sp.exact && sq.exact && su.exact;
    const bool sym_same = sp.rank == sq.rank && sq.rank == su.rank;
    const bool num_same = np == nq && nq == nu;
    if (exact) rep.verdict = sym_same ? Verdict::proven : Verdict::disproven;
    else rep.verdict = num_same ? Verdict::probable : Verdict::disproven;
    if (exact && sym_same != num_same) rep.notes.push_back("probed ranks disagree with the symbolic ranks");
    return rep;
}

}  // namespace jetwist
