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

#include "jetwist/vfield.hpp"

#include <algorithm>
#include <sstream>

#include "jetwist/canonical.hpp"
#include "jetwist/errors.hpp"

namespace jetwist {

namespace {

std::vector<Expr> normalized(std::vector<Expr> v) {
    for (auto& e : v) e = normalize(e);
    return v;
}

bool proven_nonzero(const Expr& e) { return is_zero(e) == ZeroVerdict::proven_nonzero; }

void require_same_space(const JetSpace& a, const JetSpace& b) {
    if (!(a == b)) throw DimensionMismatch("fields live on different jet spaces");
}

}  // namespace

// ---------------------------------------------------------------- VectorField

VectorField::VectorField(JetSpace space, std::vector<Expr> xi, std::vector<Expr> phi)
    : space_(std::move(space)), xi_(normalized(std::move(xi))), phi_(normalized(std::move(phi))) {
    if (xi_.size() != space_.q()) throw DimensionMismatch("field needs one xi per independent variable");
    if (phi_.size() != space_.p()) throw DimensionMismatch("field needs one phi per dependent variable");
}

VectorField VectorField::vertical(JetSpace space, std::vector<Expr> phi) {
    std::vector<Expr> xi(space.q(), Expr(0));
    return VectorField(std::move(space), std::move(xi), std::move(phi));
}

int VectorField::coefficient_order() const {
    int n = 0;
    for (const auto& e : xi_) n = std::max(n, space_.jet_order(e));
    for (const auto& e : phi_) n = std::max(n, space_.jet_order(e));
    return n;
}

bool VectorField::is_vertical() const {
    return std::all_of(xi_.begin(), xi_.end(), [](const Expr& e) { return vanishes(e); });
}

Expr VectorField::apply(const Expr& f) const {
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < space_.q(); ++i) terms.push_back(xi_[i] * diff(f, space_.independent(i)));
    for (std::size_t a = 0; a < space_.p(); ++a) terms.push_back(phi_[a] * diff(f, space_.dependent(a)));
    return normalize(sum(std::move(terms)));
}

VectorField VectorField::scaled(const Expr& c) const {
    std::vector<Expr> xi;
    std::vector<Expr> phi;
    for (const auto& e : xi_) xi.push_back(c * e);
    for (const auto& e : phi_) phi.push_back(c * e);
    return VectorField(space_, std::move(xi), std::move(phi));
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    require_same_space(a.space_, b.space_);
    std::vector<Expr> xi;
    std::vector<Expr> phi;
    for (std::size_t i = 0; i < a.xi_.size(); ++i) xi.push_back(a.xi_[i] + b.xi_[i]);
    for (std::size_t k = 0; k < a.phi_.size(); ++k) phi.push_back(a.phi_[k] + b.phi_[k]);
    return VectorField(a.space_, std::move(xi), std::move(phi));
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + b.scaled(Expr(-1)); }

std::vector<Expr> VectorField::components() const {
    std::vector<Expr> out = xi_;
    out.insert(out.end(), phi_.begin(), phi_.end());
    return out;
}

// ---------------------------------------------------------------- ProlongedField

const char* to_string(Provenance p) noexcept {
    switch (p) {
    case Provenance::standard:
        return "standard";
    case Provenance::lambda:
        return "lambda";
    case Provenance::mu:
        return "mu";
    case Provenance::sigma:
        return "sigma";
    case Provenance::raw:
        return "raw";
    }
    return "raw";
}

ProlongedField::ProlongedField(JetSpace space, std::vector<Expr> xi, std::map<JetRef, Expr> psi,
                               Provenance provenance)
    : space_(std::move(space)), xi_(normalized(std::move(xi))), provenance_(provenance) {
    if (xi_.size() != space_.q()) throw DimensionMismatch("field needs one xi per independent variable");
    for (auto& [ref, e] : psi) {
        if (ref.dependent >= space_.p() || ref.index.size() != space_.q() || ref.index.order() > space_.order())
            throw DimensionMismatch("prolonged coefficient outside the jet space");
        e = normalize(e);
    }
    for (const auto& J : space_.multi_indices_upto(space_.order()))
        for (std::size_t a = 0; a < space_.p(); ++a) psi.try_emplace(JetRef{a, J}, Expr(0));
    psi_ = std::move(psi);
}

const Expr& ProlongedField::psi(std::size_t a, const MultiIndex& J) const {
    auto it = psi_.find(JetRef{a, J});
    if (it == psi_.end()) throw DimensionMismatch("no coefficient for " + space_.jet_name(a, J));
    return it->second;
}

VectorField ProlongedField::base() const {
    std::vector<Expr> phi;
    for (std::size_t a = 0; a < space_.p(); ++a) phi.push_back(psi(a, MultiIndex::zero(space_.q())));
    return VectorField(space_, xi_, std::move(phi));
}

Expr ProlongedField::apply(const Expr& f) const {
    std::vector<Expr> terms;
    for (const auto& s : symbols(f)) {
        if (auto i = space_.independent_index(s.name())) {
            terms.push_back(xi_[*i] * diff(f, s));
        } else if (auto r = space_.resolve_jet(s.name())) {
            if (r->index.order() > order())
                throw PreconditionError("expression contains " + s.name() + " above the field order " +
                                        std::to_string(order()));
            terms.push_back(psi_.at(*r) * diff(f, s));
        }
    }
    return normalize(sum(std::move(terms)));
}

std::vector<Expr> ProlongedField::components() const {
    std::vector<Expr> out = xi_;
    for (const auto& J : space_.multi_indices_upto(order()))
        for (std::size_t a = 0; a < space_.p(); ++a) out.push_back(psi(a, J));
    return out;
}

ProlongedField ProlongedField::from_components(const JetSpace& space, const std::vector<Expr>& c,
                                               Provenance provenance) {
    if (c.size() != space.coordinate_count()) throw DimensionMismatch("component count differs from the space");
    std::vector<Expr> xi(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(space.q()));
    std::map<JetRef, Expr> psi;
    std::size_t k = space.q();
    for (const auto& J : space.multi_indices_upto(space.order()))
        for (std::size_t a = 0; a < space.p(); ++a) psi.emplace(JetRef{a, J}, c[k++]);
    return ProlongedField(space, std::move(xi), std::move(psi), provenance);
}

ProlongedField ProlongedField::scaled(const Expr& c) const {
    auto comps = components();
    for (auto& e : comps) e = c * e;
    return from_components(space_, comps, Provenance::raw);
}

ProlongedField operator+(const ProlongedField& a, const ProlongedField& b) {
    require_same_space(a.space_, b.space_);
    auto ca = a.components();
    const auto cb = b.components();
    for (std::size_t k = 0; k < ca.size(); ++k) ca[k] = ca[k] + cb[k];
    return ProlongedField::from_components(a.space_, ca, Provenance::raw);
}

ProlongedField operator-(const ProlongedField& a, const ProlongedField& b) { return a + b.scaled(Expr(-1)); }

namespace {

std::string describe_components(const std::vector<Symbol>& coords, const std::vector<Expr>& comps) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (comps[k].is_zero_constant()) continue;
        os << "d/d" << coords[k].name() << ": " << render(comps[k]) << '\n';
        any = true;
    }
    if (!any) os << "0\n";
    return os.str();
}

}  // namespace

std::string describe(const VectorField& X) {
    std::vector<Symbol> coords;
    for (std::size_t i = 0; i < X.space().q(); ++i) coords.push_back(X.space().independent(i));
    for (std::size_t a = 0; a < X.space().p(); ++a) coords.push_back(X.space().dependent(a));
    return describe_components(coords, X.components());
}

std::string describe(const ProlongedField& P) { return describe_components(P.space().coordinates(), P.components()); }

// ---------------------------------------------------------------- evolutionary representatives

VectorField evolutionary_rep(const VectorField& X) {
    if (!X.is_lie_point()) throw PreconditionError("evolutionary_rep needs a Lie-point field");
    const JetSpace& sp = X.space();
    const JetSpace s1 = sp.order() >= 1 ? sp : sp.with_order(1);
    std::vector<Expr> q;
    for (std::size_t a = 0; a < sp.p(); ++a) {
        std::vector<Expr> terms{X.phi(a)};
        for (std::size_t i = 0; i < sp.q(); ++i)
            terms.push_back(-(Expr(s1.jet(a, MultiIndex::zero(sp.q()).increment(i))) * X.xi(i)));
        q.push_back(sum(std::move(terms)));
    }
    return VectorField::vertical(s1, std::move(q));
}

EvolutionaryCheck is_evolutionary_rep(const VectorField& V) {
    EvolutionaryCheck out;
    const JetSpace& sp = V.space();
    if (!V.is_vertical()) {
        out.reason = "field is not vertical";
        return out;
    }
    if (V.coefficient_order() > 1) {
        out.reason = "coefficients depend on jets of order above one";
        return out;
    }
    const MultiIndex zero = MultiIndex::zero(sp.q());
    auto first = [&](std::size_t b, std::size_t k) { return sp.jet(b, zero.increment(k)); };
    if (sp.p() == 0) {
        out.ok = true;
        out.recovered = VectorField(sp, std::vector<Expr>(sp.q(), Expr(0)), {});
        return out;
    }
    std::vector<Expr> xi;
    for (std::size_t k = 0; k < sp.q(); ++k) xi.push_back(normalize(-diff(V.phi(0), first(0, k))));
    for (std::size_t a = 0; a < sp.p(); ++a) {
        for (std::size_t b = 0; b < sp.p(); ++b) {
            for (std::size_t k = 0; k < sp.q(); ++k) {
                const Expr d = normalize(diff(V.phi(a), first(b, k)));
                const Expr expected = a == b ? -xi[k] : Expr(0);
                if (!vanishes(d - expected)) {
                    out.reason = "d(Q^" + sp.dependents()[a] + ")/d(" + first(b, k).name() + ") = " + render(d) +
                                 ", expected " + render(expected);
                    return out;
                }
            }
        }
    }
    for (std::size_t k = 0; k < sp.q(); ++k) {
        for (const auto& s : symbols(xi[k])) {
            auto r = sp.resolve_jet(s.name());
            if (r && r->index.order() > 0) {
                out.reason = "recovered xi^" + sp.independents()[k] + " = " + render(xi[k]) + " depends on " + s.name();
                return out;
            }
        }
    }
    std::vector<Expr> phi;
    for (std::size_t a = 0; a < sp.p(); ++a) {
        std::vector<Expr> terms{V.phi(a)};
        for (std::size_t k = 0; k < sp.q(); ++k) terms.push_back(xi[k] * Expr(first(a, k)));
        Expr f = normalize(sum(std::move(terms)));
        for (const auto& s : symbols(f)) {
            auto r = sp.resolve_jet(s.name());
            if (r && r->index.order() > 0) {
                out.reason = "recovered phi^" + sp.dependents()[a] + " = " + render(f) + " depends on " + s.name();
                return out;
            }
        }
        phi.push_back(f);
    }
    out.ok = true;
    out.recovered = VectorField(sp, std::move(xi), std::move(phi));
    return out;
}

// ---------------------------------------------------------------- brackets

VectorField commutator(const VectorField& X, const VectorField& Y) {
    require_same_space(X.space(), Y.space());
    if (!X.is_lie_point() || !Y.is_lie_point()) throw PreconditionError("commutator on M needs Lie-point fields");
    const auto cx = X.components();
    const auto cy = Y.components();
    std::vector<Expr> out;
    for (std::size_t k = 0; k < cx.size(); ++k) out.push_back(X.apply(cy[k]) - Y.apply(cx[k]));
    const std::size_t q = X.space().q();
    return VectorField(X.space(), std::vector<Expr>(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(q)),
                       std::vector<Expr>(out.begin() + static_cast<std::ptrdiff_t>(q), out.end()));
}

ProlongedField commutator(const ProlongedField& X, const ProlongedField& Y) {
    require_same_space(X.space(), Y.space());
    const auto cx = X.components();
    const auto cy = Y.components();
    std::vector<Expr> out;
    for (std::size_t k = 0; k < cx.size(); ++k) out.push_back(X.apply(cy[k]) - Y.apply(cx[k]));
    return ProlongedField::from_components(X.space(), out, Provenance::raw);
}

InvolutionResult involution_coefficients(const std::vector<VectorField>& fields) {
    if (fields.empty()) throw PreconditionError("involution_coefficients needs at least one field");
    const std::size_t r = fields.size();
    for (const auto& f : fields) require_same_space(fields[0].space(), f.space());
    const std::size_t m = fields[0].components().size();

    InvolutionResult out;
    out.F.assign(r, std::vector<std::vector<Expr>>(r, std::vector<Expr>(r, Expr(0))));
    for (std::size_t al = 0; al < r; ++al) {
        for (std::size_t be = al + 1; be < r; ++be) {
            const auto b = commutator(fields[al], fields[be]).components();
            // Rows: coordinates; columns: fields then the bracket.
            std::vector<std::vector<Expr>> M(m, std::vector<Expr>(r + 1));
            for (std::size_t k = 0; k < m; ++k) {
                for (std::size_t g = 0; g < r; ++g) M[k][g] = fields[g].components()[k];
                M[k][r] = b[k];
            }
            std::vector<bool> used(m, false);
            std::vector<std::size_t> pivot_row(r);
            for (std::size_t c = 0; c < r; ++c) {
                std::optional<std::size_t> best;
                std::size_t best_len = 0;
                for (std::size_t k = 0; k < m; ++k) {
                    if (used[k] || !proven_nonzero(M[k][c])) continue;
                    const std::size_t len = to_string(M[k][c]).size();
                    if (!best || len < best_len) {
                        best = k;
                        best_len = len;
                    }
                }
                if (!best) throw RankDeficient("fields are linearly dependent over functions");
                const std::size_t pr = *best;
                used[pr] = true;
                pivot_row[c] = pr;
                out.pivots.push_back(M[pr][c]);
                const Expr piv = M[pr][c];
                for (std::size_t j = c; j <= r; ++j) M[pr][j] = normalize(M[pr][j] / piv);
                for (std::size_t k = 0; k < m; ++k) {
                    if (k == pr || M[k][c].is_zero_constant()) continue;
                    const Expr f = M[k][c];
                    for (std::size_t j = c; j <= r; ++j) M[k][j] = normalize(M[k][j] - f * M[pr][j]);
                }
            }
            for (std::size_t k = 0; k < m; ++k) {
                if (used[k] || vanishes(M[k][r])) continue;
                throw NotInInvolution("bracket of fields " + std::to_string(al + 1) + " and " +
                                      std::to_string(be + 1) + " leaves residual " + render(M[k][r]));
            }
            for (std::size_t g = 0; g < r; ++g) {
                out.F[al][be][g] = M[pivot_row[g]][r];
                out.F[be][al][g] = normalize(-M[pivot_row[g]][r]);
            }
        }
    }
    return out;
}

LieAlgebraCheck is_lie_algebra(const std::vector<VectorField>& fields) {
    LieAlgebraCheck out;
    out.coefficients = involution_coefficients(fields);
    const JetSpace& sp = fields[0].space();
    const std::size_t r = fields.size();
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = a + 1; b < r; ++b) {
            for (std::size_t g = 0; g < r; ++g) {
                const Expr& F = out.coefficients.F[a][b][g];
                for (const auto& s : symbols(F)) {
                    if (sp.is_parameter(s.name())) continue;
                    if (!vanishes(diff(F, s))) {
                        out.reason = "F[" + std::to_string(a + 1) + "][" + std::to_string(b + 1) + "][" +
                                     std::to_string(g + 1) + "] = " + render(F) + " is not constant";
                        return out;
                    }
                }
            }
        }
    }
    out.yes = true;
    return out;
}

}  // namespace jetwist
