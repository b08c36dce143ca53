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

#include "algebra.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

#include "jetwist/errors.hpp"
#include "mpoly.hpp"
#include "node.hpp"

namespace jetwist::detail {

namespace {

struct Registry {
    std::mutex mu;
    std::unordered_map<std::string, std::unique_ptr<Atom>> atoms;
    std::unordered_map<std::string, std::unique_ptr<ExpArg>> exps;
    std::map<std::pair<const ExpArg*, const ExpArg*>, const ExpArg*> sums;
};

Registry& registry() {
    static Registry r;
    return r;
}

const Atom* insert_atom(std::unique_ptr<Atom> a) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    auto [it, inserted] = r.atoms.try_emplace(a->key, nullptr);
    if (inserted) it->second = std::move(a);
    return it->second.get();
}

bool key_less(const Atom* a, const Atom* b) { return a->key < b->key; }

}  // namespace

const Atom* intern_symbol(const Symbol& s) {
    auto a = std::make_unique<Atom>();
    a->kind = Atom::Kind::symbol;
    a->key = "a" + s.name();
    a->tree = Expr(s);
    return insert_atom(std::move(a));
}

const Atom* intern_kernel(Atom::Kind kind, const Expr& canonical_arg) {
    auto a = std::make_unique<Atom>();
    a->kind = kind;
    a->arg = canonical_arg;
    const std::string text = to_string(canonical_arg);
    switch (kind) {
    case Atom::Kind::ln:
        a->key = "l" + text;
        a->tree = ln(canonical_arg);
        break;
    case Atom::Kind::sin:
        a->key = "s" + text;
        a->tree = sin(canonical_arg);
        break;
    case Atom::Kind::cos:
        a->key = "c" + text;
        a->tree = cos(canonical_arg);
        break;
    default:
        throw PreconditionError("intern_kernel: not a kernel kind");
    }
    return insert_atom(std::move(a));
}

const Atom* intern_radical(const Expr& canonical_arg, unsigned long root) {
    auto a = std::make_unique<Atom>();
    a->kind = Atom::Kind::radical;
    a->arg = canonical_arg;
    a->root = root;
    a->key = "r" + std::to_string(root) + ":" + to_string(canonical_arg);
    a->tree = pow(canonical_arg, mpq_class(1, root));
    a->base = canonical(canonical_arg);
    return insert_atom(std::move(a));
}

const ExpArg* intern_exp(const RatFun& value) {
    if (value.is_zero()) return nullptr;
    auto e = std::make_unique<ExpArg>();
    e->tree = to_expr(value);
    e->key = to_string(e->tree);
    e->value = std::make_shared<const RatFun>(value);
    auto& r = registry();
    std::lock_guard lock(r.mu);
    auto [it, inserted] = r.exps.try_emplace(e->key, nullptr);
    if (inserted) it->second = std::move(e);
    return it->second.get();
}

const ExpArg* exp_add(const ExpArg* a, const ExpArg* b) {
    if (a == nullptr) return b;
    if (b == nullptr) return a;
    if (b->key < a->key) std::swap(a, b);
    auto& r = registry();
    {
        std::lock_guard lock(r.mu);
        if (auto it = r.sums.find({a, b}); it != r.sums.end()) return it->second;
    }
    const ExpArg* s = intern_exp(canonicalize(rf_add(*a->value, *b->value)));
    std::lock_guard lock(r.mu);
    r.sums.emplace(std::pair{a, b}, s);
    return s;
}

const ExpArg* exp_scale(const ExpArg* a, long k) {
    if (a == nullptr || k == 0) return nullptr;
    if (k == 1) return a;
    RatFun v = *a->value;
    v.num = v.num.scaled(mpq_class(k));
    return intern_exp(canonicalize(std::move(v)));
}

// ---------------------------------------------------------------- monomials

int Monomial::degree() const {
    int d = 0;
    for (const auto& [a, k] : powers) d += k;
    return d;
}

int Monomial::exponent_of(const Atom* a) const {
    for (const auto& [b, k] : powers)
        if (b == a) return k;
    return 0;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da > db;
    const std::size_t n = std::min(a.powers.size(), b.powers.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [pa, ka] = a.powers[i];
        const auto& [pb, kb] = b.powers[i];
        if (pa != pb) return pa->key < pb->key;
        if (ka != kb) return ka > kb;
    }
    if (a.powers.size() != b.powers.size()) return a.powers.size() > b.powers.size();
    if (a.exp == b.exp) return false;
    if (a.exp == nullptr) return true;
    if (b.exp == nullptr) return false;
    return a.exp->key < b.exp->key;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.powers.reserve(a.powers.size() + b.powers.size());
    auto i = a.powers.begin();
    auto j = b.powers.begin();
    while (i != a.powers.end() || j != b.powers.end()) {
        if (j == b.powers.end() || (i != a.powers.end() && key_less(i->first, j->first))) {
            m.powers.push_back(*i++);
        } else if (i == a.powers.end() || key_less(j->first, i->first)) {
            m.powers.push_back(*j++);
        } else {
            m.powers.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    m.exp = exp_add(a.exp, b.exp);
    return m;
}

// ---------------------------------------------------------------- polynomials

Poly::Poly(const mpq_class& c) {
    if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::from_monomial(Monomial m, const mpq_class& c) {
    Poly p;
    if (sgn(c) != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Monomial& m = terms_.begin()->first;
    return m.powers.empty() && m.exp == nullptr;
}

bool Poly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

const mpq_class& Poly::constant() const {
    static const mpq_class zero = 0;
    return terms_.empty() ? zero : terms_.begin()->second;
}

bool Poly::has_exp_free_term() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.exp == nullptr; });
}

bool Poly::is_pure() const {
    for (const auto& [m, c] : terms_) {
        if (m.exp != nullptr) return false;
        for (const auto& [a, k] : m.powers)
            if (a->kind != Atom::Kind::symbol) return false;
    }
    return true;
}

void Poly::add_term(const Monomial& m, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const mpq_class& c) const {
    Poly r;
    if (sgn(c) == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, k * c);
    return r;
}

Poly Poly::pow(unsigned long k) const {
    Poly result(1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto j = o.terms_.begin();
    for (auto i = terms_.begin(); i != terms_.end(); ++i, ++j)
        if (!(i->first == j->first) || i->second != j->second) return false;
    return true;
}

// ---------------------------------------------------------------- quotients

RatFun rf_constant(const mpq_class& c) { return RatFun{Poly(c), Poly(1)}; }

RatFun rf_atom(const Atom* a) {
    Monomial m;
    m.powers.emplace_back(a, 1);
    return RatFun{Poly::from_monomial(std::move(m)), Poly(1)};
}

RatFun rf_exp(const ExpArg* e) {
    Monomial m;
    m.exp = e;
    return RatFun{Poly::from_monomial(std::move(m)), Poly(1)};
}

RatFun rf_add(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den == b.den) return RatFun{a.num + b.num, a.den};
    return RatFun{a.num * b.den + b.num * a.den, a.den * b.den};
}

RatFun rf_mul(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun{};
    return RatFun{a.num * b.num, a.den * b.den};
}

RatFun rf_neg(const RatFun& a) { return RatFun{-a.num, a.den}; }

RatFun rf_pow(const RatFun& a, long k) {
    if (k == 0) return rf_constant(1);
    if (k > 0) return RatFun{a.num.pow(static_cast<unsigned long>(k)), a.den.pow(static_cast<unsigned long>(k))};
    if (a.is_zero()) throw DomainError("division by zero");
    const auto m = static_cast<unsigned long>(-k);
    return RatFun{a.den.pow(m), a.num.pow(m)};
}

namespace {

bool reducible(const Monomial& m) {
    for (const auto& [a, k] : m.powers) {
        if (a->kind == Atom::Kind::cos && k >= 2) return true;
        if (a->kind == Atom::Kind::radical && static_cast<unsigned long>(k) >= a->root) return true;
    }
    return false;
}

bool reducible(const Poly& p) {
    return std::any_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return reducible(t.first); });
}

// Applies cos^2 = 1 - sin^2 and r^q = base to every term.
RatFun reduce_relations(const Poly& p) {
    Poly plain;
    RatFun extra;
    bool have_extra = false;
    for (const auto& [m, c] : p.terms()) {
        if (!reducible(m)) {
            plain.add_term(m, c);
            continue;
        }
        Monomial rest;
        rest.exp = m.exp;
        RatFun factor = rf_constant(c);
        for (const auto& [a, k] : m.powers) {
            if (a->kind == Atom::Kind::cos && k >= 2) {
                const Atom* s = intern_kernel(Atom::Kind::sin, a->arg);
                Monomial s2;
                s2.powers.emplace_back(s, 2);
                Poly one_minus = Poly(1) - Poly::from_monomial(std::move(s2));
                factor = rf_mul(factor, RatFun{one_minus.pow(static_cast<unsigned long>(k / 2)), Poly(1)});
                if (k % 2 != 0) rest.powers.emplace_back(a, 1);
            } else if (a->kind == Atom::Kind::radical && static_cast<unsigned long>(k) >= a->root) {
                const auto q = static_cast<long>(a->root);
                factor = rf_mul(factor, rf_pow(*a->base, k / q));
                if (k % q != 0) rest.powers.emplace_back(a, static_cast<int>(k % q));
            } else {
                rest.powers.emplace_back(a, k);
            }
        }
        RatFun term = rf_mul(factor, RatFun{Poly::from_monomial(std::move(rest)), Poly(1)});
        extra = have_extra ? rf_add(extra, term) : term;
        have_extra = true;
    }
    if (!have_extra) return RatFun{plain, Poly(1)};
    return rf_add(extra, RatFun{plain, Poly(1)});
}

struct FreeRing {
    std::vector<const Atom*> atoms;
    std::vector<const ExpArg*> exps;

    std::size_t nvars() const { return atoms.size() + exps.size(); }

    void collect(const Poly& p, std::set<const Atom*, decltype(&key_less)>& as,
                 std::set<const ExpArg*>& es) const {
        for (const auto& [m, c] : p.terms()) {
            for (const auto& [a, k] : m.powers) as.insert(a);
            if (m.exp != nullptr) es.insert(m.exp);
        }
    }

    MPoly to_mpoly(const Poly& p) const {
        MPoly r(nvars());
        for (const auto& [m, c] : p.terms()) {
            std::vector<int> e(nvars(), 0);
            for (const auto& [a, k] : m.powers) {
                const auto it = std::lower_bound(atoms.begin(), atoms.end(), a, key_less);
                e[static_cast<std::size_t>(it - atoms.begin())] = k;
            }
            if (m.exp != nullptr) {
                const auto it = std::find(exps.begin(), exps.end(), m.exp);
                e[atoms.size() + static_cast<std::size_t>(it - exps.begin())] = 1;
            }
            r.add_term(e, c);
        }
        return r;
    }

    Poly from_mpoly(const MPoly& p) const {
        Poly r;
        for (const auto& [e, c] : p.terms()) {
            Monomial m;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                if (e[i] != 0) m.powers.emplace_back(atoms[i], e[i]);
            for (std::size_t i = 0; i < exps.size(); ++i)
                if (e[atoms.size() + i] != 0) m.exp = exp_add(m.exp, exp_scale(exps[i], e[atoms.size() + i]));
            r.add_term(m, c);
        }
        return r;
    }
};

// Cancels the common factor of num and den, exp factors taken as free variables.
void cancel_gcd(RatFun& r) {
    if (r.den.is_constant() || r.num.is_constant()) return;
    std::set<const Atom*, decltype(&key_less)> as(key_less);
    std::set<const ExpArg*> es;
    FreeRing ring;
    ring.collect(r.num, as, es);
    ring.collect(r.den, as, es);
    ring.atoms.assign(as.begin(), as.end());
    ring.exps.assign(es.begin(), es.end());
    const MPoly n = ring.to_mpoly(r.num);
    const MPoly d = ring.to_mpoly(r.den);
    const MPoly g = gcd(n, d);
    if (g.is_constant()) return;
    auto qn = divide_exact(n, g);
    auto qd = divide_exact(d, g);
    if (!qn || !qd) throw Error("internal: inexact division by gcd");
    r.num = ring.from_mpoly(*qn);
    r.den = ring.from_mpoly(*qd);
}

void multiply_by_exp(RatFun& r, const ExpArg* e) {
    Monomial m;
    m.exp = e;
    const Poly f = Poly::from_monomial(std::move(m));
    r.num = r.num * f;
    r.den = r.den * f;
}

}  // namespace

RatFun canonicalize(RatFun r) {
    while (reducible(r.num) || reducible(r.den)) {
        const RatFun n = reducible(r.num) ? reduce_relations(r.num) : RatFun{r.num, Poly(1)};
        const RatFun d = reducible(r.den) ? reduce_relations(r.den) : RatFun{r.den, Poly(1)};
        r = RatFun{n.num * d.den, n.den * d.num};
    }
    if (r.den.is_zero()) throw DomainError("division by zero");
    if (r.num.is_zero()) return RatFun{};
    for (;;) {
        cancel_gcd(r);
        if (r.den.has_exp_free_term()) break;
        const ExpArg* lead = r.den.terms().begin()->first.exp;
        RatFun neg = *lead->value;
        neg.num = -neg.num;
        multiply_by_exp(r, intern_exp(neg));
    }
    const mpq_class lc = r.den.terms().begin()->second;
    if (lc != 1) {
        const mpq_class inv = 1 / lc;
        r.num = r.num.scaled(inv);
        r.den = r.den.scaled(inv);
    }
    return r;
}

// ---------------------------------------------------------------- expressions

namespace {

bool single_term(const RatFun& r) { return r.den.is_one() && r.num.terms().size() == 1; }

RatFun compute(const Expr& e);

RatFun canonical_sum(std::span<const Expr> ops) {
    std::vector<RatFun> groups;
    for (const auto& t : ops) {
        const auto v = canonical(t);
        auto it = std::find_if(groups.begin(), groups.end(), [&](const RatFun& g) { return g.den == v->den; });
        if (it == groups.end()) groups.push_back(*v);
        else it->num = it->num + v->num;
    }
    RatFun acc;
    for (const auto& g : groups) acc = rf_add(acc, g);
    return canonicalize(std::move(acc));
}

RatFun canonical_product(std::span<const Expr> ops) {
    RatFun acc = rf_constant(1);
    for (const auto& f : ops) {
        acc = rf_mul(acc, *canonical(f));
        if (acc.is_zero()) return acc;
    }
    return canonicalize(std::move(acc));
}

RatFun canonical_power(const Expr& base, const mpq_class& r) {
    const auto b = canonical(base);
    if (r.get_den() == 1) return canonicalize(rf_pow(*b, r.get_num().get_si()));
    if (b->is_zero()) {
        if (sgn(r) < 0) throw DomainError("division by zero");
        return RatFun{};
    }
    if (single_term(*b)) {
        const auto& [m, c] = *b->num.terms().begin();
        if (m.powers.empty() && c == 1) {
            RatFun v = *m.exp->value;
            v.num = v.num.scaled(r);
            return rf_exp(intern_exp(canonicalize(std::move(v))));
        }
    }
    const Atom* rad = intern_radical(to_expr(*b), r.get_den().get_ui());
    return canonicalize(rf_pow(rf_atom(rad), r.get_num().get_si()));
}

RatFun canonical_exp(const Expr& arg) {
    const auto a = canonical(arg);
    if (a->is_zero()) return rf_constant(1);
    if (single_term(*a)) {
        const auto& [m, c] = *a->num.terms().begin();
        if (m.exp == nullptr && m.powers.size() == 1 && m.powers[0].second == 1 &&
            m.powers[0].first->kind == Atom::Kind::ln && c.get_den() == 1) {
            return canonicalize(rf_pow(*canonical(m.powers[0].first->arg), c.get_num().get_si()));
        }
    }
    return rf_exp(intern_exp(*a));
}

RatFun canonical_ln(const Expr& arg) {
    const auto a = canonical(arg);
    if (a->is_zero()) throw DomainError("ln of zero");
    if (a->num.is_one() && a->den.is_one()) return RatFun{};
    if (single_term(*a)) {
        const auto& [m, c] = *a->num.terms().begin();
        if (m.powers.empty() && m.exp != nullptr && c == 1) return *m.exp->value;
    }
    return rf_atom(intern_kernel(Atom::Kind::ln, to_expr(*a)));
}

RatFun canonical_trig(Atom::Kind kind, const Expr& arg) {
    const auto a = canonical(arg);
    if (a->is_zero()) return kind == Atom::Kind::sin ? RatFun{} : rf_constant(1);
    const bool negative = sgn(a->num.terms().begin()->second) < 0;
    const Atom* atom = intern_kernel(kind, to_expr(negative ? rf_neg(*a) : *a));
    RatFun v = rf_atom(atom);
    return negative && kind == Atom::Kind::sin ? rf_neg(v) : v;
}

RatFun compute(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind()) {
    case K::constant:
        return rf_constant(e.constant_value());
    case K::symbol:
        return rf_atom(intern_symbol(e.symbol()));
    case K::sum:
        return canonical_sum(e.operands());
    case K::product:
        return canonical_product(e.operands());
    case K::power:
        return canonical_power(e.operands()[0], e.exponent());
    case K::exp:
        return canonical_exp(e.operands()[0]);
    case K::ln:
        return canonical_ln(e.operands()[0]);
    case K::sin:
        return canonical_trig(Atom::Kind::sin, e.operands()[0]);
    case K::cos:
        return canonical_trig(Atom::Kind::cos, e.operands()[0]);
    }
    return RatFun{};
}

}  // namespace

std::shared_ptr<const RatFun> canonical(const Expr& e) {
    const Node* n = e.node();
    std::call_once(n->canon_once, [&] { n->canon = std::make_shared<const RatFun>(compute(e)); });
    return n->canon;
}

Expr to_expr(const Poly& p) {
    std::vector<Expr> terms;
    terms.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        std::vector<Expr> factors;
        factors.reserve(m.powers.size() + 2);
        factors.emplace_back(c);
        for (const auto& [a, k] : m.powers) factors.push_back(k == 1 ? a->tree : pow(a->tree, k));
        if (m.exp != nullptr) factors.push_back(exp(m.exp->tree));
        terms.push_back(product(std::move(factors)));
    }
    return sum(std::move(terms));
}

Expr to_expr(const RatFun& r) {
    if (r.den.is_one()) return to_expr(r.num);
    return product({to_expr(r.num), pow(to_expr(r.den), -1)});
}

}  // namespace jetwist::detail
