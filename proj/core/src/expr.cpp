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

#include "jetwist/expr.hpp"

#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "jetwist/errors.hpp"
#include "node.hpp"

namespace jetwist {

using detail::Node;

namespace detail {

std::size_t hash_rational(const mpq_class& q) {
    std::size_t h = mpz_size(q.get_num_mpz_t()) ? mpz_getlimbn(q.get_num_mpz_t(), 0) : 0;
    h = h * 1000003u + (mpz_size(q.get_den_mpz_t()) ? mpz_getlimbn(q.get_den_mpz_t(), 0) : 0);
    return h ^ static_cast<std::size_t>(sgn(q) + 7);
}

}  // namespace detail

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::shared_ptr<Node> make_node(Expr::Kind kind) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    return n;
}

Expr finish(std::shared_ptr<Node> n) {
    std::size_t h = static_cast<std::size_t>(n->kind) * 31u + 17u;
    switch (n->kind) {
    case Expr::Kind::constant:
        h = mix(h, detail::hash_rational(n->value));
        break;
    case Expr::Kind::symbol:
        h = mix(h, std::hash<std::string>{}(n->sym.name()));
        h = mix(h, static_cast<std::size_t>(n->sym.kind()));
        break;
    case Expr::Kind::power:
        h = mix(h, detail::hash_rational(n->value));
        [[fallthrough]];
    default:
        for (const auto& o : n->ops) h = mix(h, o.hash());
    }
    n->hash = h;
    return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr make_constant(const mpq_class& v) {
    auto n = make_node(Expr::Kind::constant);
    n->value = v;
    n->value.canonicalize();
    return finish(std::move(n));
}

const Expr& zero_expr() {
    static const Expr z = make_constant(0);
    return z;
}

const Expr& one_expr() {
    static const Expr o = make_constant(1);
    return o;
}

Expr make_unary(Expr::Kind kind, const Expr& arg) {
    auto n = make_node(kind);
    n->ops.push_back(arg);
    return finish(std::move(n));
}

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

// Exact q-th root of a non-negative integer, if any.
bool exact_root(const mpz_class& v, unsigned long q, mpz_class& out) {
    if (sgn(v) < 0) return false;
    return mpz_root(out.get_mpz_t(), v.get_mpz_t(), q) != 0;
}

}  // namespace

Expr::Expr() : node_(zero_expr().node_) {}
Expr::Expr(int v) : Expr(mpq_class(v)) {}
Expr::Expr(long v) : Expr(mpq_class(v)) {}
Expr::Expr(const mpq_class& v) : node_(make_constant(v).node_) {}
Expr::Expr(const Symbol& s) {
    auto n = make_node(Kind::symbol);
    n->sym = s;
    node_ = finish(std::move(n)).node_;
}

Expr Expr::rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator in rational constant");
    mpq_class q(num, den);
    q.canonicalize();
    return Expr(q);
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
bool Expr::is_zero_constant() const noexcept { return kind() == Kind::constant && sgn(node_->value) == 0; }
bool Expr::is_one_constant() const noexcept { return kind() == Kind::constant && node_->value == 1; }

const mpq_class& Expr::constant_value() const {
    if (kind() != Kind::constant) throw PreconditionError("not a constant");
    return node_->value;
}

const Symbol& Expr::symbol() const {
    if (kind() != Kind::symbol) throw PreconditionError("not a symbol");
    return node_->sym;
}

std::span<const Expr> Expr::operands() const noexcept { return node_->ops; }

const mpq_class& Expr::exponent() const {
    if (kind() != Kind::power) throw PreconditionError("not a power");
    return node_->value;
}

std::size_t Expr::hash() const noexcept { return node_->hash; }

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash()) return false;
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    switch (x.kind) {
    case Expr::Kind::constant: {
        int c = cmp(x.value, y.value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    case Expr::Kind::symbol:
        return x.sym <=> y.sym;
    case Expr::Kind::power: {
        int c = cmp(x.value, y.value);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        break;
    }
    default:
        break;
    }
    const std::size_t n = std::min(x.ops.size(), y.ops.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = x.ops[i] <=> y.ops[i]; c != 0) return c;
    }
    return x.ops.size() <=> y.ops.size();
}

Expr& Expr::operator+=(const Expr& o) { return *this = *this + o; }
Expr& Expr::operator-=(const Expr& o) { return *this = *this - o; }
Expr& Expr::operator*=(const Expr& o) { return *this = *this * o; }

Expr sum(std::vector<Expr> terms) {
    mpq_class c = 0;
    std::vector<Expr> flat;
    flat.reserve(terms.size());
    for (auto& t : terms) {
        if (t.kind() == Expr::Kind::constant) {
            c += t.constant_value();
        } else if (t.kind() == Expr::Kind::sum) {
            for (const auto& s : t.operands()) {
                if (s.is_constant()) c += s.constant_value();
                else flat.push_back(s);
            }
        } else {
            flat.push_back(std::move(t));
        }
    }
    if (sgn(c) != 0) flat.push_back(Expr(c));
    if (flat.empty()) return Expr();
    if (flat.size() == 1) return flat.front();
    auto n = make_node(Expr::Kind::sum);
    n->ops = std::move(flat);
    return finish(std::move(n));
}

Expr product(std::vector<Expr> factors) {
    mpq_class c = 1;
    std::vector<Expr> flat;
    flat.reserve(factors.size() + 1);
    flat.emplace_back();  // slot for the constant
    for (auto& f : factors) {
        if (f.kind() == Expr::Kind::constant) {
            c *= f.constant_value();
        } else if (f.kind() == Expr::Kind::product) {
            for (const auto& s : f.operands()) {
                if (s.is_constant()) c *= s.constant_value();
                else flat.push_back(s);
            }
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (sgn(c) == 0) return Expr();
    if (c == 1) flat.erase(flat.begin());
    else flat.front() = Expr(c);
    if (flat.empty()) return one_expr();
    if (flat.size() == 1) return flat.front();
    auto n = make_node(Expr::Kind::product);
    n->ops = std::move(flat);
    return finish(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_zero_constant()) return b;
    if (b.is_zero_constant()) return a;
    return sum({a, b});
}

Expr operator-(const Expr& a) {
    if (a.is_constant()) return Expr(mpq_class(-a.constant_value()));
    return product({Expr(-1), a});
}

Expr operator-(const Expr& a, const Expr& b) {
    if (b.is_zero_constant()) return a;
    return sum({a, -b});
}

Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_one_constant()) return b;
    if (b.is_one_constant()) return a;
    return product({a, b});
}

Expr operator/(const Expr& a, const Expr& b) { return a * pow(b, -1); }

Expr pow(const Expr& base, const mpq_class& exponent_in) {
    mpq_class r = exponent_in;
    r.canonicalize();
    if (sgn(r) == 0) return one_expr();
    if (r == 1) return base;
    if (base.is_constant()) {
        const mpq_class& b = base.constant_value();
        if (sgn(b) == 0) {
            if (sgn(r) < 0) throw DomainError("division by zero");
            return Expr();
        }
        if (is_integer(r)) {
            const long k = r.get_num().get_si();
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(std::labs(k)));
            mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(std::labs(k)));
            mpq_class v = k >= 0 ? mpq_class(num, den) : mpq_class(den, num);
            v.canonicalize();
            return Expr(v);
        }
        const unsigned long q = r.get_den().get_ui();
        mpz_class rn, rd;
        if (exact_root(b.get_num(), q, rn) && exact_root(b.get_den(), q, rd)) {
            return pow(Expr(mpq_class(rn, rd)), mpq_class(r.get_num()));
        }
    }
    if (base.kind() == Expr::Kind::power && is_integer(r)) {
        return pow(base.operands()[0], base.exponent() * r);
    }
    auto n = make_node(Expr::Kind::power);
    n->value = r;
    n->ops.push_back(base);
    return finish(std::move(n));
}

Expr exp(const Expr& arg) {
    if (arg.is_zero_constant()) return one_expr();
    return make_unary(Expr::Kind::exp, arg);
}

Expr ln(const Expr& arg) {
    if (arg.is_one_constant()) return Expr();
    return make_unary(Expr::Kind::ln, arg);
}

Expr sin(const Expr& arg) {
    if (arg.is_zero_constant()) return Expr();
    return make_unary(Expr::Kind::sin, arg);
}

Expr cos(const Expr& arg) {
    if (arg.is_zero_constant()) return one_expr();
    return make_unary(Expr::Kind::cos, arg);
}

namespace {

void collect_symbols(const Expr& e, std::set<Symbol>& out, std::unordered_set<const Node*>& seen) {
    if (!seen.insert(e.node()).second) return;
    if (e.kind() == Expr::Kind::symbol) {
        out.insert(e.symbol());
        return;
    }
    for (const auto& o : e.operands()) collect_symbols(o, out, seen);
}

}  // namespace

std::vector<Symbol> symbols(const Expr& e) {
    std::set<Symbol> out;
    std::unordered_set<const Node*> seen;
    collect_symbols(e, out, seen);
    return {out.begin(), out.end()};
}

bool contains(const Expr& e, const Symbol& s) {
    for (const auto& t : symbols(e)) {
        if (t == s) return true;
    }
    return false;
}

namespace {

class Deriver {
public:
    explicit Deriver(const std::function<Expr(const Symbol&)>& image) : image_(image) {}

    Expr operator()(const Expr& e) {
        if (auto it = memo_.find(e.node()); it != memo_.end()) return it->second;
        Expr d = compute(e);
        memo_.emplace(e.node(), d);
        return d;
    }

private:
    Expr compute(const Expr& e) {
        using K = Expr::Kind;
        switch (e.kind()) {
        case K::constant:
            return Expr();
        case K::symbol:
            return image_(e.symbol());
        case K::sum: {
            std::vector<Expr> terms;
            for (const auto& t : e.operands()) {
                Expr d = (*this)(t);
                if (!d.is_zero_constant()) terms.push_back(std::move(d));
            }
            return sum(std::move(terms));
        }
        case K::product: {
            auto ops = e.operands();
            std::vector<Expr> terms;
            for (std::size_t i = 0; i < ops.size(); ++i) {
                Expr d = (*this)(ops[i]);
                if (d.is_zero_constant()) continue;
                std::vector<Expr> f;
                f.reserve(ops.size());
                for (std::size_t j = 0; j < ops.size(); ++j) f.push_back(j == i ? d : ops[j]);
                terms.push_back(product(std::move(f)));
            }
            return sum(std::move(terms));
        }
        case K::power: {
            const Expr& b = e.operands()[0];
            Expr d = (*this)(b);
            if (d.is_zero_constant()) return Expr();
            const mpq_class& r = e.exponent();
            return product({Expr(r), pow(b, r - 1), d});
        }
        case K::exp: {
            Expr d = (*this)(e.operands()[0]);
            if (d.is_zero_constant()) return Expr();
            return e * d;
        }
        case K::ln: {
            const Expr& a = e.operands()[0];
            Expr d = (*this)(a);
            if (d.is_zero_constant()) return Expr();
            return d / a;
        }
        case K::sin: {
            const Expr& a = e.operands()[0];
            Expr d = (*this)(a);
            if (d.is_zero_constant()) return Expr();
            return cos(a) * d;
        }
        case K::cos: {
            const Expr& a = e.operands()[0];
            Expr d = (*this)(a);
            if (d.is_zero_constant()) return Expr();
            return -(sin(a) * d);
        }
        }
        return Expr();
    }

    const std::function<Expr(const Symbol&)>& image_;
    std::unordered_map<const Node*, Expr> memo_;
};

Expr rebuild(const Expr& e, std::vector<Expr> ops) {
    using K = Expr::Kind;
    switch (e.kind()) {
    case K::sum:
        return sum(std::move(ops));
    case K::product:
        return product(std::move(ops));
    case K::power:
        return pow(ops[0], e.exponent());
    case K::exp:
        return exp(ops[0]);
    case K::ln:
        return ln(ops[0]);
    case K::sin:
        return sin(ops[0]);
    case K::cos:
        return cos(ops[0]);
    default:
        return e;
    }
}

Expr substitute_impl(const Expr& e, const Assignment& a, std::unordered_map<const Node*, Expr>& memo) {
    if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
    Expr r;
    if (e.kind() == Expr::Kind::symbol) {
        auto it = a.find(e.symbol().name());
        r = it == a.end() ? e : it->second;
    } else if (e.kind() == Expr::Kind::constant) {
        r = e;
    } else {
        std::vector<Expr> ops;
        bool changed = false;
        for (const auto& o : e.operands()) {
            ops.push_back(substitute_impl(o, a, memo));
            changed = changed || ops.back().node() != o.node();
        }
        r = changed ? rebuild(e, std::move(ops)) : e;
    }
    memo.emplace(e.node(), r);
    return r;
}

}  // namespace

Expr derive(const Expr& e, const std::function<Expr(const Symbol&)>& image) {
    Deriver d(image);
    return d(e);
}

Expr diff(const Expr& e, const Symbol& s) {
    return derive(e, [&](const Symbol& t) { return t == s ? Expr(1) : Expr(); });
}

Expr substitute(const Expr& e, const Assignment& a) {
    std::unordered_map<const Node*, Expr> memo;
    return substitute_impl(e, a, memo);
}

namespace {

class Evaluator {
public:
    explicit Evaluator(const NumericAssignment& a) : a_(a) {}

    double operator()(const Expr& e) {
        if (auto it = memo_.find(e.node()); it != memo_.end()) return it->second;
        double v = compute(e);
        if (!std::isfinite(v)) throw DomainError("non-finite value in evaluation");
        memo_.emplace(e.node(), v);
        return v;
    }

private:
    double compute(const Expr& e) {
        using K = Expr::Kind;
        switch (e.kind()) {
        case K::constant:
            return e.constant_value().get_d();
        case K::symbol:
            return a_.find(e.symbol().name())->second;
        case K::sum: {
            double s = 0;
            for (const auto& t : e.operands()) s += (*this)(t);
            return s;
        }
        case K::product: {
            double p = 1;
            for (const auto& t : e.operands()) p *= (*this)(t);
            return p;
        }
        case K::power: {
            const double b = (*this)(e.operands()[0]);
            const mpq_class& r = e.exponent();
            if (b == 0.0 && sgn(r) < 0) throw DomainError("division by zero");
            if (r.get_den() == 1) return std::pow(b, r.get_d());
            if (b < 0) {
                if (mpz_even_p(r.get_den_mpz_t())) throw DomainError("even root of a negative value");
                const double m = std::pow(-b, r.get_d());
                return mpz_odd_p(r.get_num_mpz_t()) ? -m : m;
            }
            return std::pow(b, r.get_d());
        }
        case K::exp:
            return std::exp((*this)(e.operands()[0]));
        case K::ln: {
            const double v = (*this)(e.operands()[0]);
            if (v <= 0) throw DomainError("ln of a non-positive value");
            return std::log(v);
        }
        case K::sin:
            return std::sin((*this)(e.operands()[0]));
        case K::cos:
            return std::cos((*this)(e.operands()[0]));
        }
        return 0;
    }

    const NumericAssignment& a_;
    std::unordered_map<const Node*, double> memo_;
};

}  // namespace

double eval_numeric(const Expr& e, const NumericAssignment& a) {
    std::vector<std::string> missing;
    for (const auto& s : symbols(e)) {
        if (!a.contains(s.name())) missing.push_back(s.name());
    }
    if (!missing.empty()) throw MissingSymbols(std::move(missing));
    Evaluator ev(a);
    return ev(e);
}

}  // namespace jetwist
