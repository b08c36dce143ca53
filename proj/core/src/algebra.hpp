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

#ifndef JETWIST_SRC_ALGEBRA_HPP
#define JETWIST_SRC_ALGEBRA_HPP

// Internal polynomial and rational-function representation behind normalize().

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jetwist/expr.hpp"

namespace jetwist::detail {

struct RatFun;

// An indeterminate of the canonical polynomial ring: a symbol or a kernel
// whose argument is already canonical. Interned for the process lifetime.
struct Atom {
    enum class Kind : std::uint8_t { symbol, ln, sin, cos, radical };
    Kind kind = Kind::symbol;
    std::string key;  // total order and identity
    Expr tree;        // the atom as an expression
    Expr arg;         // canonical argument (kernels and radicals)
    unsigned long root = 0;  // radicals: arg^(1/root)
    std::shared_ptr<const RatFun> base;  // radicals: canonical value of arg
};

// The argument E of an exp(E) factor. exp factors multiply by adding arguments.
struct ExpArg {
    std::string key;
    Expr tree;  // canonical E
    std::shared_ptr<const RatFun> value;
};

const Atom* intern_symbol(const Symbol& s);
const Atom* intern_kernel(Atom::Kind kind, const Expr& canonical_arg);
const Atom* intern_radical(const Expr& canonical_arg, unsigned long root);
// nullptr for a zero argument.
const ExpArg* intern_exp(const RatFun& canonical_value);
const ExpArg* exp_add(const ExpArg* a, const ExpArg* b);
const ExpArg* exp_scale(const ExpArg* a, long k);

struct Monomial {
    std::vector<std::pair<const Atom*, int>> powers;  // sorted by key, positive exponents
    const ExpArg* exp = nullptr;

    int degree() const;
    int exponent_of(const Atom* a) const;
    bool operator==(const Monomial& o) const { return powers == o.powers && exp == o.exp; }
};

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial operator*(const Monomial& a, const Monomial& b);

class Poly {
public:
    using Terms = std::map<Monomial, mpq_class, MonomialOrder>;

    Poly() = default;
    explicit Poly(const mpq_class& c);
    static Poly from_monomial(Monomial m, const mpq_class& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const mpq_class& constant() const;  // requires is_constant()
    bool has_exp_free_term() const;
    // True when only symbols occur (no kernels, radicals or exp factors).
    bool is_pure() const;

    void add_term(const Monomial& m, const mpq_class& c);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const mpq_class& c) const;
    Poly pow(unsigned long k) const;

    bool operator==(const Poly& o) const;

private:
    Terms terms_;
};

struct RatFun {
    Poly num;
    Poly den{mpq_class(1)};

    bool is_zero() const { return num.is_zero(); }
};

RatFun rf_add(const RatFun& a, const RatFun& b);
RatFun rf_mul(const RatFun& a, const RatFun& b);
RatFun rf_neg(const RatFun& a);
RatFun rf_pow(const RatFun& a, long k);  // a canonical, k may be negative
RatFun rf_constant(const mpq_class& c);
RatFun rf_atom(const Atom* a);
RatFun rf_exp(const ExpArg* e);

// Brings a quotient into canonical form (relations, GCD, normalization of the denominator).
RatFun canonicalize(RatFun r);

// Canonical form of an expression, cached on its node.
std::shared_ptr<const RatFun> canonical(const Expr& e);

Expr to_expr(const Poly& p);
Expr to_expr(const RatFun& r);

}  // namespace jetwist::detail

#endif
