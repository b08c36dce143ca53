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

#ifndef JETWIST_EXPR_HPP
#define JETWIST_EXPR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jetwist {

class JetSpace;

enum class SymbolKind : std::uint8_t { independent, dependent_jet, parameter };

/// A named coordinate or parameter. Immutable.
class Symbol {
public:
    Symbol(std::string name, SymbolKind kind) : name_(std::move(name)), kind_(kind) {}

    const std::string& name() const noexcept { return name_; }
    SymbolKind kind() const noexcept { return kind_; }

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol& a, const Symbol& b) {
        if (auto c = a.name_ <=> b.name_; c != 0) return c;
        return a.kind_ <=> b.kind_;
    }

private:
    std::string name_;
    SymbolKind kind_;
};

namespace detail {
struct Node;
}

/// Immutable expression tree over exact rationals.
///
/// Trees are shared, so copying an Expr is cheap. Construction performs only
/// light local simplification (flattening, constant folding, neutral
/// elements); `normalize` produces the canonical form.
class Expr {
public:
    enum class Kind : std::uint8_t { constant, symbol, sum, product, power, exp, ln, sin, cos };

    Expr();  // zero
    Expr(int v);
    Expr(long v);
    Expr(const mpq_class& v);
    explicit Expr(const Symbol& s);

    static Expr rational(long num, long den);

    Kind kind() const noexcept;
    bool is_constant() const noexcept { return kind() == Kind::constant; }
    bool is_zero_constant() const noexcept;
    bool is_one_constant() const noexcept;
    const mpq_class& constant_value() const;
    const Symbol& symbol() const;
    /// Terms of a sum, factors of a product, the base of a power or the argument of a function.
    std::span<const Expr> operands() const noexcept;
    const mpq_class& exponent() const;

    std::size_t hash() const noexcept;
    const detail::Node* node() const noexcept { return node_.get(); }

    friend bool operator==(const Expr& a, const Expr& b);
    friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);

    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o);
    Expr& operator*=(const Expr& o);

    explicit Expr(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}

private:
    std::shared_ptr<const detail::Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

Expr sum(std::vector<Expr> terms);
Expr product(std::vector<Expr> factors);
Expr pow(const Expr& base, const mpq_class& exponent);
Expr exp(const Expr& arg);
Expr ln(const Expr& arg);
Expr sin(const Expr& arg);
Expr cos(const Expr& arg);

/// Distinct symbols occurring in e, sorted.
std::vector<Symbol> symbols(const Expr& e);
bool contains(const Expr& e, const Symbol& s);

/// Partial derivative, all symbols treated as mutually independent. Not normalized.
Expr diff(const Expr& e, const Symbol& s);

/// Applies the derivation sending each symbol s to image(s). Symbols mapped to
/// zero may be signalled by returning a zero constant.
Expr derive(const Expr& e, const std::function<Expr(const Symbol&)>& image);

using Assignment = std::map<std::string, Expr, std::less<>>;
using NumericAssignment = std::map<std::string, double, std::less<>>;

enum class SubstMode : std::uint8_t { lenient, strict };

/// Simultaneous substitution of symbols (by name), followed by normalization.
/// In strict mode every symbol of e must be assigned, else MissingSymbols.
Expr subst(const Expr& e, const Assignment& a, SubstMode mode = SubstMode::lenient);
/// Same substitution without normalizing the result.
Expr substitute(const Expr& e, const Assignment& a);

/// IEEE double evaluation. Throws MissingSymbols or DomainError.
double eval_numeric(const Expr& e, const NumericAssignment& a);

/// Re-parseable infix text of the tree as built.
std::string to_string(const Expr& e);
/// Re-parseable infix text of the canonical form.
std::string render(const Expr& e);

/// Parses infix text; symbols resolve against `space` (coordinates, jets of
/// any order and declared parameters).
Expr parse(std::string_view text, const JetSpace& space);

}  // namespace jetwist

template <>
struct std::hash<jetwist::Expr> {
    std::size_t operator()(const jetwist::Expr& e) const noexcept { return e.hash(); }
};

#endif
