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

#include <cctype>

#include "jetwist/canonical.hpp"
#include "jetwist/errors.hpp"
#include "jetwist/expr.hpp"
#include "jetwist/jet.hpp"

namespace jetwist {

namespace {

// Recursive descent over:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' unary)?
//   primary := integer | name | name '[' ints ']' | func '(' sum ')' | '(' sum ')'
class Parser {
public:
    Parser(std::string_view text, const JetSpace& space) : text_(text), space_(space) {}

    Expr run() {
        skip();
        if (pos_ == text_.size()) fail("empty expression");
        Expr e = parse_sum();
        skip();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expr parse_sum() {
        std::vector<Expr> terms{parse_product()};
        for (;;) {
            if (accept('+')) terms.push_back(parse_product());
            else if (accept('-')) terms.push_back(-parse_product());
            else break;
        }
        return sum(std::move(terms));
    }

    Expr parse_product() {
        std::vector<Expr> factors{parse_unary()};
        for (;;) {
            if (accept('*')) {
                factors.push_back(parse_unary());
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Expr d = parse_unary();
                if (d.is_zero_constant()) {
                    pos_ = at;
                    fail("division by zero");
                }
                factors.push_back(pow(d, -1));
            } else {
                break;
            }
        }
        return product(std::move(factors));
    }

    Expr parse_unary() {
        if (accept('-')) return -parse_unary();
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (!accept('^')) return base;
        Expr e = parse_unary();
        Expr k = normalize(e);
        if (k.is_constant()) return pow(base, k.constant_value());
        return exp(e * ln(base));
    }

    Expr parse_primary() {
        skip();
        if (pos_ == text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = parse_sum();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
        fail(std::string("unexpected '") + c + "'");
    }

    Expr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported; use p/q");
        return Expr(mpq_class(std::string(text_.substr(start, pos_ - start))));
    }

    Expr parse_name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        skip();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            Expr (*fn)(const Expr&) = nullptr;
            if (name == "exp") fn = &exp;
            else if (name == "ln") fn = &ln;
            else if (name == "sin") fn = &sin;
            else if (name == "cos") fn = &cos;
            if (fn == nullptr) {
                pos_ = start;
                fail("unknown function '" + name + "'");
            }
            ++pos_;
            Expr arg = parse_sum();
            expect(')');
            return fn(arg);
        }
        if (pos_ < text_.size() && text_[pos_] == '[') {
            const std::size_t close = text_.find(']', pos_);
            if (close == std::string_view::npos) fail("unterminated '['");
            for (std::size_t i = pos_ + 1; i < close; ++i)
                if (text_[i] == ' ') fail("spaces are not allowed inside a positional jet index");
            name += std::string(text_.substr(pos_, close + 1 - pos_));
            pos_ = close + 1;
        }
        try {
            return Expr(space_.resolve(name));
        } catch (const UnknownSymbol&) {
            pos_ = start;
            throw ParseError("unknown symbol '" + name + "'", pos_ + 1);
        }
    }

    std::string_view text_;
    const JetSpace& space_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, const JetSpace& space) { return Parser(text, space).run(); }

}  // namespace jetwist
