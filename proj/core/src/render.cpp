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

#include <sstream>

#include "jetwist/canonical.hpp"
#include "jetwist/expr.hpp"

namespace jetwist {

namespace {

enum Prec : int { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

std::string rational_text(const mpq_class& q) { return q.get_str(); }

int precedence(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind()) {
    case K::constant:
        if (sgn(e.constant_value()) < 0) return kUnary;
        return e.constant_value().get_den() == 1 ? kAtom : kProduct;
    case K::sum:
        return kSum;
    case K::product:
        if (e.operands()[0].is_constant() && sgn(e.operands()[0].constant_value()) < 0) return kUnary;
        return kProduct;
    case K::power:
        return e.exponent() < 0 ? kProduct : kPower;
    default:
        return kAtom;
    }
}

void write(std::ostream& os, const Expr& e);

void write_wrapped(std::ostream& os, const Expr& e, int min_prec) {
    if (precedence(e) < min_prec) {
        os << '(';
        write(os, e);
        os << ')';
    } else {
        write(os, e);
    }
}

// A term is written with a leading minus inside sums when it carries a negative coefficient.
bool negative_term(const Expr& t) {
    if (t.is_constant()) return sgn(t.constant_value()) < 0;
    if (t.kind() == Expr::Kind::product) {
        const Expr& c = t.operands()[0];
        return c.is_constant() && sgn(c.constant_value()) < 0;
    }
    return false;
}

void write_product(std::ostream& os, std::span<const Expr> ops) {
    std::vector<Expr> num;
    std::vector<Expr> den;
    mpq_class c = 1;
    for (const auto& f : ops) {
        if (f.is_constant()) c *= f.constant_value();
        else if (f.kind() == Expr::Kind::power && f.exponent() < 0) den.push_back(pow(f.operands()[0], -f.exponent()));
        else num.push_back(f);
    }
    if (sgn(c) < 0) {
        os << '-';
        c = -c;
    }
    bool first = true;
    if (c.get_num() != 1 || num.empty()) {
        os << c.get_num().get_str();
        first = false;
    }
    for (const auto& f : num) {
        if (!first) os << '*';
        write_wrapped(os, f, kPower);
        first = false;
    }
    if (c.get_den() != 1) os << '/' << c.get_den().get_str();
    for (const auto& d : den) {
        os << '/';
        write_wrapped(os, d, kPower);
    }
}

void write(std::ostream& os, const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind()) {
    case K::constant:
        os << rational_text(e.constant_value());
        return;
    case K::symbol:
        os << e.symbol().name();
        return;
    case K::sum: {
        bool first = true;
        for (const auto& t : e.operands()) {
            if (first) {
                write_wrapped(os, t, kSum);
            } else if (negative_term(t)) {
                os << " - ";
                write_wrapped(os, -t, kProduct);
            } else {
                os << " + ";
                write_wrapped(os, t, kSum);
            }
            first = false;
        }
        return;
    }
    case K::product:
        write_product(os, e.operands());
        return;
    case K::power: {
        if (e.exponent() < 0) {
            write_product(os, std::span<const Expr>(&e, 1));
            return;
        }
        write_wrapped(os, e.operands()[0], kAtom);
        const mpq_class& r = e.exponent();
        os << '^';
        if (r.get_den() == 1) os << r.get_str();
        else os << '(' << r.get_str() << ')';
        return;
    }
    case K::exp:
    case K::ln:
    case K::sin:
    case K::cos: {
        static constexpr const char* names[] = {"exp", "ln", "sin", "cos"};
        os << names[static_cast<int>(e.kind()) - static_cast<int>(K::exp)] << '(';
        write(os, e.operands()[0]);
        os << ')';
        return;
    }
    }
}

}  // namespace

std::string to_string(const Expr& e) {
    std::ostringstream os;
    write(os, e);
    return os.str();
}

std::string render(const Expr& e) { return to_string(normalize(e)); }

}  // namespace jetwist
