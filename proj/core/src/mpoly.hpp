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

#ifndef JETWIST_SRC_MPOLY_HPP
#define JETWIST_SRC_MPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace jetwist::detail {

// Dense-exponent sparse multivariate polynomial over Q in a fixed number of
// variables. Terms are kept in lex order, variable 0 most significant.
class MPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, mpq_class, std::greater<>>;

    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
    static MPoly constant(std::size_t nvars, const mpq_class& c);
    static MPoly variable(std::size_t nvars, std::size_t v);

    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    void add_term(const Exponents& e, const mpq_class& c);

    int degree(std::size_t v) const;
    // Coefficient of v^d, as a polynomial with v eliminated (exponent zero).
    MPoly coeff(std::size_t v, int d) const;
    MPoly leading_coeff(std::size_t v) const { return coeff(v, degree(v)); }
    const mpq_class& leading_scalar() const { return terms_.begin()->second; }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const mpq_class& c) const;
    MPoly shifted(std::size_t v, int k) const;  // multiply by v^k
    MPoly monic() const;

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

private:
    std::size_t nvars_;
    Terms terms_;
};

// Quotient when b divides a exactly, nullopt otherwise.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

// Monic greatest common divisor (zero only when both inputs are zero).
MPoly gcd(const MPoly& a, const MPoly& b);

// Pseudo-remainder of a by b with respect to variable v.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t v);

}  // namespace jetwist::detail

#endif
