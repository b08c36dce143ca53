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

#ifndef JETWIST_JET_HPP
#define JETWIST_JET_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetwist/expr.hpp"

namespace jetwist {

/// Multi-index J = (j_1, ..., j_q) over the independent variables.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    static MultiIndex zero(std::size_t q) { return MultiIndex(std::vector<int>(q, 0)); }

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    int order() const noexcept { return order_; }
    int operator[](std::size_t i) const { return entries_.at(i); }

    /// J with entry i raised by one.
    MultiIndex increment(std::size_t i) const;
    /// J with entry i lowered by one; requires entry i > 0.
    MultiIndex decrement(std::size_t i) const;
    /// The largest i with j_i > 0. Requires order() > 0. Prolongation
    /// recursions reach J as decrement(last_direction()) followed by D_i.
    std::size_t last_direction() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<int> entries_;
    int order_ = 0;
};

/// A jet coordinate u^a_J.
struct JetRef {
    std::size_t dependent = 0;
    MultiIndex index;

    friend bool operator==(const JetRef&, const JetRef&) = default;
    friend auto operator<=>(const JetRef&, const JetRef&) = default;
};

/// Coordinates (x^i, u^a_J) of the jet space of order n.
///
/// Jet symbols are named "u_xy": the dependent name, an underscore, then one
/// independent name per derivative in declared order. When some independent
/// name is longer than one character the positional form "u[1,1]" is used
/// instead; it is accepted on input in every case. Jets of any order resolve,
/// so expressions may exceed the declared order.
class JetSpace {
public:
    JetSpace(std::vector<std::string> independents, std::vector<std::string> dependents, int order,
             std::vector<std::string> parameters = {});

    std::size_t q() const noexcept { return independents_.size(); }
    std::size_t p() const noexcept { return dependents_.size(); }
    int order() const noexcept { return order_; }
    const std::vector<std::string>& independents() const noexcept { return independents_; }
    const std::vector<std::string>& dependents() const noexcept { return dependents_; }
    const std::vector<std::string>& parameters() const noexcept { return parameters_; }

    /// The same coordinates at another order.
    JetSpace with_order(int n) const;

    Symbol independent(std::size_t i) const;
    Symbol dependent(std::size_t a) const;
    Symbol parameter(std::string_view name) const;
    Symbol jet(std::size_t a, const MultiIndex& J) const;
    Symbol jet(const JetRef& r) const { return jet(r.dependent, r.index); }
    std::string jet_name(std::size_t a, const MultiIndex& J) const;

    std::optional<std::size_t> independent_index(std::string_view name) const;
    std::optional<std::size_t> dependent_index(std::string_view name) const;
    bool is_parameter(std::string_view name) const;
    /// u^a_J for a jet symbol name (order 0 included), any order.
    std::optional<JetRef> resolve_jet(std::string_view name) const;
    /// Any coordinate, jet or parameter. Throws UnknownSymbol.
    Symbol resolve(std::string_view name) const;

    /// Multi-indices of exactly the given order, u_xx before u_xy before u_yy.
    std::vector<MultiIndex> multi_indices(int order) const;
    /// Multi-indices of order 0..n, by order.
    std::vector<MultiIndex> multi_indices_upto(int n) const;
    /// x^1..x^q, then u^a_J ordered by |J|, then J, then a.
    std::vector<Symbol> coordinates() const;
    /// q + p*C(n+q, q).
    std::size_t coordinate_count() const;

    /// Largest jet order among the symbols of e (0 when it has none).
    int jet_order(const Expr& e) const;

    bool operator==(const JetSpace& o) const;

private:
    std::vector<std::string> independents_;
    std::vector<std::string> dependents_;
    std::vector<std::string> parameters_;
    int order_;
    bool letters_;
    std::shared_ptr<const std::map<std::string, JetRef, std::less<>>> index_;
};

/// D_i e = d_i e + u^a_{J,i} d e / d u^a_J. Symbols outside the space are constants.
Expr total_derivative(const Expr& e, std::size_t i, const JetSpace& space);
/// D_J e, applied one direction at a time.
Expr total_derivative(const Expr& e, const MultiIndex& J, const JetSpace& space);

/// omega^a_J = du^a_J - u^a_{J,i} dx^i as a coefficient map.
struct ContactForm {
    std::size_t dependent = 0;
    MultiIndex index;
    Symbol du;               // coefficient 1
    std::vector<Expr> dx;    // coefficient of dx^i
};

/// One form per (a, J) with |J| <= n - 1.
std::vector<ContactForm> contact_forms(const JetSpace& space);

/// u^a = f^a(x), with f^a free of jet symbols.
class Section {
public:
    Section() = default;
    Section(const JetSpace& space, std::map<std::string, Expr> values);

    const std::map<std::string, Expr>& values() const noexcept { return values_; }
    const Expr& value(const std::string& dependent) const;

private:
    std::map<std::string, Expr> values_;
};

/// Every jet u^a_J with |J| <= n mapped to the corresponding partial derivative of f^a.
Assignment prolong_section(const Section& f, const JetSpace& space);

}  // namespace jetwist

#endif
