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

#include "jetwist/jet.hpp"

#include <algorithm>
#include <charconv>

#include "jetwist/canonical.hpp"
#include "jetwist/errors.hpp"

namespace jetwist {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw PreconditionError("negative multi-index entry");
        order_ += e;
    }
}

MultiIndex MultiIndex::increment(std::size_t i) const {
    MultiIndex r = *this;
    ++r.entries_.at(i);
    ++r.order_;
    return r;
}

MultiIndex MultiIndex::decrement(std::size_t i) const {
    if (entries_.at(i) == 0) throw PreconditionError("decrement of a zero multi-index entry");
    MultiIndex r = *this;
    --r.entries_[i];
    --r.order_;
    return r;
}

std::size_t MultiIndex::last_direction() const {
    for (std::size_t i = entries_.size(); i-- > 0;)
        if (entries_[i] > 0) return i;
    throw PreconditionError("multi-index of order zero has no direction");
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    // Higher leading entries first: u_xx, u_xy, u_yy.
    return b.entries_ <=> a.entries_;
}

JetSpace::JetSpace(std::vector<std::string> independents, std::vector<std::string> dependents, int order,
                   std::vector<std::string> parameters)
    : independents_(std::move(independents)),
      dependents_(std::move(dependents)),
      parameters_(std::move(parameters)),
      order_(order) {
    if (order_ < 0) throw PreconditionError("negative jet order");
    letters_ = std::all_of(independents_.begin(), independents_.end(), [](const auto& s) { return s.size() == 1; });
    std::vector<std::string> all = independents_;
    all.insert(all.end(), dependents_.begin(), dependents_.end());
    all.insert(all.end(), parameters_.begin(), parameters_.end());
    auto index = std::make_shared<std::map<std::string, JetRef, std::less<>>>();
    for (std::size_t a = 0; a < p(); ++a)
        for (const auto& J : multi_indices_upto(order_)) index->emplace(jet_name(a, J), JetRef{a, J});
    for (const auto& [name, ref] : *index)
        if (ref.index.order() > 0) all.push_back(name);
    std::sort(all.begin(), all.end());
    if (auto d = std::adjacent_find(all.begin(), all.end()); d != all.end())
        throw PreconditionError("duplicate coordinate name '" + *d + "'");
    index_ = std::move(index);
}

JetSpace JetSpace::with_order(int n) const {
    if (n == order_) return *this;
    return JetSpace(independents_, dependents_, n, parameters_);
}

bool JetSpace::operator==(const JetSpace& o) const {
    return independents_ == o.independents_ && dependents_ == o.dependents_ && parameters_ == o.parameters_ &&
           order_ == o.order_;
}

Symbol JetSpace::independent(std::size_t i) const { return Symbol(independents_.at(i), SymbolKind::independent); }

Symbol JetSpace::dependent(std::size_t a) const { return Symbol(dependents_.at(a), SymbolKind::dependent_jet); }

Symbol JetSpace::parameter(std::string_view name) const {
    if (!is_parameter(name)) throw UnknownSymbol(std::string(name));
    return Symbol(std::string(name), SymbolKind::parameter);
}

std::string JetSpace::jet_name(std::size_t a, const MultiIndex& J) const {
    if (J.size() != q()) throw DimensionMismatch("multi-index length differs from the number of independents");
    std::string name = dependents_.at(a);
    if (J.order() == 0) return name;
    if (letters_) {
        name += '_';
        for (std::size_t i = 0; i < q(); ++i) name.append(static_cast<std::size_t>(J[i]), independents_[i][0]);
        return name;
    }
    name += '[';
    for (std::size_t i = 0; i < q(); ++i) {
        if (i) name += ',';
        name += std::to_string(J[i]);
    }
    return name + ']';
}

Symbol JetSpace::jet(std::size_t a, const MultiIndex& J) const {
    return Symbol(jet_name(a, J), SymbolKind::dependent_jet);
}

std::optional<std::size_t> JetSpace::independent_index(std::string_view name) const {
    for (std::size_t i = 0; i < q(); ++i)
        if (independents_[i] == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> JetSpace::dependent_index(std::string_view name) const {
    for (std::size_t a = 0; a < p(); ++a)
        if (dependents_[a] == name) return a;
    return std::nullopt;
}

bool JetSpace::is_parameter(std::string_view name) const {
    return std::find(parameters_.begin(), parameters_.end(), name) != parameters_.end();
}

std::optional<JetRef> JetSpace::resolve_jet(std::string_view name) const {
    if (auto it = index_->find(name); it != index_->end()) return it->second;
    for (std::size_t a = 0; a < p(); ++a) {
        const std::string& d = dependents_[a];
        if (name.size() <= d.size() + 1 || name.substr(0, d.size()) != d) continue;
        std::string_view rest = name.substr(d.size());
        std::vector<int> entries(q(), 0);
        if (rest.front() == '_' && letters_) {
            bool ok = true;
            for (char c : rest.substr(1)) {
                auto i = independent_index(std::string_view(&c, 1));
                if (!i) {
                    ok = false;
                    break;
                }
                ++entries[*i];
            }
            if (ok) return JetRef{a, MultiIndex(entries)};
        } else if (rest.front() == '[' && rest.back() == ']') {
            std::string_view body = rest.substr(1, rest.size() - 2);
            std::size_t i = 0;
            bool ok = true;
            while (ok && !body.empty()) {
                const auto comma = body.find(',');
                std::string_view part = body.substr(0, comma);
                int v = -1;
                auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
                if (ec != std::errc() || ptr != part.data() + part.size() || v < 0 || i >= q()) ok = false;
                else entries[i++] = v;
                body = comma == std::string_view::npos ? std::string_view() : body.substr(comma + 1);
            }
            if (ok && i == q()) return JetRef{a, MultiIndex(entries)};
        }
    }
    return std::nullopt;
}

Symbol JetSpace::resolve(std::string_view name) const {
    if (independent_index(name)) return Symbol(std::string(name), SymbolKind::independent);
    if (is_parameter(name)) return Symbol(std::string(name), SymbolKind::parameter);
    if (auto r = resolve_jet(name)) return jet(*r);
    throw UnknownSymbol(std::string(name));
}

std::vector<MultiIndex> JetSpace::multi_indices(int order) const {
    std::vector<MultiIndex> out;
    if (q() == 0) {
        if (order == 0) out.emplace_back();
        return out;
    }
    std::vector<int> e(q(), 0);
    // Compositions of `order` into q parts, leading entries descending.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == q()) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, order);
    return out;
}

std::vector<MultiIndex> JetSpace::multi_indices_upto(int n) const {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= n; ++k) {
        auto level = multi_indices(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Symbol> JetSpace::coordinates() const {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < q(); ++i) out.push_back(independent(i));
    for (const auto& J : multi_indices_upto(order_))
        for (std::size_t a = 0; a < p(); ++a) out.push_back(jet(a, J));
    return out;
}

std::size_t JetSpace::coordinate_count() const {
    // C(n+q, q) jets per dependent variable.
    unsigned long long c = 1;
    for (std::size_t k = 1; k <= q(); ++k) c = c * (static_cast<unsigned long long>(order_) + k) / k;
    return q() + p() * static_cast<std::size_t>(c);
}

int JetSpace::jet_order(const Expr& e) const {
    int best = 0;
    for (const auto& s : symbols(e))
        if (auto r = resolve_jet(s.name())) best = std::max(best, r->index.order());
    return best;
}

Expr total_derivative(const Expr& e, std::size_t i, const JetSpace& space) {
    if (i >= space.q()) throw DimensionMismatch("independent variable index out of range");
    return derive(e, [&](const Symbol& s) -> Expr {
        if (auto k = space.independent_index(s.name())) return Expr(*k == i ? 1 : 0);
        if (auto r = space.resolve_jet(s.name())) return Expr(space.jet(r->dependent, r->index.increment(i)));
        return Expr(0);
    });
}

Expr total_derivative(const Expr& e, const MultiIndex& J, const JetSpace& space) {
    Expr r = e;
    for (std::size_t i = 0; i < J.size(); ++i)
        for (int k = 0; k < J[i]; ++k) r = total_derivative(r, i, space);
    return r;
}

std::vector<ContactForm> contact_forms(const JetSpace& space) {
    std::vector<ContactForm> out;
    if (space.order() < 1) return out;
    for (const auto& J : space.multi_indices_upto(space.order() - 1)) {
        for (std::size_t a = 0; a < space.p(); ++a) {
            ContactForm f{a, J, space.jet(a, J), {}};
            for (std::size_t i = 0; i < space.q(); ++i) f.dx.push_back(-Expr(space.jet(a, J.increment(i))));
            out.push_back(std::move(f));
        }
    }
    return out;
}

Section::Section(const JetSpace& space, std::map<std::string, Expr> values) : values_(std::move(values)) {
    for (const auto& [name, v] : values_) {
        if (!space.dependent_index(name)) throw UnknownSymbol(name);
        for (const auto& s : symbols(v))
            if (space.resolve_jet(s.name()))
                throw PreconditionError("section value for " + name + " contains jet symbol " + s.name());
    }
    for (const auto& d : space.dependents())
        if (!values_.count(d)) throw PreconditionError("section does not assign " + d);
}

const Expr& Section::value(const std::string& dependent) const {
    auto it = values_.find(dependent);
    if (it == values_.end()) throw UnknownSymbol(dependent);
    return it->second;
}

Assignment prolong_section(const Section& f, const JetSpace& space) {
    Assignment out;
    for (std::size_t a = 0; a < space.p(); ++a) {
        std::map<MultiIndex, Expr> d;
        for (const auto& J : space.multi_indices_upto(space.order())) {
            Expr v;
            if (J.order() == 0) {
                v = normalize(f.value(space.dependents()[a]));
            } else {
                const std::size_t i = J.last_direction();
                v = normalize(diff(d.at(J.decrement(i)), space.independent(i)));
            }
            d.emplace(J, v);
            out[space.jet_name(a, J)] = v;
        }
    }
    return out;
}

}  // namespace jetwist
