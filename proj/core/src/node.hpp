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

#ifndef JETWIST_SRC_NODE_HPP
#define JETWIST_SRC_NODE_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "jetwist/expr.hpp"

namespace jetwist::detail {

struct RatFun;

struct Node {
    Expr::Kind kind = Expr::Kind::constant;
    mpq_class value;  // constant value, or exponent of a power
    Symbol sym{"", SymbolKind::parameter};
    std::vector<Expr> ops;
    std::size_t hash = 0;

    // Canonical rational form, computed once on first normalization.
    mutable std::once_flag canon_once;
    mutable std::shared_ptr<const RatFun> canon;
};

std::size_t hash_rational(const mpq_class& q);

}  // namespace jetwist::detail

#endif
