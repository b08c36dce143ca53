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

#ifndef JETWIST_SRC_PROBLEM_UTIL_HPP
#define JETWIST_SRC_PROBLEM_UTIL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jetwist/expr.hpp"
#include "jetwist/jet.hpp"

namespace jetwist::detail {

enum class KeyType : std::uint8_t { integer, word, expr_list, name, name_list, output, output_list };
enum class RefKind : std::uint8_t { none, field, prolonged, matrix, twist, equations, section, chain };

struct KeySpec {
    std::string key;
    KeyType type;
    RefKind ref = RefKind::none;
    bool required = false;
    std::vector<std::string> choices{};
};

/// Keys accepted by a task kind, or nullptr for an unknown kind.
const std::vector<KeySpec>* task_schema(const std::string& kind);

std::string trim(std::string_view s);

/// Pieces of s split at separators outside brackets, trimmed, each with the
/// 0-based offset of its first non-blank character.
std::vector<std::pair<std::string, std::size_t>> split_top(std::string_view s, char sep);

/// parse() with errors relocated to a file line and 1-based column.
Expr parse_at(std::string_view text, const JetSpace& space, std::size_t line, std::size_t column);

}  // namespace jetwist::detail

#endif
