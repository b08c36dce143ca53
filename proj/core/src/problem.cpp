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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "jetwist/cli.hpp"
#include "jetwist/errors.hpp"
#include "problem_util.hpp"

namespace jetwist {

const char* to_string(TwistKind k) noexcept {
    switch (k) {
    case TwistKind::lambda:
        return "lambda";
    case TwistKind::mu:
        return "mu";
    case TwistKind::sigma:
        return "sigma";
    }
    return "lambda";
}

namespace detail {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::pair<std::string, std::size_t>> split_top(std::string_view s, char sep) {
    std::vector<std::pair<std::string, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        std::string_view piece = s.substr(start, end - start);
        std::size_t lead = 0;
        while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
        out.emplace_back(trim(piece), start + lead);
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == sep && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(s.size());
    return out;
}

Expr parse_at(std::string_view text, const JetSpace& space, std::size_t line, std::size_t column) {
    try {
        return parse(text, space);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), line, column + e.column() - 1);
    }
}

const std::vector<KeySpec>* task_schema(const std::string& kind) {
    static const std::map<std::string, std::vector<KeySpec>> table = [] {
        using T = KeyType;
        using R = RefKind;
        std::map<std::string, std::vector<KeySpec>> m;
        const KeySpec order{"order", T::integer, R::none, true};
        m["prolong"] = {{"field", T::name, R::field, true}, order, {"expect", T::name, R::prolonged, false},
                        {"as", T::output, R::prolonged, false}};
        m["mu-prolong"] = {{"field", T::name, R::field, true},
                           {"twist", T::name, R::twist, true},
                           order,
                           {"maurer-cartan", T::word, R::none, false, {"required", "ignored"}},
                           {"expect", T::name, R::prolonged, false},
                           {"as", T::output, R::prolonged, false}};
        m["lambda-prolong"] = {{"field", T::name, R::field, true},
                               {"twist", T::name, R::twist, true},
                               order,
                               {"expect", T::name, R::prolonged, false},
                               {"as", T::output, R::prolonged, false}};
        m["sigma-prolong"] = {{"fields", T::name_list, R::field, true},
                              {"twist", T::name, R::twist, true},
                              order,
                              {"expect", T::name_list, R::prolonged, false},
                              {"as", T::output_list, R::prolonged, false}};
        m["check-symmetry"] = {{"prolonged", T::name, R::prolonged, true}, {"equations", T::name, R::equations, true}};
        m["check-mc"] = {{"twist", T::name, R::twist, true}};
        m["gauge-to-mu"] = {{"matrix", T::name, R::matrix, true},
                            {"expect", T::name, R::twist, false},
                            {"as", T::output, R::twist, false}};
        m["gauge-to-sigma"] = {{"matrix", T::name, R::matrix, true},
                               {"expect", T::name, R::matrix, false},
                               {"as", T::output, R::matrix, false}};
        m["check-mu-diagram"] = {{"field", T::name, R::field, true},
                                 {"matrix", T::name, R::matrix, true},
                                 order,
                                 {"expect-difference", T::name, R::prolonged, false},
                                 {"expect-twisted", T::name, R::prolonged, false},
                                 {"expect-gauged", T::name, R::prolonged, false},
                                 {"expect-base", T::name, R::field, false},
                                 {"as-twisted", T::output, R::prolonged, false},
                                 {"as-gauged", T::output, R::prolonged, false}};
        m["check-sigma-diagram"] = {{"fields", T::name_list, R::field, true},
                                    {"matrix", T::name, R::matrix, true},
                                    order,
                                    {"expect-twisted", T::name_list, R::prolonged, false},
                                    {"expect-gauged", T::name_list, R::prolonged, false},
                                    {"expect-base", T::name_list, R::field, false}};
        m["check-solution"] = {{"section", T::name, R::section, true}, {"equations", T::name, R::equations, true}};
        m["check-invariant-section"] = {{"field", T::name, R::field, true}, {"section", T::name, R::section, true}};
        m["compare-on-sections"] = {{"prolonged", T::name_list, R::prolonged, true},
                                    {"section", T::name, R::section, true},
                                    {"vanish", T::word, R::none, false, {"yes", "no"}}};
        m["check-chain"] = {{"chain", T::name, R::chain, true},
                            {"prolonged", T::name, R::prolonged, true},
                            {"ibdp", T::word, R::none, false, {"holds", "fails", "vacuous"}}};
        m["ibdp-extend"] = {{"chain", T::name, R::chain, true},
                            {"prolonged", T::name, R::prolonged, false},
                            {"expect", T::expr_list, R::none, false},
                            {"as", T::output, R::chain, false}};
        m["prolong-combination"] = {{"fields", T::name_list, R::field, true},
                                    {"functions", T::expr_list, R::none, true},
                                    order,
                                    {"expect-defect", T::name, R::prolonged, false}};
        m["bracket-defect"] = {{"fields", T::name_list, R::field, true}, order,
                               {"gamma", T::word, R::none, false, {"zero", "any"}}};
        m["check-involution"] = {{"fields", T::name_list, R::field, true}};
        m["check-lie-algebra"] = {{"fields", T::name_list, R::field, true}};
        m["same-distribution"] = {{"first", T::name_list, R::prolonged, true},
                                  {"second", T::name_list, R::prolonged, true}};
        m["evolutionary-rep"] = {{"field", T::name, R::field, true},
                                 {"expect", T::name, R::field, false},
                                 {"as", T::output, R::field, false}};
        m["check-evolutionary-rep"] = {{"field", T::name, R::field, true},
                                       {"expect-base", T::name, R::field, false}};
        m["lai-residual"] = {{"matrix", T::name, R::matrix, true},
                             {"twist", T::name, R::twist, true},
                             {"direction", T::word, R::none, true}};
        for (auto& [k, v] : m)
            v.push_back({"verdict", T::word, R::none, false,
                         {"proven", "disproven", "probable", "not-applicable", "error"}});
        return m;
    }();
    auto it = table.find(kind);
    return it == table.end() ? nullptr : &it->second;
}

}  // namespace detail

namespace {

using detail::KeySpec;
using detail::KeyType;
using detail::RefKind;
using detail::parse_at;
using detail::split_top;
using detail::trim;

const char* ref_name(RefKind k) {
    switch (k) {
    case RefKind::field:
        return "field";
    case RefKind::prolonged:
        return "prolonged field";
    case RefKind::matrix:
        return "matrix";
    case RefKind::twist:
        return "twist";
    case RefKind::equations:
        return "equations";
    case RefKind::section:
        return "section";
    case RefKind::chain:
        return "chain";
    case RefKind::none:
        break;
    }
    return "value";
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    });
}

struct Line {
    std::size_t number;
    std::string text;    // comment stripped, right-trimmed
    std::size_t indent;  // 0-based column of the first non-blank
};

// "key: value" split at the first colon outside brackets.
struct KeyValue {
    std::string key;
    std::string value;
    std::size_t value_col;  // 1-based
};

std::optional<KeyValue> split_key(const Line& l, char sep = ':') {
    const std::string& t = l.text;
    const std::size_t p = t.find(sep);
    if (p == std::string::npos) return std::nullopt;
    KeyValue kv;
    kv.key = trim(std::string_view(t).substr(0, p));
    std::size_t v = p + 1;
    while (v < t.size() && std::isspace(static_cast<unsigned char>(t[v]))) ++v;
    kv.value = trim(std::string_view(t).substr(v));
    kv.value_col = v + 1;
    return kv;
}

class FileParser {
public:
    FileParser(const std::string& text, std::string path) {
        file_.path = std::move(path);
        std::istringstream in(text);
        std::string raw;
        std::size_t n = 0;
        while (std::getline(in, raw)) {
            ++n;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            const std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
            std::size_t ind = 0;
            while (ind < raw.size() && std::isspace(static_cast<unsigned char>(raw[ind]))) ++ind;
            if (ind == raw.size()) continue;
            lines_.push_back({n, raw, ind});
        }
    }

    ProblemFile run() {
        while (pos_ < lines_.size()) block();
        return std::move(file_);
    }

private:
    [[noreturn]] void fail(const Line& l, const std::string& msg, std::size_t col = 0) const {
        throw ParseError(msg, l.number, col == 0 ? l.indent + 1 : col);
    }

    std::vector<std::string> words(const Line& l) const {
        std::istringstream in(l.text);
        std::vector<std::string> w;
        std::string s;
        while (in >> s) w.push_back(s);
        return w;
    }

    // Column of the k-th whitespace-separated word.
    std::size_t word_col(const Line& l, std::size_t k) const {
        std::size_t i = 0;
        for (std::size_t w = 0;; ++w) {
            while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
            if (w == k || i >= l.text.size()) return i + 1;
            while (i < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
        }
    }

    const JetSpace& space(const Line& l) const {
        if (!file_.space) fail(l, "a space block must come first");
        return *file_.space;
    }

    void declare(const Line& l, std::size_t col, const std::string& name, RefKind kind) {
        if (!is_identifier(name)) fail(l, "invalid name '" + name + "'", col);
        if (!names_.emplace(name, kind).second) fail(l, "name '" + name + "' is already declared", col);
    }

    std::vector<Line> body(const Line& header) {
        std::vector<Line> out;
        while (pos_ < lines_.size()) {
            const Line& l = lines_[pos_++];
            if (l.text.substr(l.indent) == "end") return out;
            out.push_back(l);
        }
        fail(header, "block is not closed by 'end'");
    }

    template <class F>
    void guarded(const Line& l, F&& f) {
        try {
            f();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(l, e.what());
        }
    }

    void block() {
        const Line header = lines_[pos_++];
        const auto w = words(header);
        const std::string& kind = w[0];
        auto need = [&](std::size_t n) {
            if (w.size() != n) fail(header, "'" + kind + "' header takes " + std::to_string(n - 1) + " argument(s)");
        };
        if (kind == "space") {
            need(1);
            space_block(header, body(header));
        } else if (kind == "field") {
            need(2);
            declare(header, word_col(header, 1), w[1], RefKind::field);
            field_block(header, w[1], body(header));
        } else if (kind == "prolonged") {
            need(2);
            declare(header, word_col(header, 1), w[1], RefKind::prolonged);
            prolonged_block(header, w[1], body(header));
        } else if (kind == "matrix") {
            need(2);
            declare(header, word_col(header, 1), w[1], RefKind::matrix);
            matrix_block(header, w[1], body(header));
        } else if (kind == "twist") {
            need(3);
            declare(header, word_col(header, 1), w[1], RefKind::twist);
            twist_block(header, w[1], w[2], body(header));
        } else if (kind == "equations") {
            need(2);
            declare(header, word_col(header, 1), w[1], RefKind::equations);
            equations_block(header, w[1], body(header));
        } else if (kind == "section") {
            need(2);
            declare(header, word_col(header, 1), w[1], RefKind::section);
            section_block(header, w[1], body(header));
        } else if (kind == "chain") {
            need(2);
            declare(header, word_col(header, 1), w[1], RefKind::chain);
            chain_block(header, w[1], body(header));
        } else if (kind == "task") {
            need(3);
            task_block(header, w[1], w[2], body(header));
        } else {
            fail(header, "unknown block '" + kind + "'");
        }
    }

    void space_block(const Line& header, const std::vector<Line>& lines) {
        if (file_.space) fail(header, "space is declared twice");
        std::map<std::string, std::pair<std::string, const Line*>> kv;
        for (const auto& l : lines) {
            auto p = split_key(l);
            if (!p) fail(l, "expected 'key: value'");
            if (p->key != "independent" && p->key != "dependent" && p->key != "parameters" && p->key != "order")
                fail(l, "unknown space key '" + p->key + "'");
            if (!kv.emplace(p->key, std::make_pair(p->value, &l)).second) fail(l, "duplicate key '" + p->key + "'");
        }
        auto list = [&](const std::string& key) {
            std::vector<std::string> out;
            auto it = kv.find(key);
            if (it == kv.end()) return out;
            for (const auto& [s, c] : split_top(it->second.first, ',')) {
                if (s.empty()) continue;
                if (!is_identifier(s)) fail(*it->second.second, "invalid name '" + s + "'");
                out.push_back(s);
            }
            return out;
        };
        if (!kv.count("independent") || !kv.count("dependent")) fail(header, "space needs independent and dependent");
        int order = 0;
        if (auto it = kv.find("order"); it != kv.end()) order = parse_int(*it->second.second, it->second.first);
        guarded(header, [&] { file_.space.emplace(list("independent"), list("dependent"), order, list("parameters")); });
    }

    int parse_int(const Line& l, const std::string& s) const {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            s.size() > 4)
            fail(l, "expected a non-negative integer, got '" + s + "'");
        return std::stoi(s);
    }

    void field_block(const Line& header, const std::string& name, const std::vector<Line>& lines) {
        const JetSpace& sp = space(header);
        std::vector<Expr> xi(sp.q());
        std::vector<Expr> phi(sp.p());
        std::set<std::string> seen;
        for (const auto& l : lines) {
            auto p = split_key(l);
            if (!p) fail(l, "expected 'coordinate: coefficient'");
            if (!seen.insert(p->key).second) fail(l, "duplicate coefficient for " + p->key);
            const Expr c = parse_at(p->value, sp, l.number, p->value_col);
            if (auto i = sp.independent_index(p->key)) xi[*i] = c;
            else if (auto a = sp.dependent_index(p->key)) phi[*a] = c;
            else fail(l, "'" + p->key + "' is not a coordinate of the base space");
        }
        guarded(header, [&] { file_.fields.emplace(name, VectorField(sp, xi, phi)); });
    }

    void prolonged_block(const Line& header, const std::string& name, const std::vector<Line>& lines) {
        const JetSpace& sp = space(header);
        ProlongedDecl d;
        d.order = sp.order();
        int top = 0;
        bool explicit_order = false;
        for (const auto& l : lines) {
            auto p = split_key(l);
            if (!p) fail(l, "expected 'coordinate: coefficient'");
            if (p->key == "order") {
                d.order = parse_int(l, p->value);
                explicit_order = true;
                continue;
            }
            if (!sp.independent_index(p->key)) {
                auto r = sp.resolve_jet(p->key);
                if (!r) fail(l, "'" + p->key + "' is not a jet coordinate");
                top = std::max(top, r->index.order());
            }
            if (d.coefficients.count(p->key)) fail(l, "duplicate coefficient for " + p->key);
            d.coefficients.emplace(p->key, parse_at(p->value, sp, l.number, p->value_col));
        }
        if (explicit_order && top > d.order) fail(header, "coefficient above the declared order");
        d.order = std::max(d.order, top);
        file_.prolonged.emplace(name, std::move(d));
    }

    void matrix_block(const Line& header, const std::string& name, const std::vector<Line>& lines) {
        const JetSpace& sp = space(header);
        std::vector<std::vector<Expr>> rows;
        for (const auto& l : lines) {
            const std::string_view t = std::string_view(l.text).substr(l.indent);
            if (t.size() < 2 || t.front() != '[' || t.back() != ']') fail(l, "expected a row '[a, b, ...]'");
            std::vector<Expr> row;
            for (const auto& [s, c] : split_top(t.substr(1, t.size() - 2), ',')) {
                if (s.empty()) fail(l, "empty matrix entry", l.indent + 2 + c);
                row.push_back(parse_at(s, sp, l.number, l.indent + 2 + c));
            }
            if (!rows.empty() && row.size() != rows[0].size()) fail(l, "rows differ in length");
            rows.push_back(std::move(row));
        }
        if (rows.empty()) fail(header, "matrix has no rows");
        file_.matrices.emplace(name, MatrixExpr(std::move(rows)));
    }

    void twist_block(const Line& header, const std::string& name, const std::string& kind,
                     const std::vector<Line>& lines) {
        const JetSpace& sp = space(header);
        Twist t;
        std::map<std::string, std::pair<std::string, const Line*>> kv;
        for (const auto& l : lines) {
            auto p = split_key(l);
            if (!p) fail(l, "expected 'key: value'");
            if (!kv.emplace(p->key, std::make_pair(p->value, &l)).second) fail(l, "duplicate key '" + p->key + "'");
        }
        auto matrix_ref = [&](const std::string& key) -> MatrixExpr {
            auto it = kv.find(key);
            if (it == kv.end()) fail(header, "twist needs '" + key + "'");
            auto m = file_.matrices.find(it->second.first);
            if (m == file_.matrices.end())
                fail(*it->second.second, "unknown matrix '" + it->second.first + "'");
            return m->second;
        };
        if (kind == "lambda") {
            t.kind = TwistKind::lambda;
            auto it = kv.find("lambda");
            if (it == kv.end() || kv.size() != 1) fail(header, "lambda twist takes exactly 'lambda: <expr>'");
            const Line& l = *it->second.second;
            t.lambda = parse_at(it->second.first, sp, l.number, split_key(l)->value_col);
        } else if (kind == "mu") {
            t.kind = TwistKind::mu;
            if (kv.size() != sp.q()) fail(header, "mu twist takes one matrix per independent variable");
            for (const auto& x : sp.independents()) t.matrices.push_back(matrix_ref(x));
        } else if (kind == "sigma") {
            t.kind = TwistKind::sigma;
            if (kv.size() != 1) fail(header, "sigma twist takes exactly 'matrix: <name>'");
            t.matrices.push_back(matrix_ref("matrix"));
        } else {
            fail(header, "unknown twist kind '" + kind + "'", word_col(header, 2));
        }
        for (const auto& m : t.matrices)
            if (!m.is_square() || m.rows() != t.matrices[0].rows()) fail(header, "twist matrices must be square and alike");
        file_.twists.emplace(name, std::move(t));
    }

    void equations_block(const Line& header, const std::string& name, const std::vector<Line>& lines) {
        const JetSpace& sp = space(header);
        std::vector<std::pair<JetRef, Expr>> rules;
        for (const auto& l : lines) {
            auto p = split_key(l, '=');
            if (!p) fail(l, "expected 'jet = expression'");
            auto r = sp.resolve_jet(p->key);
            if (!r || r->index.order() == 0) fail(l, "'" + p->key + "' is not a derivative jet");
            rules.emplace_back(*r, parse_at(p->value, sp, l.number, p->value_col));
        }
        guarded(header, [&] { file_.equations.emplace(name, DiffSystem(sp, std::move(rules))); });
    }

    void section_block(const Line& header, const std::string& name, const std::vector<Line>& lines) {
        const JetSpace& sp = space(header);
        std::map<std::string, Expr> values;
        for (const auto& l : lines) {
            auto p = split_key(l, '=');
            if (!p) fail(l, "expected 'dependent = expression'");
            if (!sp.dependent_index(p->key)) fail(l, "'" + p->key + "' is not a dependent variable");
            if (!values.emplace(p->key, parse_at(p->value, sp, l.number, p->value_col)).second)
                fail(l, "duplicate value for " + p->key);
        }
        guarded(header, [&] { file_.sections.emplace(name, Section(sp, std::move(values))); });
    }

    void chain_block(const Line& header, const std::string& name, const std::vector<Line>& lines) {
        const JetSpace& sp = space(header);
        InvariantChain c;
        for (const auto& l : lines) {
            auto p = split_key(l);
            if (!p) fail(l, "expected 'order: expr, expr, ...'");
            const int k = parse_int(l, p->key);
            if (k != static_cast<int>(c.levels.size())) fail(l, "chain levels must be listed as 0, 1, 2, ...");
            std::vector<Expr> level;
            for (const auto& [s, col] : split_top(p->value, ','))
                level.push_back(parse_at(s, sp, l.number, p->value_col + col));
            c.levels.push_back(std::move(level));
        }
        file_.chains.emplace(name, std::move(c));
    }

    void check_ref(const Line& l, std::size_t col, const std::string& name, RefKind kind) {
        auto it = names_.find(name);
        if (it == names_.end()) fail(l, std::string("unknown ") + ref_name(kind) + " '" + name + "'", col);
        if (it->second != kind)
            fail(l, "'" + name + "' is a " + ref_name(it->second) + ", expected a " + ref_name(kind), col);
    }

    void task_block(const Line& header, const std::string& id, const std::string& kind,
                    const std::vector<Line>& lines) {
        const JetSpace& sp = space(header);
        const auto* schema = detail::task_schema(kind);
        if (schema == nullptr) fail(header, "unknown task kind '" + kind + "'", word_col(header, 2));
        if (!task_ids_.insert(id).second) fail(header, "duplicate task id '" + id + "'", word_col(header, 1));
        TaskSpec t;
        t.id = id;
        t.kind = kind;
        t.line = header.number;
        std::vector<std::pair<std::string, RefKind>> outputs;
        for (const auto& l : lines) {
            auto p = split_key(l);
            if (!p) fail(l, "expected 'key: value'");
            auto spec = std::find_if(schema->begin(), schema->end(), [&](const KeySpec& s) { return s.key == p->key; });
            if (spec == schema->end()) fail(l, "task kind '" + kind + "' has no key '" + p->key + "'");
            if (t.keys.count(p->key)) fail(l, "duplicate key '" + p->key + "'");
            switch (spec->type) {
            case KeyType::integer:
                parse_int(l, p->value);
                break;
            case KeyType::word:
                if (!spec->choices.empty() &&
                    std::find(spec->choices.begin(), spec->choices.end(), p->value) == spec->choices.end())
                    fail(l, "invalid value '" + p->value + "' for '" + p->key + "'", p->value_col);
                if (spec->choices.empty() && p->value.empty()) fail(l, "missing value", p->value_col);
                if (p->key == "direction" && !sp.independent_index(p->value))
                    fail(l, "'" + p->value + "' is not an independent variable", p->value_col);
                break;
            case KeyType::expr_list:
                for (const auto& [s, c] : split_top(p->value, ',')) parse_at(s, sp, l.number, p->value_col + c);
                break;
            case KeyType::name:
                check_ref(l, p->value_col, p->value, spec->ref);
                break;
            case KeyType::name_list:
                for (const auto& [s, c] : split_top(p->value, ',')) check_ref(l, p->value_col + c, s, spec->ref);
                break;
            case KeyType::output:
                outputs.emplace_back(p->value, spec->ref);
                break;
            case KeyType::output_list:
                for (const auto& [s, c] : split_top(p->value, ',')) outputs.emplace_back(s, spec->ref);
                break;
            }
            t.keys.emplace(p->key, p->value);
            t.key_lines.emplace(p->key, l.number);
        }
        for (const auto& s : *schema)
            if (s.required && !t.keys.count(s.key)) fail(header, "task '" + id + "' needs '" + s.key + "'");
        for (const auto& [n, k] : outputs) declare(header, word_col(header, 1), n, k);
        file_.tasks.push_back(std::move(t));
    }

    ProblemFile file_;
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    std::map<std::string, RefKind> names_;
    std::set<std::string> task_ids_;
};

}  // namespace

ProblemFile parse_problem(const std::string& text, const std::string& path) {
    return FileParser(text, path).run();
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str(), path);
}

const std::vector<TaskKindInfo>& task_kinds() {
    static const std::vector<TaskKindInfo> kinds = [] {
        const std::vector<std::pair<std::string, std::string>> listing = {
            {"prolong", "standard prolongation of a field"},
            {"mu-prolong", "mu-prolongation by a matrix one-form"},
            {"lambda-prolong", "lambda-prolongation by a scalar"},
            {"sigma-prolong", "joint sigma-prolongation of a set of fields"},
            {"check-symmetry", "prolonged field tangent to a solved-form system"},
            {"check-mc", "horizontal Maurer-Cartan defect of a mu twist"},
            {"gauge-to-mu", "Lambda_i = A^-1 D_i A"},
            {"gauge-to-sigma", "sigma = A^-1 D_x A"},
            {"check-mu-diagram", "A applied to the mu-prolongation against the prolongation of A X"},
            {"check-sigma-diagram", "A applied to the sigma-prolongation against the prolongations of A X"},
            {"check-solution", "section solves a system"},
            {"check-invariant-section", "characteristic of a field vanishes on a section"},
            {"compare-on-sections", "prolonged fields agree on an invariant section"},
            {"check-chain", "invariance of a chain and the IBDP diagnostic"},
            {"ibdp-extend", "next chain level by D_x zeta / D_x eta"},
            {"prolong-combination", "prolongation of f^a X_a and its defect recursion"},
            {"bracket-defect", "brackets of prolongations and their defect recursion"},
            {"check-involution", "brackets close with function coefficients"},
            {"check-lie-algebra", "brackets close with constant coefficients"},
            {"same-distribution", "two sets of prolonged fields span the same distribution"},
            {"evolutionary-rep", "evolutionary representative of a Lie-point field"},
            {"check-evolutionary-rep", "vertical field is an evolutionary representative"},
            {"lai-residual", "D_i A - A Lambda_i"},
        };
        std::vector<TaskKindInfo> out;
        for (const auto& [k, summary] : listing) {
            TaskKindInfo info{k, summary, {}, {}};
            for (const auto& s : *detail::task_schema(k)) (s.required ? info.required : info.optional).push_back(s.key);
            out.push_back(std::move(info));
        }
        return out;
    }();
    return kinds;
}

}  // namespace jetwist
