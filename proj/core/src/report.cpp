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
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "jetwist/cli.hpp"
#include "jetwist/errors.hpp"

namespace jetwist {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string upper(const char* s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::string seed_text(std::uint64_t seed) {
    std::ostringstream os;
    os << "0x" << std::hex << std::setw(16) << std::setfill('0') << seed;
    return os.str();
}

void indent_block(std::ostringstream& os, const std::string& text, const std::string& pad) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) os << pad << line << '\n';
}

void render_text(std::ostringstream& os, const TaskResult& t, const RunOptions& opts, bool details) {
    os << upper(to_string(t.verdict)) << ' ' << t.id << " (" << t.kind << ')';
    if (opts.timing) os << ' ' << std::fixed << std::setprecision(3) << t.seconds << 's';
    os << '\n';
    const bool failing = t.verdict != Verdict::proven;
    if (!details && !failing) return;
    if (t.expected) os << "  expected " << to_string(*t.expected) << ", computed " << to_string(t.computed) << '\n';
    for (const auto& c : t.checks)
        if (details || c.zero != "proven-zero") os << "  check " << c.label << ": " << c.residual << " [" << c.zero << "]\n";
    for (const auto& n : t.notes) os << "  note: " << n << '\n';
    if (!t.error.empty()) os << "  error: " << t.error << '\n';
    if (details)
        for (const auto& [name, value] : t.outputs) {
            os << "  " << name << ":\n";
            indent_block(os, value, "    ");
        }
}

ordered_json to_json(const TaskResult& t, const RunOptions& opts) {
    ordered_json j;
    j["id"] = t.id;
    j["kind"] = t.kind;
    j["verdict"] = to_string(t.verdict);
    j["computed_verdict"] = to_string(t.computed);
    if (t.expected) j["expected_verdict"] = to_string(*t.expected);
    j["checks"] = ordered_json::array();
    for (const auto& c : t.checks) j["checks"].push_back({{"label", c.label}, {"residual", c.residual}, {"zero", c.zero}});
    j["outputs"] = ordered_json::array();
    for (const auto& [name, value] : t.outputs) j["outputs"].push_back({{"name", name}, {"value", value}});
    j["notes"] = t.notes;
    j["provenance"] = ordered_json::object();
    for (const auto& [k, v] : t.provenance) j["provenance"][k] = v;
    if (!t.error.empty()) j["error"] = t.error;
    if (opts.timing) j["seconds"] = t.seconds;
    return j;
}

}  // namespace

std::string render_report(const std::vector<FileReport>& reports, ReportFormat format, const RunOptions& opts,
                          bool details) {
    std::ostringstream os;
    if (format == ReportFormat::text) {
        for (const auto& r : reports) {
            if (reports.size() > 1) os << "# " << r.file << '\n';
            for (const auto& t : r.tasks) render_text(os, t, opts, details);
        }
        return os.str();
    }
    ordered_json j;
    j["format"] = "jetwist-report";
    j["version"] = 1;
    j["seed"] = seed_text(opts.seed);
    j["allow_probable"] = opts.allow_probable;
    j["files"] = ordered_json::array();
    std::map<std::string, int> counts;
    for (const char* v : {"proven", "disproven", "probable", "not-applicable", "error"}) counts[v] = 0;
    for (const auto& r : reports) {
        ordered_json f;
        f["file"] = r.file;
        f["tasks"] = ordered_json::array();
        for (const auto& t : r.tasks) {
            f["tasks"].push_back(to_json(t, opts));
            ++counts[to_string(t.verdict)];
        }
        j["files"].push_back(std::move(f));
    }
    ordered_json s;
    for (const char* v : {"proven", "disproven", "probable", "not-applicable", "error"}) s[v] = counts[v];
    s["exit_code"] = exit_code(reports, opts);
    j["summary"] = std::move(s);
    os << j.dump(2) << '\n';
    return os.str();
}

std::vector<FileReport> parse_structured_report(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.at("format").get<std::string>() != "jetwist-report") throw ParseError("not a jetwist report", 1, 1);
        std::vector<FileReport> out;
        for (const auto& f : j.at("files")) {
            FileReport r;
            r.file = f.at("file").get<std::string>();
            for (const auto& tj : f.at("tasks")) {
                TaskResult t;
                t.id = tj.at("id").get<std::string>();
                t.kind = tj.at("kind").get<std::string>();
                t.verdict = verdict_from_string(tj.at("verdict").get<std::string>());
                t.computed = verdict_from_string(tj.at("computed_verdict").get<std::string>());
                if (tj.contains("expected_verdict"))
                    t.expected = verdict_from_string(tj.at("expected_verdict").get<std::string>());
                for (const auto& c : tj.at("checks"))
                    t.checks.push_back({c.at("label").get<std::string>(), c.at("residual").get<std::string>(),
                                        c.at("zero").get<std::string>()});
                for (const auto& o : tj.at("outputs"))
                    t.outputs.emplace_back(o.at("name").get<std::string>(), o.at("value").get<std::string>());
                t.notes = tj.at("notes").get<std::vector<std::string>>();
                t.provenance = tj.at("provenance").get<std::map<std::string, std::string>>();
                if (tj.contains("error")) t.error = tj.at("error").get<std::string>();
                if (tj.contains("seconds")) t.seconds = tj.at("seconds").get<double>();
                r.tasks.push_back(std::move(t));
            }
            out.push_back(std::move(r));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what(), 1, 1);
    }
}

}  // namespace jetwist
