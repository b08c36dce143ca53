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

#ifndef JETWIST_CLI_HPP
#define JETWIST_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetwist/invariants.hpp"
#include "jetwist/matrix.hpp"
#include "jetwist/symcheck.hpp"
#include "jetwist/vfield.hpp"

namespace jetwist {

enum class TwistKind : std::uint8_t { lambda, mu, sigma };

const char* to_string(TwistKind k) noexcept;

/// A named twist: lambda holds the scalar, matrices holds one Lambda_i per
/// independent variable (mu) or the single sigma.
struct Twist {
    TwistKind kind = TwistKind::lambda;
    Expr lambda;
    std::vector<MatrixExpr> matrices;
};

/// Coefficients of a prolonged field as written in a file, keyed by
/// coordinate name. Absent coordinates are zero.
struct ProlongedDecl {
    int order = 0;
    std::map<std::string, Expr> coefficients;
};

struct TaskSpec {
    std::string id;
    std::string kind;
    std::size_t line = 0;
    std::map<std::string, std::string> keys;
    std::map<std::string, std::size_t> key_lines;
};

/// A parsed problem file. Names share one namespace across block kinds.
struct ProblemFile {
    std::string path;
    std::optional<JetSpace> space;
    std::map<std::string, VectorField> fields;
    std::map<std::string, ProlongedDecl> prolonged;
    std::map<std::string, MatrixExpr> matrices;
    std::map<std::string, Twist> twists;
    std::map<std::string, DiffSystem> equations;
    std::map<std::string, Section> sections;
    std::map<std::string, InvariantChain> chains;
    std::vector<TaskSpec> tasks;
};

/// Parses problem-file text. Throws ParseError with the file line and column
/// for syntax errors, unknown task kinds and unresolved names.
ProblemFile parse_problem(const std::string& text, const std::string& path = "<input>");
ProblemFile load_problem(const std::string& path);

struct TaskKindInfo {
    std::string kind;
    std::string summary;
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

/// Every task kind the runner accepts, in listing order.
const std::vector<TaskKindInfo>& task_kinds();

struct CheckSummary {
    std::string label;
    std::string residual;
    std::string zero;
};

struct TaskResult {
    std::string id;
    std::string kind;
    Verdict verdict = Verdict::proven;
    Verdict computed = Verdict::proven;     // before comparison with an expected verdict
    std::optional<Verdict> expected;
    std::vector<CheckSummary> checks;
    std::vector<std::pair<std::string, std::string>> outputs;
    std::vector<std::string> notes;
    std::map<std::string, std::string> provenance;
    std::string error;
    double seconds = 0.0;
};

struct FileReport {
    std::string file;
    std::vector<TaskResult> tasks;
};

struct RunOptions {
    std::uint64_t seed = ProbeOptions{}.seed;
    bool allow_probable = false;
    int max_order = 16;
    bool timing = false;
};

/// Runs the tasks of a parsed file in declared order.
FileReport run_problem(const ProblemFile& file, const RunOptions& opts);

/// 0 when every verdict is proven (or probable with allow_probable), else 1.
int exit_code(const std::vector<FileReport>& reports, const RunOptions& opts);

enum class ReportFormat : std::uint8_t { text, structured };

/// details adds every check and output to the text format.
std::string render_report(const std::vector<FileReport>& reports, ReportFormat format, const RunOptions& opts,
                          bool details = false);

/// Reads a structured report back. Throws ParseError on malformed input.
std::vector<FileReport> parse_structured_report(const std::string& text);

/// Loads, runs and reports each path. Returns the process exit code
/// (0 success, 1 verification failure, 2 parse or usage error); parse errors
/// go to err as "path:line:column: message".
int run_files(const std::vector<std::string>& paths, const RunOptions& opts, ReportFormat format, bool details,
              std::ostream& out, std::ostream& err);

}  // namespace jetwist

#endif
