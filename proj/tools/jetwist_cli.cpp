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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jetwist/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"jetwist: standard and twisted prolongations, checked exactly"};
    std::vector<std::string> paths;
    std::string format = "text";
    std::uint64_t seed = jetwist::RunOptions{}.seed;
    jetwist::RunOptions opts;
    bool list = false;
    bool details = false;
    app.add_option("files", paths, "problem files");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", seed, "seed for randomized zero probes");
    app.add_flag("--allow-probable", opts.allow_probable, "accept probable verdicts as success");
    app.add_option("--max-order", opts.max_order, "largest jet order a task may use")->check(CLI::Range(0, 64));
    app.add_flag("--list-tasks", list, "list task kinds and exit");
    app.add_flag("--details", details, "print every check and output in text reports");
    app.add_flag("--timing", opts.timing, "include wall time per task");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (list) {
        for (const auto& k : jetwist::task_kinds()) {
            std::cout << k.kind << "  " << k.summary << "\n    required:";
            for (const auto& r : k.required) std::cout << ' ' << r;
            std::cout << "\n    optional:";
            for (const auto& o : k.optional) std::cout << ' ' << o;
            std::cout << '\n';
        }
        return 0;
    }
    if (paths.empty()) {
        std::cerr << "no input files\n" << app.help();
        return 2;
    }
    opts.seed = seed;
    const auto fmt = format == "structured" ? jetwist::ReportFormat::structured : jetwist::ReportFormat::text;
    return jetwist::run_files(paths, opts, fmt, details, std::cout, std::cerr);
}
