/*
   Copyright 2026 The nullcone Authors

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

#include <fstream>
#include <iostream>

#include "nullcone/cli.hpp"

int main(int argc, char** argv) {
    using namespace nullcone::cli;
    JobSpec job;
    try {
        job = parse_job(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        CLI::App app{"nullcone"};
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json doc{{"version", kVersion}, {"job", json::object()}, {"results", json::object()},
                 {"timings_ms", json{{"total", 0}}}, {"status", "error"}, {"error", e.what()}};
        std::cout << doc.dump(2) << '\n';
        return 1;
    } catch (const std::exception& e) {
        json doc{{"version", kVersion}, {"job", json::object()}, {"results", json::object()},
                 {"timings_ms", json{{"total", 0}}}, {"status", "error"}, {"error", e.what()}};
        std::cout << doc.dump(2) << '\n';
        return 1;
    }
    ReportDocument report = run(job);
    std::string text = report.to_json().dump(2) + "\n";
    if (job.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(job.out);
        if (!(f << text)) {
            std::cerr << "cannot write " << job.out << '\n';
            return 1;
        }
    }
    return report.exit_code();
}
