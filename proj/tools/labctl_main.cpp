// Copyright 2026 The iexsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "labctl/analyze.hpp"
#include "labctl/config.hpp"
#include "labctl/stats.hpp"
#include "labctl/sweep.hpp"
#include "labctl/verify.hpp"
#include "permrep/json_export.hpp"

namespace {

// Relative output paths are rooted at $LABCTL_OUT when it is set.
std::string resolve_output(const std::string& dir) {
    const char* root = std::getenv("LABCTL_OUT");
    if (!root || dir.empty() || std::filesystem::path(dir).is_absolute()) return dir;
    return (std::filesystem::path(root) / dir).string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monitored-circuit information-exchange experiments"};
    app.require_subcommand(1);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "run a seeded parameter sweep from a config file");
    std::string config_path;
    int threads = 1;
    int max_units = -1;
    sweep->add_option("config", config_path, "JSON sweep config")->required();
    sweep->add_option("--threads", threads, "worker threads (output is thread-count independent)");
    sweep->add_option("--max-units", max_units, "stop after this many units (resume later)");

    // ---- analyze ----
    auto* analyze = app.add_subcommand("analyze", "finite-size crossing analysis of a dataset");
    std::string dataset_path, observable;
    std::vector<int> sizes;
    bool with_collapse = false;
    uint64_t analyze_seed = 0;
    bool as_json = false;
    analyze->add_option("dataset", dataset_path, "dataset.csv from a sweep")->required();
    analyze->add_option("--observable", observable, "observable column to analyze")->required();
    analyze->add_option("--sizes", sizes, "system sizes to cross")->required();
    analyze->add_flag("--collapse", with_collapse, "also fit a data collapse exponent");
    analyze->add_option("--seed", analyze_seed, "bootstrap seed");
    analyze->add_flag("--json", as_json, "print the fit as JSON");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the cross-module invariant/oracle suite");
    bool quick = false;
    verify->add_flag("--quick", quick, "smaller instances");

    // ---- tables ----
    auto* tables = app.add_subcommand("tables", "emit exact permutation-calculus tables as JSON");
    std::vector<int> wg_spec;
    int wplus_n = 0;
    std::string out_path;
    tables->add_option("--weingarten", wg_spec, "d n: Weingarten table for dimension d, copies n")
        ->expected(2);
    tables->add_option("--wplus", wplus_n, "n: the W+ subset and h(n)");
    tables->add_option("-o,--output", out_path, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep) {
            labctl::SweepConfig cfg = labctl::parse_config(config_path);
            cfg.output_dir = resolve_output(cfg.output_dir);
            labctl::SweepResult res = labctl::run_sweep(cfg, threads, max_units);
            std::cout << "units executed: " << res.units_executed
                      << ", skipped (already done): " << res.units_skipped << "\n";
            if (res.merged) {
                std::cout << "dataset: " << res.dataset_csv << "\n"
                          << "records: " << res.records_jsonl << "\n"
                          << "manifest: " << res.manifest_path << "\n";
            } else {
                std::cout << "sweep interrupted before completion; re-run to resume\n";
            }
            return 0;
        }
        if (*analyze) {
            auto rows = labctl::read_csv(dataset_path);
            labctl::CollapseFit fit =
                labctl::crossing_analysis(rows, observable, sizes, with_collapse, analyze_seed);
            if (as_json) {
                nlohmann::json j{{"found", fit.found},
                                 {"critical_value", fit.critical_value},
                                 {"error", fit.error},
                                 {"spread", fit.spread},
                                 {"pairwise", fit.pairwise}};
                if (fit.collapse_valid) {
                    j["exponent"] = fit.exponent;
                    j["objective"] = fit.objective;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << observable << ": " << fit.summary() << "\n";
            }
            return 0;
        }
        if (*verify) {
            int failures = labctl::run_verify(std::cout, quick);
            return failures == 0 ? 0 : 2;
        }
        if (*tables) {
            nlohmann::json out = nlohmann::json::object();
            if (!wg_spec.empty()) {
                out["weingarten"] =
                    permrep::weingarten_to_json(permrep::weingarten_table(wg_spec[0], wg_spec[1]));
            }
            if (wplus_n > 0) out["w_plus"] = permrep::w_plus_to_json(wplus_n);
            if (out.empty()) {
                std::cerr << "tables: nothing requested (use --weingarten or --wplus)\n";
                return 1;
            }
            if (out_path.empty()) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::ofstream f(out_path);
                f << out.dump(2) << "\n";
                std::cout << "wrote " << out_path << "\n";
            }
            return 0;
        }
    } catch (const labctl::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
