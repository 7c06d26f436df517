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

#ifndef IEXSIM_LABCTL_SWEEP_HPP
#define IEXSIM_LABCTL_SWEEP_HPP

#include <string>

#include "labctl/config.hpp"
#include "labctl/dataset.hpp"

namespace labctl {

struct SweepResult {
    std::string dataset_csv;
    std::string records_jsonl;
    std::string manifest_path;
    int units_executed = 0;
    int units_skipped = 0;  // already present from an earlier (interrupted) run
    bool merged = false;
};

/// Executes the sweep: one work unit per (point, realization), each written to
/// its own file and merged in deterministic order, so outputs are byte-stable
/// across re-runs and thread counts. Completed units found on disk are not
/// redone. `max_units` > 0 stops early without merging (for resume testing).
SweepResult run_sweep(const SweepConfig& cfg, int num_threads = 1, int max_units = -1);

/// The rows a single unit produces (also used by the verify suite).
std::vector<Row> run_unit(const SweepConfig& cfg, int point_index, int realization,
                          std::string* jsonl_line);

}  // namespace labctl

#endif
