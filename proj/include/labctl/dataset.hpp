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

#ifndef IEXSIM_LABCTL_DATASET_HPP
#define IEXSIM_LABCTL_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace labctl {

/// Fixed CSV schema (versioned in the manifest):
///   engine,seed,L,T,p_or_nu,realization,layer,observable,value
inline constexpr const char* kCsvHeader = "engine,seed,L,T,p_or_nu,realization,layer,observable,value";
inline constexpr const char* kSchemaVersion = "1";

struct Row {
    std::string engine;
    uint64_t seed = 0;
    int L = 0;
    int T = 0;
    double p_or_nu = 0;
    int realization = 0;
    int layer = 0;
    std::string observable;
    double value = 0;

    bool operator==(const Row&) const = default;
};

/// Shortest round-trip formatting (std::to_chars), so re-runs are byte-identical.
std::string format_double(double v);
std::string to_csv(const Row& row);
Row parse_csv_row(const std::string& line);
std::vector<Row> read_csv(const std::string& path);
void write_csv(const std::string& path, const std::vector<Row>& rows);

}  // namespace labctl

#endif
