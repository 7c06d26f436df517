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

#ifndef IEXSIM_LABCTL_CONFIG_HPP
#define IEXSIM_LABCTL_CONFIG_HPP

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "pottsrbc/lattice.hpp"
#include "stabcore/circuit_spec.hpp"

namespace labctl {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Engine { stab, dense, potts };

/// One sweep: engine x (p or nu grid) x sizes x realizations. JSON format
/// documented in the README; unknown keys, type errors and range errors are
/// rejected with the offending key named.
struct SweepConfig {
    Engine engine = Engine::stab;
    stabcore::CircuitSpec base;     // stab/dense template (L, T overridden per point)
    pottsrbc::RbcParams potts;      // potts template (nu overridden per point)
    int potts_h = 1;
    std::vector<double> values;     // swept p (stab/dense) or nu (potts)
    std::vector<int> sizes;         // L (sites) or W (brick columns)
    std::vector<int> times;         // optional; empty = 2L (stab/dense), W (potts)
    int realizations = 1;
    uint64_t master_seed = 0;
    std::vector<std::string> observables;  // empty = everything the engine emits
    std::string output_dir;

    void validate() const;
    bool operator==(const SweepConfig&) const = default;
};

SweepConfig parse_config_json(const nlohmann::json& j);
SweepConfig parse_config(const std::string& path);
nlohmann::json to_json(const SweepConfig& cfg);

const char* to_string(Engine e);

}  // namespace labctl

#endif
