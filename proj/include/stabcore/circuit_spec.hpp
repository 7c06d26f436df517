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

#ifndef IEXSIM_STABCORE_CIRCUIT_SPEC_HPP
#define IEXSIM_STABCORE_CIRCUIT_SPEC_HPP

#include <cstdint>
#include <string>

#include "core/rng.hpp"

namespace stabcore {

enum class GateFamily { clifford2_uniform, haar2 };
enum class SystemInit { pure_zero, mixed_via_reference };
enum class ApparatusInit { pure_zero, bell_with_copy };
enum class EnvInit { pure_zero, maximally_mixed };

/// Probe geometry on the periodic chain: E_S = sites [0, es), P_S = the
/// ps sites starting at es + gap. Any leftover sites sit after P_S and act as
/// the second separating buffer, so E_S and P_S never touch around the wrap.
struct PartitionSpec {
    int es_sites = 0;
    int gap_sites = 0;
    int ps_sites = 0;
    int ps_first(int total_sites) const {
        (void)total_sites;
        return es_sites + gap_sites;
    }
};

/// Full description of one brickwork noisy-transduction realization. All
/// randomness (gate draws and eta draws) is a pure function of master_seed and
/// the space-time coordinate, so any engine replays the identical circuit.
struct CircuitSpec {
    int L = 2;          // sites; each site carries an (a, b) qubit pair
    int T = 0;          // brick layers
    double p = 0.0;     // per-site noisy-transduction probability
    GateFamily gate_family = GateFamily::clifford2_uniform;
    SystemInit initial_system = SystemInit::pure_zero;
    ApparatusInit apparatus_init = ApparatusInit::pure_zero;
    EnvInit env_init = EnvInit::pure_zero;
    uint64_t master_seed = 0;
    PartitionSpec partition;
    int measure_stride = 1;  // layers between observable samples

    /// Stabilizer engine rules; `allow_odd_l` relaxes the brickwork L-even
    /// requirement (the dense engine accepts odd L with sequential bricks).
    void validate(bool allow_odd_l = false) const;

    /// Bernoulli(p) transduction draw for site x after layer t.
    bool eta(int t, int x) const {
        core::Rng rng(core::derive(master_seed, "eta", static_cast<uint64_t>(t), static_cast<uint64_t>(x)));
        return rng.next_bernoulli(p);
    }
    /// One gate stream per brick; the brick's four applications share it.
    uint64_t gate_seed(int t, int x) const {
        return core::derive(master_seed, "gate", static_cast<uint64_t>(t), static_cast<uint64_t>(x));
    }

    std::string canonical_string() const;
    uint64_t hash() const;

    bool operator==(const CircuitSpec&) const = default;
};

const char* to_string(GateFamily v);
const char* to_string(SystemInit v);
const char* to_string(ApparatusInit v);
const char* to_string(EnvInit v);

}  // namespace stabcore

#endif
