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

#include "stabcore/circuit_spec.hpp"

#include <sstream>
#include <stdexcept>

namespace stabcore {

void CircuitSpec::validate(bool allow_odd_l) const {
    if (L < 2) throw std::invalid_argument("CircuitSpec: L must be >= 2");
    if (!allow_odd_l && L % 2 != 0) throw std::invalid_argument("CircuitSpec: L must be even");
    if (T < 0) throw std::invalid_argument("CircuitSpec: T must be >= 0");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("CircuitSpec: p must lie in [0, 1]");
    if (partition.es_sites < 0 || partition.gap_sites < 0 || partition.ps_sites < 0) {
        throw std::invalid_argument("CircuitSpec: partition sizes must be nonnegative");
    }
    if (partition.es_sites + partition.gap_sites + partition.ps_sites > L) {
        throw std::invalid_argument("CircuitSpec: |E_S| + gap + |P_S| exceeds L");
    }
    if (measure_stride < 0) throw std::invalid_argument("CircuitSpec: measure_stride must be >= 0");
}

const char* to_string(GateFamily v) {
    return v == GateFamily::clifford2_uniform ? "clifford2_uniform" : "haar2";
}
const char* to_string(SystemInit v) {
    return v == SystemInit::pure_zero ? "pure_zero" : "mixed_via_reference";
}
const char* to_string(ApparatusInit v) {
    return v == ApparatusInit::pure_zero ? "pure_zero" : "bell_with_copy";
}
const char* to_string(EnvInit v) {
    return v == EnvInit::pure_zero ? "pure_zero" : "maximally_mixed";
}

std::string CircuitSpec::canonical_string() const {
    std::ostringstream out;
    out.precision(17);
    out << "L=" << L << ";T=" << T << ";p=" << p << ";gates=" << to_string(gate_family)
        << ";sys=" << to_string(initial_system) << ";app=" << to_string(apparatus_init)
        << ";env=" << to_string(env_init) << ";seed=" << master_seed << ";es=" << partition.es_sites
        << ";gap=" << partition.gap_sites << ";ps=" << partition.ps_sites
        << ";stride=" << measure_stride;
    return out.str();
}

uint64_t CircuitSpec::hash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : canonical_string()) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace stabcore
