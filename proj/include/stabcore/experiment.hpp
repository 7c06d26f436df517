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

#ifndef IEXSIM_STABCORE_EXPERIMENT_HPP
#define IEXSIM_STABCORE_EXPERIMENT_HPP

#include <array>
#include <string>
#include <vector>

#include "stabcore/circuit_spec.hpp"
#include "stabcore/tableau.hpp"

namespace stabcore {

/// A running brickwork noisy-transduction realization. Transduction swaps are
/// realized as column relabelings: the fresh qubit takes over the system slot
/// and the old system column moves to the apparatus/environment role.
class Experiment {
  public:
    explicit Experiment(const CircuitSpec& spec);

    const CircuitSpec& spec() const { return spec_; }
    const StabTableau& tableau() const { return tab_; }
    StabTableau& tableau() { return tab_; }
    int layers_done() const { return t_; }
    int transduction_events() const { return events_; }

    /// One full layer: brick unitaries (periodic) then the probe layer.
    void step();
    /// The two halves of a layer, exposed separately (same draws as step()).
    void apply_brick_layer(int t);
    void apply_probe_layer(int t);

    // region builders (tableau column lists)
    std::vector<int> system_cols() const;
    std::vector<int> site_cols(int first_site, int count) const;  // both species per site
    const std::vector<int>& apparatus_cols() const { return app_; }
    const std::vector<int>& environment_cols() const { return env_; }
    const std::vector<int>& reference_cols() const { return ref_; }

    int entropy(std::vector<int> cols) const;  // bits, min-side rank

  private:
    void apply_brick(int t, int x);
    void transduce(int t, int x);

    CircuitSpec spec_;
    StabTableau tab_;
    std::vector<std::array<int, 2>> sys_;  // per site: {a column, b column}
    std::vector<int> ref_, app_, env_;
    int t_ = 0;
    int events_ = 0;
};

/// O = I(P_S : E_S | A) in bits; requires pure_zero system init and |P_S| > L/2.
int order_parameter_O(const Experiment& e);

/// C(S' > S u A) = S(S u A) - S(A); requires mixed_via_reference init.
int coherent_information(const Experiment& e);

/// S(P_S u A) - S(A) - [S(P_S u E) - S(E)]: zero exactly when IE symmetry holds.
int ie_deviation(const Experiment& e);

struct TrajectoryRecord {
    uint64_t spec_hash = 0;
    struct Sample {
        int layer;
        std::string name;
        std::string partition;
        long value;  // bits (integer for stabilizer states)
        bool operator==(const Sample&) const = default;
    };
    std::vector<Sample> samples;
    std::string to_jsonl() const;
    bool operator==(const TrajectoryRecord&) const = default;
};

/// Runs T layers sampling the observables valid for the spec's initialization
/// at the configured stride (stride 0: final layer only). Deterministic.
TrajectoryRecord run_trajectory(const CircuitSpec& spec);

}  // namespace stabcore

#endif
