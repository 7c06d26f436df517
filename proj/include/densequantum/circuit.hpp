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

#ifndef IEXSIM_DENSEQUANTUM_CIRCUIT_HPP
#define IEXSIM_DENSEQUANTUM_CIRCUIT_HPP

#include <array>
#include <vector>

#include "densequantum/dense_state.hpp"
#include "stabcore/circuit_spec.hpp"

namespace densequantum {

/// Probe dilations of the Markovian experiment, applied as explicit unitaries
/// on fresh qubits. Single-qubit-site probes reject doubled sites and vice
/// versa (the "incompatible with register roles" error path).
enum class ProbeKind { projective_measurement, transduction, erasure_dual, noisy_transduction };

/// `bell_apparatus` switches the transduction apparatus init from maximally
/// mixed (purified by E_a) to a Bell pair with the record copy A_c.
void apply_probe(DenseState& st, ProbeKind kind, int site, bool bell_apparatus = false);

/// Small probe experiment on single-qubit sites: `rounds` of Haar unitaries
/// followed by probes at each site with probability probe_prob. The system
/// starts in |0...0>, or maximally entangled with an S' reference.
struct ProbeExperimentSpec {
    int sites = 1;
    int rounds = 1;
    double probe_prob = 1.0;
    ProbeKind kind = ProbeKind::projective_measurement;
    bool bell_apparatus = false;
    bool with_reference = false;
    uint64_t seed = 0;
};
DenseState run_probe_experiment(const ProbeExperimentSpec& spec);

/// Dense replay of the brickwork noisy-transduction experiment. Uses the same
/// (master_seed, layer, site) streams as the stabilizer engine, the same
/// one-matrix-per-brick rule, and the same swap-as-relabel bookkeeping, so a
/// clifford2_uniform spec produces the identical state in both engines.
class DenseCircuit {
  public:
    /// `single_transduction` replaces the probe with the one-qubit transduction
    /// of the a species (maximally mixed apparatus) — the IE counterexample.
    enum class ProbeMode { noisy_transduction, single_transduction };

    explicit DenseCircuit(const stabcore::CircuitSpec& spec,
                          ProbeMode mode = ProbeMode::noisy_transduction);

    void step();
    void apply_brick_layer(int t);
    void apply_probe_layer(int t);

    const stabcore::CircuitSpec& spec() const { return spec_; }
    DenseState& state() { return st_; }
    const DenseState& state() const { return st_; }
    int transduction_events() const { return events_; }

    std::vector<int> system_qubits() const;
    std::vector<int> site_qubits(int first_site, int count) const;
    const std::vector<int>& apparatus() const { return app_; }
    const std::vector<int>& environment() const { return env_; }
    const std::vector<int>& reference() const { return ref_; }

    /// Total qubits this spec will ever allocate (for capacity pre-checks).
    static int qubit_budget(const stabcore::CircuitSpec& spec, ProbeMode mode);

  private:
    void apply_brick(int t, int x);
    void transduce(int t, int x);

    stabcore::CircuitSpec spec_;
    ProbeMode mode_;
    DenseState st_;
    std::vector<std::array<int, 2>> sys_;
    std::vector<int> ref_, app_, env_;
    int t_ = 0;
    int events_ = 0;
};

/// |U_T> (mixed_via_reference) or |U_T(psi)> (pure_zero) after all T layers.
DenseState run_circuit_dense(const stabcore::CircuitSpec& spec);

}  // namespace densequantum

#endif
