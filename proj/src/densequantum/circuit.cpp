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

#include "densequantum/circuit.hpp"

#include "densequantum/haar.hpp"
#include "stabcore/clifford2.hpp"

namespace densequantum {

namespace {

Eigen::Matrix4cd clifford_matrix(const stabcore::Clifford2& g) {
    auto arr = g.to_matrix();  // row-major
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) m(i, j) = arr[i * 4 + j];
    }
    return m;
}

void make_bell(DenseState& st, int a, int b) {
    st.apply_h(a);
    st.apply_cnot(a, b);
}

}  // namespace

void apply_probe(DenseState& st, ProbeKind kind, int site, bool bell_apparatus) {
    auto qs = st.reg().site_indices(site);  // throws if the site does not exist
    const bool doubled = qs.size() == 2;
    if (kind == ProbeKind::noisy_transduction) {
        if (!doubled) {
            throw std::invalid_argument("apply_probe: noisy transduction needs an (a,b) site pair");
        }
        int e = st.add_qubit({Role::E, -1, -1});
        int a = st.add_qubit({Role::A, -1, -1});
        st.apply_swap(qs[0], e);
        st.apply_swap(qs[1], a);
        return;
    }
    if (doubled) {
        throw std::invalid_argument("apply_probe: single-qubit probe applied to a doubled site");
    }
    const int q = qs[0];
    switch (kind) {
        case ProbeKind::projective_measurement: {
            int a = st.add_qubit({Role::A, -1, -1});
            int e = st.add_qubit({Role::E, -1, -1});
            st.apply_cnot(q, a);
            st.apply_cnot(q, e);
            break;
        }
        case ProbeKind::transduction: {
            // apparatus initially maximally mixed (purified by E_a), or
            // Bell-paired with the record copy A_c when bell_apparatus is set
            int a = st.add_qubit({Role::A, -1, -1});
            int pur = st.add_qubit({bell_apparatus ? Role::Ac : Role::Ea, -1, -1});
            make_bell(st, a, pur);
            st.apply_swap(q, a);
            break;
        }
        case ProbeKind::erasure_dual: {
            // ejected qubit is erased; injected one is entangled with A_c
            int f = st.add_qubit({Role::E, -1, -1});
            int c = st.add_qubit({Role::Ac, -1, -1});
            make_bell(st, f, c);
            st.apply_swap(q, f);
            break;
        }
        default:
            break;
    }
}

DenseState run_probe_experiment(const ProbeExperimentSpec& spec) {
    Register reg;
    for (int x = 0; x < spec.sites; ++x) reg.add({Role::S, x, -1});
    DenseState st(reg);
    std::vector<int> sys(spec.sites);
    for (int x = 0; x < spec.sites; ++x) sys[x] = x;
    if (spec.with_reference) {
        for (int x = 0; x < spec.sites; ++x) {
            int r = st.add_qubit({Role::Sp, x, -1});
            make_bell(st, sys[x], r);
        }
    }
    core::Rng rng(core::derive(spec.seed, "probe-experiment"));
    for (int round = 0; round < spec.rounds; ++round) {
        if (spec.sites == 1) {
            st.apply_1q(sys[0], haar_unitary(2, rng));
        } else if (spec.sites == 2) {
            st.apply_2q(sys[0], sys[1], haar_unitary(4, rng));
        } else {
            for (int x = round % 2; x < spec.sites; x += 2) {
                st.apply_2q(sys[x], sys[(x + 1) % spec.sites], haar_unitary(4, rng));
            }
        }
        for (int x = 0; x < spec.sites; ++x) {
            if (rng.next_double() < spec.probe_prob) {
                apply_probe(st, spec.kind, x, spec.bell_apparatus);
            }
        }
    }
    st.assert_normalized();
    return st;
}

DenseCircuit::DenseCircuit(const stabcore::CircuitSpec& spec, ProbeMode mode)
    : spec_(spec), mode_(mode) {
    spec_.validate(/*allow_odd_l=*/true);
    if (qubit_budget(spec_, mode_) > kMaxDenseQubits) {
        throw capacity_error("DenseCircuit: spec may exceed the dense qubit cap");
    }
    Register reg;
    for (int x = 0; x < spec_.L; ++x) {
        reg.add({Role::S, x, 0});
        reg.add({Role::S, x, 1});
    }
    st_ = DenseState(reg);
    sys_.resize(spec_.L);
    for (int x = 0; x < spec_.L; ++x) sys_[x] = {2 * x, 2 * x + 1};
    if (spec_.initial_system == stabcore::SystemInit::mixed_via_reference) {
        for (int x = 0; x < spec_.L; ++x) {
            for (int a = 0; a < 2; ++a) {
                int r = st_.add_qubit({Role::Sp, x, a});
                make_bell(st_, sys_[x][a], r);
                ref_.push_back(r);
            }
        }
    }
}

int DenseCircuit::qubit_budget(const stabcore::CircuitSpec& spec, ProbeMode mode) {
    int events = 0;
    for (int t = 0; t < spec.T; ++t) {
        for (int x = 0; x < spec.L; ++x) {
            if (spec.eta(t, x)) ++events;
        }
    }
    int per_event;
    if (mode == ProbeMode::single_transduction) {
        per_event = 2;
    } else {
        per_event = 2 + (spec.env_init == stabcore::EnvInit::maximally_mixed ? 1 : 0) +
                    (spec.apparatus_init == stabcore::ApparatusInit::bell_with_copy ? 1 : 0);
    }
    int base = 2 * spec.L;
    if (spec.initial_system == stabcore::SystemInit::mixed_via_reference) base *= 2;
    return base + per_event * events;
}

void DenseCircuit::apply_brick(int t, int x) {
    const int y = (x + 1) % spec_.L;
    if (y == x) return;
    core::Rng rng(spec_.gate_seed(t, x));
    Eigen::Matrix4cd m;
    if (spec_.gate_family == stabcore::GateFamily::clifford2_uniform) {
        m = clifford_matrix(stabcore::random_clifford2(rng));
    } else {
        m = haar_unitary(4, rng);
    }
    // same-species layer then cross-species layer, as in the stabilizer engine
    st_.apply_2q(sys_[x][0], sys_[y][0], m);
    st_.apply_2q(sys_[x][1], sys_[y][1], m);
    st_.apply_2q(sys_[x][1], sys_[y][0], m);
    st_.apply_2q(sys_[x][0], sys_[y][1], m);
}

void DenseCircuit::transduce(int t, int x) {
    (void)t;
    ++events_;
    Register& reg = st_.reg();
    if (mode_ == ProbeMode::single_transduction) {
        int a = st_.add_qubit({Role::A, -1, -1});
        int pur = st_.add_qubit({Role::Ea, -1, -1});
        make_bell(st_, a, pur);
        // relabel the swap: the old a-species qubit becomes the apparatus qubit
        int old_a = sys_[x][0];
        reg.info(old_a) = {Role::A, -1, -1};
        reg.info(a) = {Role::S, x, 0};
        app_.push_back(old_a);
        env_.push_back(pur);
        sys_[x][0] = a;
        return;
    }
    int fresh_e, fresh_a;
    if (spec_.env_init == stabcore::EnvInit::maximally_mixed) {
        fresh_e = st_.add_qubit({Role::S, x, 0});
        int pur = st_.add_qubit({Role::Ee, -1, -1});
        make_bell(st_, fresh_e, pur);
        env_.push_back(pur);
    } else {
        fresh_e = st_.add_qubit({Role::S, x, 0});
    }
    if (spec_.apparatus_init == stabcore::ApparatusInit::bell_with_copy) {
        fresh_a = st_.add_qubit({Role::S, x, 1});
        int copy = st_.add_qubit({Role::Ac, -1, -1});
        make_bell(st_, fresh_a, copy);
        app_.push_back(copy);
    } else {
        fresh_a = st_.add_qubit({Role::S, x, 1});
    }
    int old_a = sys_[x][0], old_b = sys_[x][1];
    reg.info(old_a) = {Role::E, -1, -1};
    reg.info(old_b) = {Role::A, -1, -1};
    env_.push_back(old_a);
    app_.push_back(old_b);
    sys_[x][0] = fresh_e;
    sys_[x][1] = fresh_a;
}

void DenseCircuit::apply_brick_layer(int t) {
    for (int x = (t % 2 == 0) ? 0 : 1; x < spec_.L; x += 2) apply_brick(t, x);
}

void DenseCircuit::apply_probe_layer(int t) {
    for (int x = 0; x < spec_.L; ++x) {
        if (spec_.eta(t, x)) transduce(t, x);
    }
}

void DenseCircuit::step() {
    apply_brick_layer(t_);
    apply_probe_layer(t_);
    ++t_;
}

std::vector<int> DenseCircuit::system_qubits() const {
    std::vector<int> out;
    out.reserve(2 * sys_.size());
    for (const auto& s : sys_) {
        out.push_back(s[0]);
        out.push_back(s[1]);
    }
    return out;
}

std::vector<int> DenseCircuit::site_qubits(int first_site, int count) const {
    std::vector<int> out;
    out.reserve(2 * count);
    for (int x = first_site; x < first_site + count; ++x) {
        out.push_back(sys_[x][0]);
        out.push_back(sys_[x][1]);
    }
    return out;
}

DenseState run_circuit_dense(const stabcore::CircuitSpec& spec) {
    DenseCircuit c(spec);
    for (int t = 0; t < spec.T; ++t) c.step();
    c.state().assert_normalized();
    return std::move(c.state());
}

}  // namespace densequantum
