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

#include "stabcore/experiment.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stabcore {

Experiment::Experiment(const CircuitSpec& spec) : spec_(spec), tab_(0) {
    spec_.validate();
    sys_.resize(spec_.L);
    for (int x = 0; x < spec_.L; ++x) {
        sys_[x][0] = tab_.add_zero_qubit();
        sys_[x][1] = tab_.add_zero_qubit();
    }
    if (spec_.initial_system == SystemInit::mixed_via_reference) {
        for (int x = 0; x < spec_.L; ++x) {
            for (int a = 0; a < 2; ++a) {
                int r = tab_.add_zero_qubit();
                tab_.apply_h(sys_[x][a]);
                tab_.apply_cnot(sys_[x][a], r);
                ref_.push_back(r);
            }
        }
    }
}

void Experiment::apply_brick(int t, int x) {
    const int L = spec_.L;
    const int y = (x + 1) % L;
    core::Rng rng(spec_.gate_seed(t, x));
    Clifford2 g = random_clifford2(rng);
    // Same-species layer then cross-species layer; within a layer the gates act
    // on disjoint qubits, which makes the whole brick commute with the a/b swap.
    tab_.apply_clifford2(g, sys_[x][0], sys_[y][0]);
    tab_.apply_clifford2(g, sys_[x][1], sys_[y][1]);
    tab_.apply_clifford2(g, sys_[x][1], sys_[y][0]);
    tab_.apply_clifford2(g, sys_[x][0], sys_[y][1]);
}

void Experiment::transduce(int t, int x) {
    (void)t;
    ++events_;
    // a qubit -> environment, b qubit -> apparatus; swaps become relabelings
    int fresh_e, fresh_a;
    if (spec_.env_init == EnvInit::maximally_mixed) {
        auto [e, pur] = tab_.add_bell_pair();
        fresh_e = e;
        env_.push_back(pur);  // E_e purifier
    } else {
        fresh_e = tab_.add_zero_qubit();
    }
    if (spec_.apparatus_init == ApparatusInit::bell_with_copy) {
        auto [a, copy] = tab_.add_bell_pair();
        fresh_a = a;
        app_.push_back(copy);  // A_c record
    } else {
        fresh_a = tab_.add_zero_qubit();
    }
    env_.push_back(sys_[x][0]);
    app_.push_back(sys_[x][1]);
    sys_[x][0] = fresh_e;
    sys_[x][1] = fresh_a;
}

void Experiment::apply_brick_layer(int t) {
    for (int x = (t % 2 == 0) ? 0 : 1; x < spec_.L; x += 2) apply_brick(t, x);
}

void Experiment::apply_probe_layer(int t) {
    for (int x = 0; x < spec_.L; ++x) {
        if (spec_.eta(t, x)) transduce(t, x);
    }
}

void Experiment::step() {
    apply_brick_layer(t_);
    apply_probe_layer(t_);
    ++t_;
}

std::vector<int> Experiment::system_cols() const {
    std::vector<int> out;
    out.reserve(2 * sys_.size());
    for (const auto& s : sys_) {
        out.push_back(s[0]);
        out.push_back(s[1]);
    }
    return out;
}

std::vector<int> Experiment::site_cols(int first_site, int count) const {
    std::vector<int> out;
    out.reserve(2 * count);
    for (int x = first_site; x < first_site + count; ++x) {
        out.push_back(sys_[x][0]);
        out.push_back(sys_[x][1]);
    }
    return out;
}

int Experiment::entropy(std::vector<int> cols) const {
    return tab_.entropy_region_min_side(cols);
}

namespace {

std::vector<int> merge(std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

}  // namespace

int order_parameter_O(const Experiment& e) {
    const CircuitSpec& spec = e.spec();
    if (spec.initial_system != SystemInit::pure_zero) {
        throw std::invalid_argument("order_parameter_O: requires pure_zero system init");
    }
    const PartitionSpec& pt = spec.partition;
    if (2 * pt.ps_sites <= spec.L) {
        throw std::invalid_argument("order_parameter_O: requires |P_S| > L/2");
    }
    std::vector<int> P = e.site_cols(pt.ps_first(spec.L), pt.ps_sites);
    std::vector<int> E = e.site_cols(0, pt.es_sites);
    const std::vector<int>& A = e.apparatus_cols();
    int s_pa = e.entropy(merge({&P, &A}));
    int s_ea = e.entropy(merge({&E, &A}));
    int s_pea = e.entropy(merge({&P, &E, &A}));
    int s_a = e.entropy(A);
    return s_pa + s_ea - s_pea - s_a;
}

int coherent_information(const Experiment& e) {
    if (e.spec().initial_system != SystemInit::mixed_via_reference) {
        throw std::invalid_argument("coherent_information: requires mixed_via_reference init");
    }
    std::vector<int> S = e.system_cols();
    const std::vector<int>& A = e.apparatus_cols();
    return e.entropy(merge({&S, &A})) - e.entropy(A);
}

int ie_deviation(const Experiment& e) {
    const CircuitSpec& spec = e.spec();
    int ps = spec.partition.ps_sites > 0 ? spec.partition.ps_sites : spec.L / 2;
    int first = spec.partition.ps_sites > 0 ? spec.partition.ps_first(spec.L) : 0;
    if (first + ps > spec.L) first = spec.L - ps;
    std::vector<int> P = e.site_cols(first, ps);
    const std::vector<int>& A = e.apparatus_cols();
    const std::vector<int>& E = e.environment_cols();
    int lhs = e.entropy(merge({&P, &A})) - e.entropy(A);
    int rhs = e.entropy(merge({&P, &E})) - e.entropy(E);
    return lhs - rhs;
}

std::string TrajectoryRecord::to_jsonl() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : samples) {
        arr.push_back({{"layer", s.layer}, {"name", s.name}, {"partition", s.partition}, {"value", s.value}});
    }
    nlohmann::json j{{"spec_hash", spec_hash}, {"samples", arr}};
    return j.dump();
}

TrajectoryRecord run_trajectory(const CircuitSpec& spec) {
    Experiment e(spec);
    TrajectoryRecord rec;
    rec.spec_hash = spec.hash();
    const PartitionSpec& pt = spec.partition;
    std::ostringstream pdesc;
    pdesc << "ES[0," << pt.es_sites << ")+PS[" << pt.ps_first(spec.L) << ","
          << (pt.ps_first(spec.L) + pt.ps_sites) << ")";
    auto sample = [&](int layer) {
        if (spec.initial_system == SystemInit::pure_zero && 2 * pt.ps_sites > spec.L) {
            rec.samples.push_back({layer, "order_parameter", pdesc.str(), order_parameter_O(e)});
        }
        if (spec.initial_system == SystemInit::mixed_via_reference) {
            rec.samples.push_back({layer, "coherent_information", "S", coherent_information(e)});
        }
        rec.samples.push_back({layer, "apparatus_entropy", "A", e.entropy(e.apparatus_cols())});
    };
    for (int t = 0; t < spec.T; ++t) {
        e.step();
        bool last = (t == spec.T - 1);
        if (last || (spec.measure_stride > 0 && (t + 1) % spec.measure_stride == 0)) sample(t + 1);
    }
    if (spec.T == 0) sample(0);
    return rec;
}

}  // namespace stabcore
