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

#ifndef IEXSIM_DENSEQUANTUM_REGISTER_HPP
#define IEXSIM_DENSEQUANTUM_REGISTER_HPP

#include <stdexcept>
#include <vector>

namespace densequantum {

/// Subsystem roles of the purified experiment: final system S, initial-system
/// reference S', apparatus A with its record copy Ac, and the environment
/// pieces E / Ea / Ee (Ea purifies the apparatus init, Ee the environment init).
enum class Role { S, Sp, A, Ac, E, Ea, Ee };

struct QubitInfo {
    Role role = Role::S;
    int site = -1;     // system site index, -1 if not a system qubit
    int species = -1;  // 0 = a, 1 = b for doubled sites; -1 for single-qubit sites
};

class Register {
  public:
    int add(QubitInfo info) {
        qubits_.push_back(info);
        return static_cast<int>(qubits_.size()) - 1;
    }
    int size() const { return static_cast<int>(qubits_.size()); }
    const QubitInfo& info(int q) const { return qubits_[q]; }
    QubitInfo& info(int q) { return qubits_[q]; }

    std::vector<int> indices(Role role) const {
        std::vector<int> out;
        for (int q = 0; q < size(); ++q) {
            if (qubits_[q].role == role) out.push_back(q);
        }
        return out;
    }
    /// A u Ac: everything the experimenter keeps.
    std::vector<int> apparatus_indices() const {
        auto out = indices(Role::A);
        auto ac = indices(Role::Ac);
        out.insert(out.end(), ac.begin(), ac.end());
        return out;
    }
    /// E u Ea u Ee: everything discarded.
    std::vector<int> environment_indices() const {
        auto out = indices(Role::E);
        for (Role r : {Role::Ea, Role::Ee}) {
            auto v = indices(r);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }
    std::vector<int> site_indices(int site, Role role = Role::S) const {
        std::vector<int> out;
        for (int q = 0; q < size(); ++q) {
            if (qubits_[q].role == role && qubits_[q].site == site) out.push_back(q);
        }
        if (out.empty()) throw std::out_of_range("Register: no qubits at requested site");
        return out;
    }
    int num_sites(Role role = Role::S) const {
        int mx = -1;
        for (const auto& q : qubits_) {
            if (q.role == role) mx = std::max(mx, q.site);
        }
        return mx + 1;
    }

  private:
    std::vector<QubitInfo> qubits_;
};

}  // namespace densequantum

#endif
