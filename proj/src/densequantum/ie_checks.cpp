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

#include "densequantum/ie_checks.hpp"

#include <algorithm>
#include <cmath>

namespace densequantum {

namespace {

std::vector<int> qubits_for_sites(const Register& reg, Role role, const std::vector<int>& sites,
                                  bool complement) {
    std::vector<bool> chosen(static_cast<size_t>(std::max(0, reg.num_sites(role))), false);
    for (int s : sites) chosen[s] = true;
    std::vector<int> out;
    for (int q = 0; q < reg.size(); ++q) {
        const QubitInfo& info = reg.info(q);
        if (info.role != role) continue;
        bool in = chosen[info.site];
        if (in != complement) out.push_back(q);
    }
    return out;
}

std::vector<int> merged(std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

}  // namespace

IeReport check_ie_entropies(const DenseState& st, const std::vector<int>& n_list,
                            const std::vector<IePartition>& partitions) {
    const Register& reg = st.reg();
    const std::vector<int> app = reg.apparatus_indices();
    const std::vector<int> env = reg.environment_indices();

    IeReport rep;
    rep.min_conditional_entropy = std::numeric_limits<double>::infinity();
    const std::vector<double> app_spec = st.reduced_spectrum(app);

    for (const IePartition& part : partitions) {
        std::vector<int> p = qubits_for_sites(reg, Role::S, part.s_sites, false);
        std::vector<int> pp = qubits_for_sites(reg, Role::Sp, part.sp_sites, false);
        std::vector<int> pc = qubits_for_sites(reg, Role::S, part.s_sites, true);
        std::vector<int> ppc = qubits_for_sites(reg, Role::Sp, part.sp_sites, true);

        auto spec_a = st.reduced_spectrum(merged({&p, &pp, &app}));
        auto spec_e = st.reduced_spectrum(merged({&p, &pp, &env}));
        auto spec_ac = st.reduced_spectrum(merged({&pc, &ppc, &app}));

        for (int n : n_list) {
            double sa = spectrum_renyi(spec_a, n);
            double se = spectrum_renyi(spec_e, n);
            double sac = spectrum_renyi(spec_ac, n);
            rep.max_ie_deviation = std::max(rep.max_ie_deviation, std::abs(sa - se));
            rep.max_complement_deviation = std::max(rep.max_complement_deviation, std::abs(sa - sac));
        }
        double cond = spectrum_renyi(spec_a, 1) - spectrum_renyi(app_spec, 1);
        rep.min_conditional_entropy = std::min(rep.min_conditional_entropy, cond);
    }
    return rep;
}

std::vector<IePartition> all_site_partitions(const DenseState& st) {
    const int ns = std::max(0, st.reg().num_sites(Role::S));
    const int nsp = std::max(0, st.reg().num_sites(Role::Sp));
    std::vector<IePartition> out;
    for (int ms = 0; ms < (1 << ns); ++ms) {
        for (int mp = 0; mp < (1 << nsp); ++mp) {
            IePartition part;
            for (int s = 0; s < ns; ++s) {
                if ((ms >> s) & 1) part.s_sites.push_back(s);
            }
            for (int s = 0; s < nsp; ++s) {
                if ((mp >> s) & 1) part.sp_sites.push_back(s);
            }
            out.push_back(std::move(part));
        }
    }
    return out;
}

}  // namespace densequantum
