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

#ifndef IEXSIM_DENSEQUANTUM_IE_CHECKS_HPP
#define IEXSIM_DENSEQUANTUM_IE_CHECKS_HPP

#include <vector>

#include "densequantum/dense_state.hpp"

namespace densequantum {

struct IePartition {
    std::vector<int> s_sites;   // P_S (site indices in S)
    std::vector<int> sp_sites;  // P_S' (site indices in S')
};

struct IeReport {
    double max_ie_deviation = 0;          // |S_n(P,P';A) - S_n(P,P';E)|
    double max_complement_deviation = 0;  // |S_n(P,P';A) - S_n(Pc,P'c;A)|
    double min_conditional_entropy = 0;   // min over partitions of S(P,P'|A)
};

/// Scans the given partitions at every Renyi index in n_list. A region's
/// entropies for all n come from one reduced spectrum.
IeReport check_ie_entropies(const DenseState& st, const std::vector<int>& n_list,
                            const std::vector<IePartition>& partitions);

/// All 2^{#sites(S)} x 2^{#sites(S')} site-subset partitions.
std::vector<IePartition> all_site_partitions(const DenseState& st);

}  // namespace densequantum

#endif
