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

#ifndef IEXSIM_LABCTL_STATS_HPP
#define IEXSIM_LABCTL_STATS_HPP

#include <map>
#include <string>
#include <vector>

#include "labctl/dataset.hpp"

namespace labctl {

struct GroupStat {
    std::map<std::string, std::string> key;  // groupby column -> value
    double mean = 0;
    double stderr_mean = 0;  // realization-level standard error
    int count = 0;           // realizations in the group
};

/// Group rows by the given schema columns (observable is always implied).
/// Within a group, layers of one realization are averaged first; mean/stderr
/// are taken across realizations. Empty-sample groups are dropped and listed
/// in `warnings` when provided.
std::vector<GroupStat> ensemble_stats(const std::vector<Row>& rows,
                                      const std::vector<std::string>& groupby,
                                      std::vector<std::string>* warnings = nullptr);

}  // namespace labctl

#endif
