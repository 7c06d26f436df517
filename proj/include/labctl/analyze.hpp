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

#ifndef IEXSIM_LABCTL_ANALYZE_HPP
#define IEXSIM_LABCTL_ANALYZE_HPP

#include <string>
#include <vector>

#include "labctl/dataset.hpp"

namespace labctl {

struct CollapseFit {
    bool found = false;          // a crossing exists inside the swept range
    double critical_value = 0;   // p_c or nu_c
    double error = 0;            // bootstrap standard deviation
    double spread = 0;           // std of the pairwise crossing set
    std::vector<double> pairwise;
    bool collapse_valid = false;
    double exponent = 0;         // 1 / nu_exp from the optional data collapse
    double objective = 0;

    std::string summary() const;
};

/// Pairwise finite-size crossings of the named observable over the given
/// sizes, with bootstrap errors; optional data collapse. Row order in the
/// dataset is irrelevant; results are deterministic given (dataset, seed).
/// Each (size, point, realization) contributes its final-layer value.
CollapseFit crossing_analysis(std::vector<Row> rows, const std::string& observable,
                              const std::vector<int>& sizes, bool with_collapse = false,
                              uint64_t seed = 0);

}  // namespace labctl

#endif
