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

#ifndef IEXSIM_POTTSRBC_CRITICAL_HPP
#define IEXSIM_POTTSRBC_CRITICAL_HPP

#include <vector>

#include "fss/crossing.hpp"
#include "pottsrbc/lattice.hpp"

namespace pottsrbc {

struct CriticalEstimate {
    bool found = false;   // false: no crossing inside the grid (out-of-range)
    double nu_c = 0;
    double error = 0;     // bootstrap standard deviation
    double spread = 0;    // std of pairwise crossings
};

/// Crossing-point location on W x W brick lattices (free boundaries):
/// x-wrapping probability for h = 1, Binder cumulant of the magnetization for
/// h >= 2. `chains` independent chains per (width, nu) feed the bootstrap.
CriticalEstimate locate_critical(int h, const std::vector<int>& widths,
                                 const std::vector<double>& nu_grid, const RbcParams& base,
                                 int chains);

/// The per-chain curve data behind locate_critical (reused by the sweep CLI).
std::vector<fss::Curve> critical_curves(int h, const std::vector<int>& widths,
                                        const std::vector<double>& nu_grid, const RbcParams& base,
                                        int chains);

}  // namespace pottsrbc

#endif
