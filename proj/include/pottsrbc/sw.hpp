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

#ifndef IEXSIM_POTTSRBC_SW_HPP
#define IEXSIM_POTTSRBC_SW_HPP

#include "core/rng.hpp"
#include "pottsrbc/lattice.hpp"

namespace pottsrbc {

/// One Swendsen-Wang update of the Edwards-Sokal (spin, bond) chain:
/// bonds resampled given spins (present with prob nu iff endpoints agree),
/// then uniform new spins per cluster; clusters holding a fixed vertex adopt
/// its value. Throws std::logic_error if a cluster joins two incompatible
/// fixed tags (impossible when the invariants hold).
void sw_sweep(RbcLattice& lat, const RbcParams& params, core::Rng& rng);

struct Observables {
    double largest_cluster_fraction = 0;
    double boundary_connectivity = 0;  // first row linked to last row
    double x_wrapping = 0;             // cluster wraps around the periodic direction
    double magnetization = 0;          // (h * max_frac - 1) / (h - 1); zero for h = 1
};

/// Estimators on the current bond configuration.
Observables measure(const RbcLattice& lat, int h);

}  // namespace pottsrbc

#endif
