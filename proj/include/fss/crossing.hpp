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

#ifndef IEXSIM_FSS_CROSSING_HPP
#define IEXSIM_FSS_CROSSING_HPP

#include <cstdint>
#include <vector>

namespace fss {

/// One observable curve O(x) at a fixed system size, with independent
/// realization (or chain) samples per grid point.
struct Curve {
    double size = 0;
    std::vector<double> x;                      // shared, sorted grid
    std::vector<std::vector<double>> samples;   // samples[i] for grid point x[i]
    std::vector<double> means() const;
};

struct CrossingResult {
    bool found = false;
    double value = 0;               // median of pairwise crossings
    double error = 0;               // bootstrap standard deviation of `value`
    double spread = 0;              // std of the pairwise crossing set
    std::vector<double> pairwise;   // one entry per size pair that crossed
};

/// Pairwise crossings from linear interpolation of curve differences; never
/// extrapolates outside the grid. Bootstrap resamples realizations per point
/// (seeded, deterministic).
CrossingResult locate_crossing(const std::vector<Curve>& curves, int bootstrap_resamples,
                               uint64_t seed);

struct CollapseResult {
    bool valid = false;
    double xc = 0;        // critical value
    double exponent = 0;  // 1/nu
    double objective = 0;
};

/// Data collapse of O(x, size) against a master curve of (x - xc) size^a,
/// estimated by local linear regression; two-stage grid search over (xc, a).
CollapseResult collapse_fit(const std::vector<Curve>& curves, double xc_min, double xc_max,
                            double exp_min, double exp_max);

}  // namespace fss

#endif
