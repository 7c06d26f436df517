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

#include "pottsrbc/critical.hpp"

#include <stdexcept>

#include "pottsrbc/sw.hpp"

namespace pottsrbc {

std::vector<fss::Curve> critical_curves(int h, const std::vector<int>& widths,
                                        const std::vector<double>& nu_grid, const RbcParams& base,
                                        int chains) {
    std::vector<fss::Curve> curves;
    for (int w : widths) {
        fss::Curve curve;
        curve.size = w;
        curve.x = nu_grid;
        curve.samples.resize(nu_grid.size());
        for (size_t gi = 0; gi < nu_grid.size(); ++gi) {
            RbcParams params = base;
            params.h = h;
            params.nu = nu_grid[gi];
            for (int chain = 0; chain < chains; ++chain) {
                core::Rng rng(core::derive(base.seed, "chain", static_cast<uint64_t>(w),
                                           static_cast<uint64_t>(gi), static_cast<uint64_t>(chain)));
                RbcLattice lat(2 * w, w);
                for (int s = 0; s < params.thermalization; ++s) sw_sweep(lat, params, rng);
                double acc_obs = 0, acc_m2 = 0, acc_m4 = 0;
                int count = 0;
                for (int s = 0; s < params.sweeps; ++s) {
                    sw_sweep(lat, params, rng);
                    if (params.measure_stride > 0 && s % params.measure_stride != 0) continue;
                    Observables obs = measure(lat, h);
                    if (h == 1) {
                        acc_obs += obs.x_wrapping;
                    } else {
                        acc_m2 += obs.magnetization * obs.magnetization;
                        acc_m4 += obs.magnetization * obs.magnetization * obs.magnetization *
                                  obs.magnetization;
                    }
                    ++count;
                }
                double value;
                if (h == 1) {
                    value = acc_obs / count;
                } else {
                    double m2 = acc_m2 / count, m4 = acc_m4 / count;
                    value = 1.0 - m4 / (3.0 * m2 * m2);  // Binder cumulant per chain
                }
                curve.samples[gi].push_back(value);
            }
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

CriticalEstimate locate_critical(int h, const std::vector<int>& widths,
                                 const std::vector<double>& nu_grid, const RbcParams& base,
                                 int chains) {
    if (widths.size() < 3) throw std::invalid_argument("locate_critical: need at least 3 sizes");
    auto curves = critical_curves(h, widths, nu_grid, base, chains);
    fss::CrossingResult res = fss::locate_crossing(curves, 1000, core::derive(base.seed, "boot"));
    CriticalEstimate est;
    est.found = res.found;
    est.nu_c = res.value;
    est.error = res.error;
    est.spread = res.spread;
    return est;
}

}  // namespace pottsrbc
