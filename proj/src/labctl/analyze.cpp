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

#include "labctl/analyze.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fss/crossing.hpp"

namespace labctl {

std::string CollapseFit::summary() const {
    std::ostringstream out;
    if (!found) {
        out << "no crossing inside the swept range (out-of-range)";
        return out.str();
    }
    out << "critical value " << critical_value << " +/- " << error << " (pairwise spread " << spread
        << ", " << pairwise.size() << " pairs)";
    if (collapse_valid) {
        out << "; collapse exponent " << exponent << " (objective " << objective << ")";
    }
    return out.str();
}

CollapseFit crossing_analysis(std::vector<Row> rows, const std::string& observable,
                              const std::vector<int>& sizes, bool with_collapse, uint64_t seed) {
    if (sizes.size() < 2) throw std::invalid_argument("crossing_analysis: need >= 2 sizes");
    // order independence: canonical sort before anything else
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.L, a.p_or_nu, a.realization, a.layer, a.observable) <
               std::tie(b.L, b.p_or_nu, b.realization, b.layer, b.observable);
    });

    // final-layer value per (L, p, realization)
    std::map<int, std::map<double, std::map<int, std::pair<int, double>>>> best;  // layer, value
    std::set<double> grid_set;
    for (const Row& r : rows) {
        if (r.observable != observable) continue;
        if (std::find(sizes.begin(), sizes.end(), r.L) == sizes.end()) continue;
        auto& cell = best[r.L][r.p_or_nu];
        auto it = cell.find(r.realization);
        if (it == cell.end() || r.layer >= it->second.first) {
            cell[r.realization] = {r.layer, r.value};
        }
        grid_set.insert(r.p_or_nu);
    }
    std::vector<double> grid(grid_set.begin(), grid_set.end());
    if (grid.size() < 2) throw std::invalid_argument("crossing_analysis: needs >= 2 swept points");

    std::vector<fss::Curve> curves;
    for (int size : sizes) {
        auto it = best.find(size);
        if (it == best.end()) {
            throw std::invalid_argument("crossing_analysis: no rows for size " +
                                        std::to_string(size));
        }
        fss::Curve c;
        c.size = size;
        c.x = grid;
        c.samples.resize(grid.size());
        for (size_t g = 0; g < grid.size(); ++g) {
            auto pit = it->second.find(grid[g]);
            if (pit == it->second.end()) {
                throw std::invalid_argument("crossing_analysis: sizes do not share the sweep grid");
            }
            for (auto& [real, lv] : pit->second) c.samples[g].push_back(lv.second);
        }
        curves.push_back(std::move(c));
    }

    fss::CrossingResult cr = fss::locate_crossing(curves, 1000, seed);
    CollapseFit fit;
    fit.found = cr.found;
    fit.critical_value = cr.value;
    fit.error = cr.error;
    fit.spread = cr.spread;
    fit.pairwise = cr.pairwise;
    if (fit.found && with_collapse) {
        fss::CollapseResult col = fss::collapse_fit(curves, grid.front(), grid.back(), 0.2, 2.0);
        fit.collapse_valid = col.valid;
        fit.exponent = col.exponent;
        fit.objective = col.objective;
        // when both estimators agree, prefer the crossing location but report
        // the collapse exponent; the collapse xc is ignored if it drifted
        if (col.valid && std::abs(col.xc - fit.critical_value) > 5 * std::max(fit.error, 1e-3)) {
            fit.collapse_valid = false;
        }
    }
    return fit;
}

}  // namespace labctl
