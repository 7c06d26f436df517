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

#include "labctl/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace labctl {

namespace {

std::string column_value(const Row& r, const std::string& col) {
    if (col == "engine") return r.engine;
    if (col == "seed") return std::to_string(r.seed);
    if (col == "L") return std::to_string(r.L);
    if (col == "T") return std::to_string(r.T);
    if (col == "p_or_nu") return format_double(r.p_or_nu);
    if (col == "layer") return std::to_string(r.layer);
    if (col == "observable") return r.observable;
    throw std::invalid_argument("ensemble_stats: unknown groupby column " + col);
}

}  // namespace

std::vector<GroupStat> ensemble_stats(const std::vector<Row>& rows,
                                      const std::vector<std::string>& groupby,
                                      std::vector<std::string>* warnings) {
    if (rows.empty()) throw std::invalid_argument("ensemble_stats: empty dataset");
    std::vector<std::string> cols = groupby;
    bool has_obs = false;
    for (const auto& c : cols) has_obs |= (c == "observable");
    if (!has_obs) cols.push_back("observable");

    // group key -> realization -> (sum, count)
    std::map<std::string, std::map<int, std::pair<double, int>>> acc;
    std::map<std::string, std::map<std::string, std::string>> keys;
    for (const Row& r : rows) {
        std::string key;
        std::map<std::string, std::string> kv;
        for (const auto& c : cols) {
            std::string v = column_value(r, c);
            key += v + "\x1f";
            kv[c] = v;
        }
        auto& cell = acc[key][r.realization];
        cell.first += r.value;
        cell.second += 1;
        keys[key] = std::move(kv);
    }
    std::vector<GroupStat> out;
    for (auto& [key, reals] : acc) {
        std::vector<double> values;
        for (auto& [real, sc] : reals) {
            if (sc.second == 0) continue;
            values.push_back(sc.first / sc.second);
        }
        if (values.empty()) {
            if (warnings) warnings->push_back("empty group omitted: " + key);
            continue;
        }
        GroupStat g;
        g.key = keys[key];
        g.count = static_cast<int>(values.size());
        for (double v : values) g.mean += v;
        g.mean /= g.count;
        if (g.count > 1) {
            double var = 0;
            for (double v : values) var += (v - g.mean) * (v - g.mean);
            var /= (g.count - 1);
            g.stderr_mean = std::sqrt(var / g.count);
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace labctl
