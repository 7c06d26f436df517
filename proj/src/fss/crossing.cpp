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

#include "fss/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/rng.hpp"

namespace fss {

std::vector<double> Curve::means() const {
    std::vector<double> out(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        double acc = 0;
        for (double v : samples[i]) acc += v;
        out[i] = samples[i].empty() ? 0.0 : acc / static_cast<double>(samples[i].size());
    }
    return out;
}

namespace {

// First strict sign change of the difference curve, linearly interpolated.
// Ties and noise-flat segments do not count as crossings.
bool pairwise_crossing(const std::vector<double>& x, const std::vector<double>& a,
                       const std::vector<double>& b, double* out) {
    for (size_t k = 0; k + 1 < x.size(); ++k) {
        double d0 = a[k] - b[k];
        double d1 = a[k + 1] - b[k + 1];
        if (d0 * d1 < 0.0) {
            double t = d0 / (d0 - d1);
            *out = x[k] + t * (x[k + 1] - x[k]);
            return true;
        }
    }
    return false;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double acc = 0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

bool combined_estimate(const std::vector<std::vector<double>>& curve_means,
                       const std::vector<double>& grid, std::vector<double>* pairwise, double* out) {
    pairwise->clear();
    for (size_t i = 0; i < curve_means.size(); ++i) {
        for (size_t j = i + 1; j < curve_means.size(); ++j) {
            double c;
            if (pairwise_crossing(grid, curve_means[i], curve_means[j], &c)) {
                pairwise->push_back(c);
            }
        }
    }
    if (pairwise->empty()) return false;
    *out = median(*pairwise);
    return true;
}

}  // namespace

CrossingResult locate_crossing(const std::vector<Curve>& curves, int bootstrap_resamples,
                               uint64_t seed) {
    if (curves.size() < 2) throw std::invalid_argument("locate_crossing: need at least two sizes");
    const std::vector<double>& grid = curves.front().x;
    for (const Curve& c : curves) {
        if (c.x != grid) throw std::invalid_argument("locate_crossing: curves must share one grid");
    }
    CrossingResult res;
    std::vector<std::vector<double>> means;
    for (const Curve& c : curves) means.push_back(c.means());
    double value;
    if (!combined_estimate(means, grid, &res.pairwise, &value)) {
        res.found = false;
        return res;
    }
    res.found = true;
    res.value = value;
    res.spread = stddev(res.pairwise);

    std::vector<double> boot;
    boot.reserve(bootstrap_resamples);
    for (int b = 0; b < bootstrap_resamples; ++b) {
        core::Rng rng(core::derive(seed, "bootstrap", static_cast<uint64_t>(b)));
        std::vector<std::vector<double>> bmeans(curves.size());
        for (size_t ci = 0; ci < curves.size(); ++ci) {
            bmeans[ci].resize(grid.size());
            for (size_t k = 0; k < grid.size(); ++k) {
                const auto& s = curves[ci].samples[k];
                double acc = 0;
                for (size_t r = 0; r < s.size(); ++r) acc += s[rng.next_below(s.size())];
                bmeans[ci][k] = s.empty() ? 0.0 : acc / static_cast<double>(s.size());
            }
        }
        std::vector<double> pw;
        double bval;
        if (combined_estimate(bmeans, grid, &pw, &bval)) boot.push_back(bval);
    }
    res.error = stddev(boot);
    return res;
}

namespace {

double collapse_objective(const std::vector<Curve>& curves, const std::vector<std::vector<double>>& means,
                          double xc, double a) {
    struct Pt {
        double u, v;
    };
    std::vector<Pt> pts;
    for (size_t ci = 0; ci < curves.size(); ++ci) {
        double scale = std::pow(curves[ci].size, a);
        for (size_t k = 0; k < curves[ci].x.size(); ++k) {
            pts.push_back({(curves[ci].x[k] - xc) * scale, means[ci][k]});
        }
    }
    std::sort(pts.begin(), pts.end(), [](const Pt& p, const Pt& q) { return p.u < q.u; });
    const int w = 4;  // local window half-width (in rank)
    double obj = 0;
    int count = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        size_t lo = i > static_cast<size_t>(w) ? i - w : 0;
        size_t hi = std::min(pts.size() - 1, i + w);
        // least-squares line through the window, excluding the point itself
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (size_t j = lo; j <= hi; ++j) {
            if (j == i) continue;
            sx += pts[j].u;
            sy += pts[j].v;
            sxx += pts[j].u * pts[j].u;
            sxy += pts[j].u * pts[j].v;
            ++m;
        }
        if (m < 2) continue;
        double det = m * sxx - sx * sx;
        double pred;
        if (std::abs(det) < 1e-30) {
            pred = sy / m;
        } else {
            double beta = (m * sxy - sx * sy) / det;
            double alpha = (sy - beta * sx) / m;
            pred = alpha + beta * pts[i].u;
        }
        obj += (pts[i].v - pred) * (pts[i].v - pred);
        ++count;
    }
    return count > 0 ? obj / count : 1e300;
}

}  // namespace

CollapseResult collapse_fit(const std::vector<Curve>& curves, double xc_min, double xc_max,
                            double exp_min, double exp_max) {
    if (curves.size() < 2) throw std::invalid_argument("collapse_fit: need at least two sizes");
    std::vector<std::vector<double>> means;
    for (const Curve& c : curves) means.push_back(c.means());
    CollapseResult best;
    best.objective = 1e300;
    auto scan = [&](double x0, double x1, double a0, double a1, int steps) {
        for (int i = 0; i <= steps; ++i) {
            double xc = x0 + (x1 - x0) * i / steps;
            for (int j = 0; j <= steps; ++j) {
                double a = a0 + (a1 - a0) * j / steps;
                double obj = collapse_objective(curves, means, xc, a);
                if (obj < best.objective) {
                    best = {true, xc, a, obj};
                }
            }
        }
    };
    scan(xc_min, xc_max, exp_min, exp_max, 24);
    double dx = (xc_max - xc_min) / 24.0, da = (exp_max - exp_min) / 24.0;
    scan(std::max(xc_min, best.xc - dx), std::min(xc_max, best.xc + dx),
         std::max(exp_min, best.exponent - da), std::min(exp_max, best.exponent + da), 20);
    return best;
}

}  // namespace fss
