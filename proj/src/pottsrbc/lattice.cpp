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

#include "pottsrbc/lattice.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pottsrbc {

RbcLattice::RbcLattice(int sites, int rows, std::vector<BoundaryTag> final_row_tags)
    : L_(sites), width_(sites / 2), rows_(rows) {
    if (sites < 2 || sites % 2 != 0) throw std::invalid_argument("RbcLattice: sites must be even >= 2");
    if (rows < 1) throw std::invalid_argument("RbcLattice: rows must be >= 1");
    tag_.assign(static_cast<size_t>(num_vertices()), BoundaryTag::free_spin);
    if (!final_row_tags.empty()) {
        if (static_cast<int>(final_row_tags.size()) != width_) {
            throw std::invalid_argument("RbcLattice: need one tag per final-row brick");
        }
        for (int c = 0; c < width_; ++c) tag_[vertex(rows_ - 1, c)] = final_row_tags[c];
    }
    spin_.assign(static_cast<size_t>(num_vertices()), 0);
    for (int v = 0; v < num_vertices(); ++v) {
        if (tag_[v] != BoundaryTag::free_spin) spin_[v] = fixed_value(tag_[v]);
    }
    for (int t = 0; t + 1 < rows_; ++t) {
        for (int x = 0; x < L_; ++x) {
            int cu = brick_col(t, x);
            int cv = brick_col(t + 1, x);
            int raw = cv - cu;
            int dx = ((raw + width_ / 2) % width_ + width_) % width_ - width_ / 2;
            edges_.push_back({vertex(t, cu), vertex(t + 1, cv), dx});
        }
    }
    bond_present_.assign(edges_.size(), 0);
}

int RbcLattice::brick_col(int row, int site) const {
    // even rows pair (0,1)(2,3)...; odd rows pair (1,2)(3,4)...(L-1,0)
    if (row % 2 == 0) return site / 2;
    return ((site - 1 + L_) % L_) / 2;
}

std::string RbcLattice::to_json() const {
    std::ostringstream out;
    out << "{\"sites\":" << L_ << ",\"rows\":" << rows_ << ",\"spins\":[";
    for (size_t i = 0; i < spin_.size(); ++i) out << (i ? "," : "") << spin_[i];
    out << "],\"eta\":[";
    for (size_t i = 0; i < bond_present_.size(); ++i) {
        out << (i ? "," : "") << (bond_present_[i] ? 0 : 1);  // paper convention
    }
    out << "]}";
    return out.str();
}

RbcLattice build_lattice(int sites, int rows, const std::vector<int>& ps_sites) {
    if (ps_sites.empty()) return RbcLattice(sites, rows);
    std::vector<bool> in_ps(static_cast<size_t>(sites), false);
    for (int s : ps_sites) {
        if (s < 0 || s >= sites) throw std::invalid_argument("build_lattice: P_S site out of range");
        in_ps[s] = true;
    }
    const int width = sites / 2;
    std::vector<BoundaryTag> tags(static_cast<size_t>(width), BoundaryTag::fixed_identity);
    RbcLattice probe(sites, rows);
    for (int x = 0; x < sites; ++x) {
        if (in_ps[x]) tags[probe.brick_col(rows - 1, x)] = BoundaryTag::fixed_plus;
    }
    return RbcLattice(sites, rows, tags);
}

double nu_from_p(double p, int q, int n) {
    if (p < 0 || p > 1) throw std::invalid_argument("nu_from_p: p outside [0,1]");
    if (q < 2 || n < 2) throw std::invalid_argument("nu_from_p: need q >= 2, n >= 2");
    return (1.0 - p) / (p * std::pow(static_cast<double>(q), 1 - n) + (1.0 - p));
}

double nu_prime_from_p(double p, int q, int n) {
    if (p < 0 || p > 1) throw std::invalid_argument("nu_prime_from_p: p outside [0,1]");
    if (q < 2 || n < 2) throw std::invalid_argument("nu_prime_from_p: need q >= 2, n >= 2");
    return (1.0 - p) / (p * std::pow(static_cast<double>(q), 2 - 2 * n) + (1.0 - p));
}

}  // namespace pottsrbc
