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

#include "permrep/replica_sets.hpp"

#include <algorithm>
#include <numeric>

namespace permrep {

namespace {

void require_replica_cap(int n, const char* what) {
    if (n < 1 || n > kMaxReplicas) {
        throw capacity_error(std::string(what) + ": replica count " + std::to_string(n) +
                             " outside supported range [1, " + std::to_string(kMaxReplicas) + "]");
    }
}

int cycle_count_raw(const std::vector<uint8_t>& p) {
    uint32_t seen = 0;
    int count = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if ((seen >> i) & 1u) continue;
        ++count;
        size_t j = i;
        while (!((seen >> j) & 1u)) {
            seen |= 1u << j;
            j = p[j];
        }
    }
    return count;
}

}  // namespace

Perm s_alpha(int n) {
    std::vector<uint8_t> v(2 * n);
    for (int i = 0; i < n; ++i) {
        v[i] = static_cast<uint8_t>(n + i);
        v[n + i] = static_cast<uint8_t>(i);
    }
    return Perm(std::move(v));
}

Perm shift_b(int n, int step) {
    std::vector<uint8_t> v(2 * n);
    std::iota(v.begin(), v.end(), 0);
    for (int i = 0; i < n; ++i) {
        v[n + i] = static_cast<uint8_t>(n + (((i + step) % n) + n) % n);
    }
    return Perm(std::move(v));
}

Perm shift_both(int n, int step) {
    std::vector<uint8_t> v(2 * n);
    for (int i = 0; i < n; ++i) {
        int t = (((i + step) % n) + n) % n;
        v[i] = static_cast<uint8_t>(t);
        v[n + i] = static_cast<uint8_t>(n + t);
    }
    return Perm(std::move(v));
}

std::vector<Perm> centralizer_of_swap(int n) {
    require_replica_cap(n, "centralizer_of_swap");
    const int m = 2 * n;
    std::vector<uint8_t> s(m);
    for (int i = 0; i < n; ++i) {
        s[i] = static_cast<uint8_t>(n + i);
        s[n + i] = static_cast<uint8_t>(i);
    }
    std::vector<Perm> out;
    std::vector<uint8_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        // g s = s g  <=>  g(s(x)) = s(g(x)) for all x
        bool commutes = true;
        for (int x = 0; x < m; ++x) {
            if (p[s[x]] != s[p[x]]) {
                commutes = false;
                break;
            }
        }
        if (commutes) out.push_back(Perm(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

WPlusSet w_plus_set(int n) {
    require_replica_cap(n, "w_plus_set");
    const Perm mb = shift_b(n, -1);
    WPlusSet res;
    for (const Perm& g : centralizer_of_swap(n)) {
        if (compose(g, mb).cycle_count() == n + 1) {
            res.elements.push_back(g);
        }
    }
    res.h = static_cast<int>(res.elements.size());
    return res;
}

int max_cycle_bound(int n) {
    require_replica_cap(n, "max_cycle_bound");
    const Perm mb = shift_b(n, -1);
    int best = 0;
    for (const Perm& g : centralizer_of_swap(n)) {
        std::vector<uint8_t> prod(2 * n);
        for (int x = 0; x < 2 * n; ++x) prod[x] = static_cast<uint8_t>(g(mb(x)));
        best = std::max(best, cycle_count_raw(prod));
    }
    return best;
}

SymmetricCycleDecomposition symmetric_cycle_decompose(const Perm& c, const ReplicaLabeling& labeling) {
    const int m = labeling.size();
    if (c.size() != m) throw std::invalid_argument("symmetric_cycle_decompose: size mismatch");
    const Perm s = s_alpha(labeling.n);
    if (conjugate(s, c) != c) {
        throw std::invalid_argument("symmetric_cycle_decompose: cycle is not s_alpha-symmetric");
    }
    // Collect the support and check it is a single cycle of even length.
    int start = -1;
    int support = 0;
    for (int x = 0; x < m; ++x) {
        if (c(x) != x) {
            ++support;
            if (start < 0) start = x;
        }
    }
    if (start < 0 || support % 2 != 0) {
        throw std::invalid_argument("symmetric_cycle_decompose: need a nontrivial even-length cycle");
    }
    std::vector<int> orbit;
    int j = start;
    do {
        orbit.push_back(j);
        j = c(j);
    } while (j != start);
    if (static_cast<int>(orbit.size()) != support) {
        throw std::invalid_argument("symmetric_cycle_decompose: input is not a single cycle");
    }
    const int len = static_cast<int>(orbit.size());
    const int half = len / 2;
    // Symmetry forces s_alpha(x_i) = x_{i + len/2}.
    for (int i = 0; i < len; ++i) {
        if (s(orbit[i]) != orbit[(i + half) % len]) {
            throw std::invalid_argument("symmetric_cycle_decompose: orbit not antipodally symmetric");
        }
    }
    SymmetricCycleDecomposition out;
    out.c1 = Perm::from_cycle(m, std::vector<int>(orbit.begin(), orbit.begin() + half));
    out.c2 = conjugate(s, out.c1);
    int x1 = orbit[0];
    out.r = (x1 < labeling.n ? x1 : x1 - labeling.n) + 1;
    return out;
}

}  // namespace permrep
