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

#include "pottsrbc/sw.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pottsrbc {

namespace {

struct UnionFind {
    std::vector<int> parent, rank_;
    explicit UnionFind(int n) : parent(n), rank_(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }
};

}  // namespace

void sw_sweep(RbcLattice& lat, const RbcParams& params, core::Rng& rng) {
    if (params.h < 1) throw std::invalid_argument("sw_sweep: h must be >= 1");
    auto& bonds = lat.bonds();
    auto& spins = lat.spins();
    const auto& edges = lat.edges();

    for (size_t i = 0; i < edges.size(); ++i) {
        bonds[i] = (spins[edges[i].u] == spins[edges[i].v]) && rng.next_bernoulli(params.nu);
    }
    UnionFind uf(lat.num_vertices());
    for (size_t i = 0; i < edges.size(); ++i) {
        if (bonds[i]) uf.unite(edges[i].u, edges[i].v);
    }
    // fixed tags per cluster root
    std::vector<int> forced(static_cast<size_t>(lat.num_vertices()), -1);
    for (int v = 0; v < lat.num_vertices(); ++v) {
        if (lat.tag(v) == BoundaryTag::free_spin) continue;
        int root = uf.find(v);
        int val = RbcLattice::fixed_value(lat.tag(v));
        if (forced[root] >= 0 && forced[root] != val) {
            throw std::logic_error("sw_sweep: cluster joins incompatible fixed boundary spins");
        }
        forced[root] = val;
    }
    std::vector<int> fresh(static_cast<size_t>(lat.num_vertices()), -1);
    for (int v = 0; v < lat.num_vertices(); ++v) {
        int root = uf.find(v);
        if (forced[root] >= 0) {
            spins[v] = forced[root];
            continue;
        }
        if (fresh[root] < 0) {
            fresh[root] = params.h == 1 ? 0 : static_cast<int>(rng.next_below(params.h));
        }
        spins[v] = fresh[root];
    }
}

Observables measure(const RbcLattice& lat, int h) {
    const auto& edges = lat.edges();
    const auto& bonds = lat.bonds();
    const int nv = lat.num_vertices();
    UnionFind uf(nv);
    for (size_t i = 0; i < edges.size(); ++i) {
        if (bonds[i]) uf.unite(edges[i].u, edges[i].v);
    }
    Observables obs;

    std::vector<int> count(nv, 0);
    for (int v = 0; v < nv; ++v) ++count[uf.find(v)];
    obs.largest_cluster_fraction =
        static_cast<double>(*std::max_element(count.begin(), count.end())) / nv;

    // first row linked to last row
    std::vector<char> touches_first(nv, 0), touches_last(nv, 0);
    for (int c = 0; c < lat.width(); ++c) {
        touches_first[uf.find(lat.vertex(0, c))] = 1;
        touches_last[uf.find(lat.vertex(lat.rows() - 1, c))] = 1;
    }
    for (int v = 0; v < nv; ++v) {
        if (touches_first[v] && touches_last[v]) {
            obs.boundary_connectivity = 1;
            break;
        }
    }

    // wrap detection: propagate unreduced column coordinates along present
    // bonds; a revisited vertex with a different coordinate means the cluster
    // circles the periodic direction.
    {
        std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbor, dx)
        for (size_t i = 0; i < edges.size(); ++i) {
            if (!bonds[i]) continue;
            adj[edges[i].u].push_back({edges[i].v, edges[i].dx});
            adj[edges[i].v].push_back({edges[i].u, -edges[i].dx});
        }
        std::vector<int> coord(nv, INT32_MIN);
        std::vector<int> stack;
        bool wrapped = false;
        for (int s = 0; s < nv && !wrapped; ++s) {
            if (coord[s] != INT32_MIN) continue;
            coord[s] = 0;
            stack.push_back(s);
            while (!stack.empty() && !wrapped) {
                int v = stack.back();
                stack.pop_back();
                for (auto [w, dx] : adj[v]) {
                    int want = coord[v] + dx;
                    if (coord[w] == INT32_MIN) {
                        coord[w] = want;
                        stack.push_back(w);
                    } else if (coord[w] != want) {
                        wrapped = true;
                        break;
                    }
                }
            }
        }
        obs.x_wrapping = wrapped ? 1 : 0;
    }

    if (h > 1) {
        std::vector<int> state_count(h, 0);
        for (int v = 0; v < nv; ++v) ++state_count[lat.spins()[v]];
        double max_frac =
            static_cast<double>(*std::max_element(state_count.begin(), state_count.end())) / nv;
        obs.magnetization = (h * max_frac - 1.0) / (h - 1.0);
    }
    return obs;
}

}  // namespace pottsrbc
