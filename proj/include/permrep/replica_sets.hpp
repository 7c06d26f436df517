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

#ifndef IEXSIM_PERMREP_REPLICA_SETS_HPP
#define IEXSIM_PERMREP_REPLICA_SETS_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "permrep/perm.hpp"

namespace permrep {

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration caps: replica structures live in S_{2n}; exhaustive scans stop at S_10.
inline constexpr int kMaxReplicas = 5;

/// Labeling of the 2n replica elements: a_i -> index i, b_i -> index n+i (0-based),
/// so the b species occupies the contiguous tail [n, 2n).
struct ReplicaLabeling {
    int n = 0;
    explicit ReplicaLabeling(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("ReplicaLabeling: n must be >= 1");
    }
    int a(int i) const { return i; }
    int b(int i) const { return n + i; }
    int size() const { return 2 * n; }
};

/// s_alpha = prod_i (a_i b_i): swaps the two species on every replica.
Perm s_alpha(int n);

/// Cyclic shift by `step` on the b species only (a fixed): b_i -> b_{i+step}.
Perm shift_b(int n, int step);

/// Cyclic shift by `step` on both species: a_i -> a_{i+step}, b_i -> b_{i+step}.
Perm shift_both(int n, int step);

/// All g in S_{2n} with g s_alpha g^{-1} = s_alpha, in lexicographic order.
/// |result| = 2^n n! (hyperoctahedral group). n <= 5.
std::vector<Perm> centralizer_of_swap(int n);

struct WPlusSet {
    std::vector<Perm> elements;  // subset of the centralizer, lexicographic order
    int h = 0;                   // |W+|, the Potts cluster weight
};

/// W+ = { sigma in C(s_alpha) : #cycles(sigma * (-1)_b) = n+1 }. n <= 5.
WPlusSet w_plus_set(int n);

/// max over sigma in C(s_alpha) of #cycles(sigma * (-1)_b); equals n+1. n <= 5.
int max_cycle_bound(int n);

struct SymmetricCycleDecomposition {
    Perm c1;
    Perm c2;   // = s_alpha c1 s_alpha, support disjoint from c1
    int r = 0; // 1-based replica index of the splitting transposition (a_r b_r)
};

/// Splits a single s_alpha-symmetric cycle c of even length as
/// c = (a_r b_r) * c1 * c2 with c2 = s_alpha c1 s_alpha on disjoint support.
/// Throws std::invalid_argument if c is not a symmetric single cycle.
SymmetricCycleDecomposition symmetric_cycle_decompose(const Perm& c, const ReplicaLabeling& labeling);

}  // namespace permrep

#endif
