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

#ifndef IEXSIM_PERMREP_BRICK_WEIGHT_HPP
#define IEXSIM_PERMREP_BRICK_WEIGHT_HPP

#include <vector>

#include "permrep/perm.hpp"
#include "permrep/rational.hpp"
#include "permrep/weingarten.hpp"

namespace permrep {

/// Haar-averaged brick weight on two replica spins sigma, tau in S_{2n}:
///   W_Brick^{q,n}(sigma,tau) = sum_{tau_t, sigma_b in S_{2n}}
///       W_g^{q^2,2n}(sigma,tau_t) W_g^{q^2,2n}(sigma_b,tau)
///       Q^{q,2n}(tau_t,sigma_b) Q^{q,2n}(s_alpha tau_t s_alpha, sigma_b).
///
/// Exact rationals for n <= 2 (S_4 sums). The n = 3 case sums over S_6 x S_6;
/// use the flagged float mode for tables there (exact per-pair still works but
/// is slow). Degeneracy errors from the q^2 Weingarten table propagate.
Rational brick_weight(int q, int n, const Perm& sigma, const Perm& tau);

/// Full |S_2n| x |S_2n| table, exact. n <= 2.
std::vector<std::vector<Rational>> brick_weight_table(int q, int n);

/// Flagged floating-point mode (relative error target 1e-10). n <= 3.
double brick_weight_float(int q, int n, const Perm& sigma, const Perm& tau);
std::vector<std::vector<double>> brick_weight_table_float(int q, int n);

}  // namespace permrep

#endif
