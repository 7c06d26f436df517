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

#ifndef IEXSIM_DENSEQUANTUM_REPLICA_TENSOR_HPP
#define IEXSIM_DENSEQUANTUM_REPLICA_TENSOR_HPP

#include <complex>
#include <string>
#include <vector>

#include "densequantum/dense_state.hpp"
#include "permrep/perm.hpp"

namespace densequantum {

/// Replicated-space caps: n * k <= 12 qubits (4096^2 matrices at worst).
inline constexpr int kMaxReplicatedQubits = 12;

/// Unnormalized conditional replica tensor
///   Sigma~ = tr_{A u E} [ (|U><U|)^{(x) n} X_{+1}^{A} ]
/// on the n-fold replicated block space. Row/column bits [r*k, (r+1)*k) hold
/// replica r; within a block, bit i corresponds to block_qubits[i] of the
/// originating state (the S qubits followed by the S' qubits by default).
struct ReplicaTensor {
    int n = 0;
    int k = 0;
    bool normalized = false;
    Eigen::MatrixXcd mat;
    std::vector<int> block_qubits;
    std::vector<QubitInfo> block_info;

    ReplicaTensor normalize() const;
};

ReplicaTensor conditional_replica_tensor(const DenseState& st, int n);
ReplicaTensor conditional_replica_tensor(const DenseState& st, int n, std::vector<int> block);

/// Gathered replica-block index remap: result block r := idx block g(r).
uint64_t gather_blocks(uint64_t idx, int n, int k, const permrep::Perm& g);

/// X_p M and M X_p as block-index permutations of rows/columns.
Eigen::MatrixXcd left_apply_perm(const permrep::Perm& p, const Eigen::MatrixXcd& m, int k);
Eigen::MatrixXcd right_apply_perm(const Eigen::MatrixXcd& m, const permrep::Perm& p, int k);
/// Dense X_p on the replicated block space (for proportionality checks).
Eigen::MatrixXcd permutation_operator(const permrep::Perm& p, int k);

/// S^{(n)}(P_S, P_S'; A) evaluated from the tensor as the linear expectation
/// (1/(1-n)) log2 tr[X_{+1}^{P} Sigma~]; requires the unnormalized tensor of a
/// normalized state.
double renyi_from_replica_tensor(const ReplicaTensor& rt, const std::vector<int>& block_positions);

struct GeneratorReport {
    double s_residual = 0;       // rotation: X_{+1} S X_{-1} = S
    double h_residual = 0;       // reflection + dagger: X_r S^dag X_r = S
    double e_residual = 0;       // plain LUE generator: X_r X_{+1} S X_r = S
    double e_lu_ket = -1;        // with W^{(x)n} multiplying from the left
    double e_lu_conj = -1;       // with W^{(x)n} conjugation
    std::string lu_convention;   // which adjusted convention met the tolerance
};

/// Residuals are Frobenius norms relative to ||Sigma~||. If `local_unitary`
/// (one k-qubit block unitary W) is given, the E check is repeated with
/// W^{(x)n} inserted, trying the ket-side convention first.
GeneratorReport check_replica_generators(const ReplicaTensor& rt,
                                         const Eigen::MatrixXcd* local_unitary = nullptr,
                                         double tol = 1e-9);

/// Block-local species swap prod_x SWAP(x_a, x_b) over S (and S') positions.
Eigen::MatrixXcd species_swap_matrix(const ReplicaTensor& rt);

struct Proportionality {
    bool proportional = false;
    std::complex<double> ratio;
    double residual = 1;
};
Proportionality proportional_to_permutation(const ReplicaTensor& rt, const permrep::Perm& p,
                                            double tol = 1e-9);

struct KernelCheck {
    double factorization_residual = 0;  // || K^(n) - K^(1) kron ... || / ||K^(n)||
    double trace_residual = 0;          // n = 1 trace preservation
};

/// Builds the one-step conditional replica kernel (no apparatus) two ways:
/// directly from the n-replica definition and as the n-fold Kronecker power of
/// the n = 1 kernel. `u` acts on sys+env qubits (system = low bits), the
/// environment starts in |0...0>.
KernelCheck replica_kernel_check(int sys_qubits, int env_qubits, const Eigen::MatrixXcd& u, int n);

}  // namespace densequantum

#endif
