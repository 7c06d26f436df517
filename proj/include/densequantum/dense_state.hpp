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

#ifndef IEXSIM_DENSEQUANTUM_DENSE_STATE_HPP
#define IEXSIM_DENSEQUANTUM_DENSE_STATE_HPP

#include <Eigen/Dense>

#include <span>
#include <stdexcept>
#include <vector>

#include "densequantum/register.hpp"

namespace densequantum {

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 16M amplitudes; every check stays well under a minute at this size.
inline constexpr int kMaxDenseQubits = 24;

/// Pure state over a labeled register. Qubit q is bit q of the amplitude
/// index (little-endian); fresh qubits append at the top.
class DenseState {
  public:
    DenseState() = default;
    explicit DenseState(Register reg);

    /// count Bell pairs (|00>+|11>)/sqrt(2); pair i couples an S qubit at site i
    /// to its S' partner.
    static DenseState bell_pairs(int count);

    const Register& reg() const { return reg_; }
    Register& reg() { return reg_; }
    int num_qubits() const { return reg_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amp_; }
    Eigen::VectorXcd& amplitudes() { return amp_; }

    int add_qubit(QubitInfo info);  // appends |0>

    void apply_1q(int q, const Eigen::Matrix2cd& u);
    /// Gate basis index = 2*b_qb + b_qa (qa is the low bit), matching the
    /// stabilizer engine's Clifford2::to_matrix convention.
    void apply_2q(int qa, int qb, const Eigen::Matrix4cd& u);
    void apply_swap(int a, int b);
    void apply_cnot(int control, int target);
    void apply_h(int q);

    double norm() const { return amp_.norm(); }
    /// |norm - 1| must stay < 1e-10 after unitary application.
    void assert_normalized() const;

    /// Eigenvalues of the reduced density matrix on `region` (descending).
    std::vector<double> reduced_spectrum(std::span<const int> region) const;
    Eigen::MatrixXcd reduced_density(std::span<const int> region) const;

    /// Base-2 Renyi entropy; n = 1 is von Neumann. Empty region -> 0.
    double renyi_entropy(std::span<const int> region, int n) const;

  private:
    Register reg_;
    Eigen::VectorXcd amp_;
};

double spectrum_renyi(const std::vector<double>& spectrum, int n);

}  // namespace densequantum

#endif
