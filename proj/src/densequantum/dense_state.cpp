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

#include "densequantum/dense_state.hpp"

#include <cmath>

namespace densequantum {

namespace {

void require_dense_cap(int n) {
    if (n > kMaxDenseQubits) {
        throw capacity_error("DenseState: " + std::to_string(n) + " qubits exceeds the cap of " +
                             std::to_string(kMaxDenseQubits));
    }
}

}  // namespace

DenseState::DenseState(Register reg) : reg_(std::move(reg)) {
    require_dense_cap(reg_.size());
    amp_ = Eigen::VectorXcd::Zero(1LL << reg_.size());
    amp_(0) = 1.0;
}

DenseState DenseState::bell_pairs(int count) {
    Register reg;
    for (int i = 0; i < count; ++i) {
        reg.add({Role::S, i, -1});
        reg.add({Role::Sp, i, -1});
    }
    DenseState st(reg);
    for (int i = 0; i < count; ++i) {
        st.apply_h(2 * i);
        st.apply_cnot(2 * i, 2 * i + 1);
    }
    return st;
}

int DenseState::add_qubit(QubitInfo info) {
    require_dense_cap(reg_.size() + 1);
    int q = reg_.add(info);
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(amp_.size() * 2);
    next.head(amp_.size()) = amp_;
    amp_ = std::move(next);
    return q;
}

void DenseState::apply_1q(int q, const Eigen::Matrix2cd& u) {
    const int64_t bit = 1LL << q;
    const int64_t dim = amp_.size();
    for (int64_t base = 0; base < dim; ++base) {
        if (base & bit) continue;
        const int64_t i1 = base | bit;
        const std::complex<double> a0 = amp_(base), a1 = amp_(i1);
        amp_(base) = u(0, 0) * a0 + u(0, 1) * a1;
        amp_(i1) = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void DenseState::apply_2q(int qa, int qb, const Eigen::Matrix4cd& u) {
    if (qa == qb) throw std::invalid_argument("apply_2q: qubits must differ");
    const int64_t ba = 1LL << qa, bb = 1LL << qb;
    const int64_t dim = amp_.size();
    for (int64_t base = 0; base < dim; ++base) {
        if (base & (ba | bb)) continue;
        const int64_t i0 = base, i1 = base | ba, i2 = base | bb, i3 = base | ba | bb;
        const Eigen::Vector4cd v{amp_(i0), amp_(i1), amp_(i2), amp_(i3)};
        const Eigen::Vector4cd w = u * v;
        amp_(i0) = w(0);
        amp_(i1) = w(1);
        amp_(i2) = w(2);
        amp_(i3) = w(3);
    }
}

void DenseState::apply_swap(int a, int b) {
    const int64_t ba = 1LL << a, bb = 1LL << b;
    const int64_t dim = amp_.size();
    for (int64_t base = 0; base < dim; ++base) {
        if (base & (ba | bb)) continue;
        std::swap(amp_(base | ba), amp_(base | bb));
    }
}

void DenseState::apply_cnot(int control, int target) {
    const int64_t bc = 1LL << control, bt = 1LL << target;
    const int64_t dim = amp_.size();
    for (int64_t base = 0; base < dim; ++base) {
        if ((base & bc) && !(base & bt)) std::swap(amp_(base), amp_(base | bt));
    }
}

void DenseState::apply_h(int q) {
    Eigen::Matrix2cd h;
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    apply_1q(q, h);
}

void DenseState::assert_normalized() const {
    if (std::abs(norm() - 1.0) >= 1e-10) {
        throw std::logic_error("DenseState: norm drifted from 1");
    }
}

Eigen::MatrixXcd DenseState::reduced_density(std::span<const int> region) const {
    const int r = static_cast<int>(region.size());
    const int n = num_qubits();
    const int c = n - r;
    std::vector<int> comp;
    comp.reserve(c);
    {
        std::vector<bool> in(n, false);
        for (int q : region) in[q] = true;
        for (int q = 0; q < n; ++q) {
            if (!in[q]) comp.push_back(q);
        }
    }
    Eigen::MatrixXcd m(1LL << r, 1LL << c);
    const int64_t dim = amp_.size();
    for (int64_t idx = 0; idx < dim; ++idx) {
        int64_t ri = 0, ci = 0;
        for (int i = 0; i < r; ++i) ri |= ((idx >> region[i]) & 1LL) << i;
        for (int i = 0; i < c; ++i) ci |= ((idx >> comp[i]) & 1LL) << i;
        m(ri, ci) = amp_(idx);
    }
    return m * m.adjoint();
}

std::vector<double> DenseState::reduced_spectrum(std::span<const int> region) const {
    const int n = num_qubits();
    const int r = static_cast<int>(region.size());
    if (r == 0) return {1.0};
    // Spectra of rho_R and rho_{R^c} coincide for a pure state; diagonalize the
    // smaller side.
    if (2 * r > n) {
        std::vector<bool> in(n, false);
        for (int q : region) in[q] = true;
        std::vector<int> comp;
        comp.reserve(n - r);
        for (int q = 0; q < n; ++q) {
            if (!in[q]) comp.push_back(q);
        }
        return reduced_spectrum(comp);
    }
    Eigen::MatrixXcd rho = reduced_density(region);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(out.rbegin(), out.rend());
    return out;
}

double spectrum_renyi(const std::vector<double>& spectrum, int n) {
    if (n < 1) throw std::invalid_argument("renyi_entropy: n must be >= 1");
    // eigenvalues below 1e-12 are clamped to zero before the log
    if (n == 1) {
        double s = 0;
        for (double lam : spectrum) {
            if (lam > 1e-12) s -= lam * std::log2(lam);
        }
        return s;
    }
    double acc = 0;
    for (double lam : spectrum) {
        if (lam > 1e-12) acc += std::pow(lam, n);
    }
    return std::log2(acc) / (1.0 - n);
}

double DenseState::renyi_entropy(std::span<const int> region, int n) const {
    if (region.empty()) return 0.0;  // empty region: 0 by convention
    return spectrum_renyi(reduced_spectrum(region), n);
}

}  // namespace densequantum
