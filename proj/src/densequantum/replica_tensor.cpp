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

#include "densequantum/replica_tensor.hpp"

#include <cmath>
#include <functional>

namespace densequantum {

ReplicaTensor ReplicaTensor::normalize() const {
    ReplicaTensor out = *this;
    std::complex<double> tr = mat.trace();
    out.mat /= tr;
    out.normalized = true;
    return out;
}

ReplicaTensor conditional_replica_tensor(const DenseState& st, int n) {
    std::vector<int> block = st.reg().indices(Role::S);
    auto sp = st.reg().indices(Role::Sp);
    block.insert(block.end(), sp.begin(), sp.end());
    return conditional_replica_tensor(st, n, std::move(block));
}

ReplicaTensor conditional_replica_tensor(const DenseState& st, int n, std::vector<int> block) {
    const int k = static_cast<int>(block.size());
    if (n < 1) throw std::invalid_argument("conditional_replica_tensor: n must be >= 1");
    if (n * k > kMaxReplicatedQubits) {
        throw capacity_error("conditional_replica_tensor: " + std::to_string(n * k) +
                             " replicated qubits exceeds the cap of " +
                             std::to_string(kMaxReplicatedQubits));
    }
    std::vector<int> app = st.reg().apparatus_indices();
    std::vector<int> env = st.reg().environment_indices();
    const int nq = st.num_qubits();
    if (static_cast<int>(block.size() + app.size() + env.size()) != nq) {
        throw std::invalid_argument("conditional_replica_tensor: register roles do not partition the state");
    }
    const int m = static_cast<int>(app.size());
    const int l = static_cast<int>(env.size());
    const int64_t dim_u = 1LL << k, dim_a = 1LL << m, dim_e = 1LL << l;

    if (dim_u * dim_u * dim_a * dim_a * 16 > (64LL << 20)) {
        throw capacity_error("conditional_replica_tensor: bond-matrix table exceeds 64 MB");
    }

    // slices T_u : (a, e) -> amplitude
    std::vector<Eigen::MatrixXcd> slices(dim_u, Eigen::MatrixXcd::Zero(dim_a, dim_e));
    const auto& amp = st.amplitudes();
    for (int64_t idx = 0; idx < amp.size(); ++idx) {
        int64_t u = 0, a = 0, e = 0;
        for (int i = 0; i < k; ++i) u |= ((idx >> block[i]) & 1LL) << i;
        for (int i = 0; i < m; ++i) a |= ((idx >> app[i]) & 1LL) << i;
        for (int i = 0; i < l; ++i) e |= ((idx >> env[i]) & 1LL) << i;
        slices[u](a, e) = amp(idx);
    }
    // bond matrices B^{(u,v)}[a, a'] = sum_e psi(u,a,e) conj(psi(v,a',e));
    // Sigma~[(u_vec),(v_vec)] = tr[ B^{(u_0,v_0)} ... B^{(u_{n-1},v_{n-1})} ]
    std::vector<Eigen::MatrixXcd> bonds(static_cast<size_t>(dim_u) * dim_u);
    for (int64_t u = 0; u < dim_u; ++u) {
        for (int64_t v = 0; v < dim_u; ++v) {
            bonds[static_cast<size_t>(u) * dim_u + v] = slices[u] * slices[v].adjoint();
        }
    }

    ReplicaTensor rt;
    rt.n = n;
    rt.k = k;
    rt.block_qubits = block;
    for (int q : block) rt.block_info.push_back(st.reg().info(q));
    const int64_t dim = 1LL << (n * k);
    rt.mat = Eigen::MatrixXcd::Zero(dim, dim);

    std::function<void(int, int64_t, int64_t, const Eigen::MatrixXcd&)> rec =
        [&](int r, int64_t row, int64_t col, const Eigen::MatrixXcd& partial) {
            if (r == n) {
                rt.mat(row, col) = partial.trace();
                return;
            }
            for (int64_t u = 0; u < dim_u; ++u) {
                for (int64_t v = 0; v < dim_u; ++v) {
                    const Eigen::MatrixXcd& b = bonds[static_cast<size_t>(u) * dim_u + v];
                    rec(r + 1, row | (u << (r * k)), col | (v << (r * k)),
                        r == 0 ? b : Eigen::MatrixXcd(partial * b));
                }
            }
        };
    rec(0, 0, 0, Eigen::MatrixXcd::Identity(dim_a, dim_a));
    return rt;
}

uint64_t gather_blocks(uint64_t idx, int n, int k, const permrep::Perm& g) {
    const uint64_t mask = (1ULL << k) - 1;
    uint64_t out = 0;
    for (int r = 0; r < n; ++r) {
        uint64_t blk = (idx >> (g(r) * k)) & mask;
        out |= blk << (r * k);
    }
    return out;
}

Eigen::MatrixXcd left_apply_perm(const permrep::Perm& p, const Eigen::MatrixXcd& m, int k) {
    const int n = p.size();
    const permrep::Perm pinv = p.inverse();
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int64_t y = 0; y < m.rows(); ++y) {
        out.row(y) = m.row(static_cast<int64_t>(gather_blocks(static_cast<uint64_t>(y), n, k, pinv)));
    }
    return out;
}

Eigen::MatrixXcd right_apply_perm(const Eigen::MatrixXcd& m, const permrep::Perm& p, int k) {
    const int n = p.size();
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int64_t x = 0; x < m.cols(); ++x) {
        out.col(x) = m.col(static_cast<int64_t>(gather_blocks(static_cast<uint64_t>(x), n, k, p)));
    }
    return out;
}

Eigen::MatrixXcd permutation_operator(const permrep::Perm& p, int k) {
    const int n = p.size();
    const int64_t dim = 1LL << (n * k);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (int64_t x = 0; x < dim; ++x) {
        out(static_cast<int64_t>(gather_blocks(static_cast<uint64_t>(x), n, k, p)), x) = 1.0;
    }
    return out;
}

double renyi_from_replica_tensor(const ReplicaTensor& rt, const std::vector<int>& block_positions) {
    if (rt.n < 2) throw std::invalid_argument("renyi_from_replica_tensor: needs n >= 2");
    if (rt.normalized) {
        throw std::invalid_argument("renyi_from_replica_tensor: needs the unnormalized tensor");
    }
    // X_{+1}^{P} acts as the cyclic shift on the selected block bits only.
    const int64_t dim = rt.mat.rows();
    uint64_t pmask = 0;
    for (int pos : block_positions) pmask |= 1ULL << pos;
    std::complex<double> acc = 0, trace = 0;
    const uint64_t kmask = (1ULL << rt.k) - 1;
    // tr[X_p M] = sum_x M[w][x] with w_s = x_{p^{-1}(s)}; the same (+1)
    // orientation as the X_{+1}^A baked into the tensor.
    for (int64_t x = 0; x < dim; ++x) {
        uint64_t w = 0;
        for (int r = 0; r < rt.n; ++r) {
            uint64_t blk = (static_cast<uint64_t>(x) >> (r * rt.k)) & kmask;
            uint64_t prev = (static_cast<uint64_t>(x) >> (((r + rt.n - 1) % rt.n) * rt.k)) & kmask;
            uint64_t mixed = (blk & ~pmask) | (prev & pmask);
            w |= mixed << (r * rt.k);
        }
        acc += rt.mat(static_cast<int64_t>(w), x);
        trace += rt.mat(x, x);
    }
    (void)trace;  // tr[Sigma~] = tr[rho_A^n]; the unconditional entropy uses acc alone
    return std::log2(std::abs(acc)) / (1.0 - rt.n);
}

namespace {

double rel_residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& ref) {
    return (a - ref).norm() / ref.norm();
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& w, int n, int k) {
    // W^{(x)n} in the replica-major bit layout (block r occupies bits [r k, (r+1) k))
    const int64_t d1 = w.rows();
    const int64_t dim = 1;
    (void)dim;
    Eigen::MatrixXcd out = w;
    for (int r = 1; r < n; ++r) {
        Eigen::MatrixXcd next(out.rows() * d1, out.cols() * d1);
        // new replica occupies the HIGH bits
        for (int64_t i = 0; i < d1; ++i) {
            for (int64_t j = 0; j < d1; ++j) {
                next.block(i * out.rows(), j * out.cols(), out.rows(), out.cols()) = w(i, j) * out;
            }
        }
        out = std::move(next);
    }
    (void)k;
    return out;
}

}  // namespace

GeneratorReport check_replica_generators(const ReplicaTensor& rt, const Eigen::MatrixXcd* local_unitary,
                                         double tol) {
    const int n = rt.n, k = rt.k;
    using permrep::Perm;
    std::vector<uint8_t> plus(n), refl(n);
    for (int i = 0; i < n; ++i) {
        plus[i] = static_cast<uint8_t>((i + 1) % n);
        refl[i] = static_cast<uint8_t>(n - 1 - i);
    }
    const Perm p_plus{plus};
    const Perm p_refl{refl};
    const Perm p_minus = p_plus.inverse();

    GeneratorReport rep;
    const Eigen::MatrixXcd& s = rt.mat;
    rep.s_residual = rel_residual(right_apply_perm(left_apply_perm(p_plus, s, k), p_minus, k), s);
    rep.h_residual = rel_residual(
        right_apply_perm(left_apply_perm(p_refl, Eigen::MatrixXcd(s.adjoint()), k), p_refl, k), s);
    Eigen::MatrixXcd e_core =
        right_apply_perm(left_apply_perm(p_refl, left_apply_perm(p_plus, s, k), k), p_refl, k);
    rep.e_residual = rel_residual(e_core, s);

    if (local_unitary != nullptr) {
        Eigen::MatrixXcd w = kron_power(*local_unitary, n, k);
        rep.e_lu_ket = rel_residual(w * e_core, s);
        rep.e_lu_conj = rel_residual(w * e_core * w.adjoint(), s);
        if (rep.e_lu_ket < tol) {
            rep.lu_convention = "ket";
        } else if (rep.e_lu_conj < tol) {
            rep.lu_convention = "conjugation";
        }
    }
    return rep;
}

Eigen::MatrixXcd species_swap_matrix(const ReplicaTensor& rt) {
    const int k = rt.k;
    // positions of (site, species) pairs among the block qubits, per role
    std::vector<int> partner(k, -1);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const QubitInfo &a = rt.block_info[i], &b = rt.block_info[j];
            if (a.role == b.role && a.site == b.site && a.species == 0 && b.species == 1) {
                partner[i] = j;
                partner[j] = i;
            }
        }
    }
    const int64_t dim = 1LL << k;
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(dim, dim);
    for (int64_t x = 0; x < dim; ++x) {
        int64_t y = 0;
        for (int i = 0; i < k; ++i) {
            int src = partner[i] >= 0 ? partner[i] : i;
            y |= ((x >> src) & 1LL) << i;
        }
        w(y, x) = 1.0;
    }
    return w;
}

Proportionality proportional_to_permutation(const ReplicaTensor& rt, const permrep::Perm& p, double tol) {
    Eigen::MatrixXcd xp = permutation_operator(p, rt.k);
    Proportionality out;
    out.ratio = (xp.adjoint() * rt.mat).trace() / static_cast<double>(xp.rows());
    out.residual = (rt.mat - out.ratio * xp).norm() / rt.mat.norm();
    out.proportional = out.residual < tol;
    return out;
}

KernelCheck replica_kernel_check(int sys_qubits, int env_qubits, const Eigen::MatrixXcd& u, int n) {
    const int k = sys_qubits, e = env_qubits;
    const int64_t ds = 1LL << k, de = 1LL << e;
    if (u.rows() != ds * de) throw std::invalid_argument("replica_kernel_check: unitary size mismatch");
    if (n * (k + e) > 8) throw capacity_error("replica_kernel_check: replicated space too large");

    // n = 1 kernel on vec'd system operators, flat index beta = i + ds*j
    auto k1_apply = [&](const Eigen::MatrixXcd& op) {
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(ds * de, ds * de);
        for (int64_t i = 0; i < ds; ++i) {
            for (int64_t j = 0; j < ds; ++j) rho(i, j) = op(i, j);  // env bits high, in |0>
        }
        Eigen::MatrixXcd out_full = u * rho * u.adjoint();
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(ds, ds);
        for (int64_t ev = 0; ev < de; ++ev) {
            for (int64_t i = 0; i < ds; ++i) {
                for (int64_t j = 0; j < ds; ++j) out(i, j) += out_full(i + ds * ev, j + ds * ev);
            }
        }
        return out;
    };

    Eigen::MatrixXcd k1(ds * ds, ds * ds);
    double trace_residual = 0;
    for (int64_t j = 0; j < ds; ++j) {
        for (int64_t i = 0; i < ds; ++i) {
            Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(ds, ds);
            basis(i, j) = 1.0;
            Eigen::MatrixXcd out = k1_apply(basis);
            trace_residual = std::max(trace_residual, std::abs(out.trace() - basis.trace()));
            for (int64_t jj = 0; jj < ds; ++jj) {
                for (int64_t ii = 0; ii < ds; ++ii) k1(ii + ds * jj, i + ds * j) = out(ii, jj);
            }
        }
    }

    // direct n-replica kernel; replica-major bit layout, env bits above system
    // bits within each replica
    const int64_t dr = ds * de;          // one replica with env
    const int64_t dsys = 1LL << (k * n); // replicated system
    Eigen::MatrixXcd u_rep = u;
    for (int r = 1; r < n; ++r) {
        Eigen::MatrixXcd next(u_rep.rows() * dr, u_rep.cols() * dr);
        for (int64_t i = 0; i < dr; ++i) {
            for (int64_t j = 0; j < dr; ++j) {
                next.block(i * u_rep.rows(), j * u_rep.cols(), u_rep.rows(), u_rep.cols()) =
                    u(i, j) * u_rep;
            }
        }
        u_rep = std::move(next);
    }
    auto sys_to_full = [&](int64_t svec) {
        // scatter per-replica system bits into the replicated (sys+env) index
        int64_t full = 0;
        for (int r = 0; r < n; ++r) {
            int64_t blk = (svec >> (r * k)) & (ds - 1);
            full |= blk << (r * (k + e));
        }
        return full;
    };
    const int64_t dvec = dsys * dsys;
    const int64_t denv_total = 1LL << (e * n);
    std::vector<int64_t> env_scatter(denv_total);
    for (int64_t ev = 0; ev < denv_total; ++ev) {
        int64_t env_part = 0;
        for (int r = 0; r < n; ++r) {
            int64_t eb = (ev >> (r * e)) & (de - 1);
            env_part |= eb << (r * (k + e) + k);
        }
        env_scatter[ev] = env_part;
    }
    Eigen::MatrixXcd k_direct(dvec, dvec), k_kron(dvec, dvec);
    for (int64_t col_i = 0; col_i < dsys; ++col_i) {
        for (int64_t col_j = 0; col_j < dsys; ++col_j) {
            // basis input is rank one, so U rho U^dag is an outer product of columns
            const auto ua = u_rep.col(sys_to_full(col_i));
            const auto ub = u_rep.col(sys_to_full(col_j));
            const int64_t col = col_i + dsys * col_j;
            for (int64_t i = 0; i < dsys; ++i) {
                for (int64_t j = 0; j < dsys; ++j) {
                    std::complex<double> acc = 0;
                    for (int64_t ev = 0; ev < denv_total; ++ev) {
                        acc += ua(sys_to_full(i) | env_scatter[ev]) *
                               std::conj(ub(sys_to_full(j) | env_scatter[ev]));
                    }
                    k_direct(i + dsys * j, col) = acc;
                }
            }
        }
    }
    // Kronecker power of k1 in the same flat layout
    for (int64_t col_i = 0; col_i < dsys; ++col_i) {
        for (int64_t col_j = 0; col_j < dsys; ++col_j) {
            const int64_t col = col_i + dsys * col_j;
            for (int64_t row_i = 0; row_i < dsys; ++row_i) {
                for (int64_t row_j = 0; row_j < dsys; ++row_j) {
                    std::complex<double> prod = 1.0;
                    for (int r = 0; r < n; ++r) {
                        int64_t ci = (col_i >> (r * k)) & (ds - 1);
                        int64_t cj = (col_j >> (r * k)) & (ds - 1);
                        int64_t ri = (row_i >> (r * k)) & (ds - 1);
                        int64_t rj = (row_j >> (r * k)) & (ds - 1);
                        prod *= k1(ri + ds * rj, ci + ds * cj);
                    }
                    k_kron(row_i + dsys * row_j, col) = prod;
                }
            }
        }
    }
    KernelCheck out;
    out.trace_residual = trace_residual;
    out.factorization_residual = (k_direct - k_kron).norm() / k_direct.norm();
    return out;
}

}  // namespace densequantum
