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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "densequantum/circuit.hpp"
#include "densequantum/dense_state.hpp"
#include "densequantum/haar.hpp"
#include "densequantum/ie_checks.hpp"
#include "densequantum/replica_tensor.hpp"
#include "permrep/weingarten.hpp"
#include "stabcore/experiment.hpp"

using namespace densequantum;
using stabcore::CircuitSpec;

namespace {

// Independent contraction oracle: evolves the full state vector by explicitly
// embedding each 4x4 gate into the 2^N unitary with Kronecker products. Slow
// and deliberately separate from DenseState's in-place kernels.
struct KronOracle {
    int n = 0;
    Eigen::VectorXcd psi;

    explicit KronOracle(int qubits) : n(qubits), psi(Eigen::VectorXcd::Zero(1LL << qubits)) {
        psi(0) = 1.0;
    }
    void add_qubit() {
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(psi.size() * 2);
        next.head(psi.size()) = psi;
        psi = std::move(next);
        ++n;
    }
    void apply(const Eigen::Matrix4cd& u, int qa, int qb) {
        const int64_t dim = 1LL << n;
        Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(dim, dim);
        for (int64_t col = 0; col < dim; ++col) {
            int ca = (col >> qa) & 1, cb = (col >> qb) & 1;
            for (int ra = 0; ra < 2; ++ra) {
                for (int rb = 0; rb < 2; ++rb) {
                    int64_t row = (col & ~((1LL << qa) | (1LL << qb))) |
                                  (static_cast<int64_t>(ra) << qa) | (static_cast<int64_t>(rb) << qb);
                    big(row, col) = u(2 * rb + ra, 2 * cb + ca);
                }
            }
        }
        psi = big * psi;
    }
    double entropy(const std::vector<int>& region, int nidx) const {
        const int r = static_cast<int>(region.size());
        Eigen::MatrixXcd m(1LL << r, psi.size() >> r);
        std::vector<int> comp;
        for (int q = 0; q < n; ++q) {
            if (std::find(region.begin(), region.end(), q) == region.end()) comp.push_back(q);
        }
        for (int64_t idx = 0; idx < psi.size(); ++idx) {
            int64_t ri = 0, ci = 0;
            for (int i = 0; i < r; ++i) ri |= ((idx >> region[i]) & 1LL) << i;
            for (size_t i = 0; i < comp.size(); ++i) ci |= ((idx >> comp[i]) & 1LL) << i;
            m(ri, ci) = psi(idx);
        }
        Eigen::MatrixXcd rho = m * m.adjoint();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
        std::vector<double> lam(es.eigenvalues().data(), es.eigenvalues().data() + rho.rows());
        return spectrum_renyi(lam, nidx);
    }
};

Eigen::Matrix4cd swap_gate() {
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    s(0, 0) = s(3, 3) = 1;
    s(1, 2) = s(2, 1) = 1;
    return s;
}

}  // namespace

TEST_CASE("bell pairs entropies") {
    DenseState one = DenseState::bell_pairs(1);
    CHECK(one.renyi_entropy(std::vector<int>{0}, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one.renyi_entropy(std::vector<int>{0}, 3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one.renyi_entropy(std::vector<int>{0, 1}, 1) == doctest::Approx(0.0).epsilon(1e-12));

    DenseState two = DenseState::bell_pairs(2);
    CHECK(two.renyi_entropy(std::vector<int>{0, 2}, 2) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("haar unitary: unitarity and Weingarten moments") {
    core::Rng rng(5);
    for (int dim : {2, 4}) {
        Eigen::MatrixXcd u = haar_unitary(dim, rng);
        CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).norm() < 1e-12);
    }
    // first moment: avg U_ij conj(U_kl) = delta_ik delta_jl / dim
    const int dim = 3, samples = 10000;
    Eigen::MatrixXcd acc00 = Eigen::MatrixXcd::Zero(dim, dim);
    std::complex<double> off = 0;
    for (int s = 0; s < samples; ++s) {
        Eigen::MatrixXcd u = haar_unitary(dim, rng);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) acc00(i, j) += u(i, j) * std::conj(u(i, j));
        }
        off += u(0, 1) * std::conj(1.0 * u(1, 0));
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            CHECK(std::abs(acc00(i, j) / static_cast<double>(samples) - 1.0 / dim) < 2e-2);
        }
    }
    CHECK(std::abs(off / static_cast<double>(samples)) < 2e-2);

    // second moment at dim=2 matches the exact n=2 Weingarten table
    auto wg = permrep::weingarten_table(2, 2);
    auto elems = permrep::all_perms(2);
    auto exact_moment = [&](int i1, int i2, int j1, int j2, int m1, int m2, int r1, int r2) {
        double val = 0;
        int iv[2] = {i1, i2}, jv[2] = {j1, j2}, mv[2] = {m1, m2}, rv[2] = {r1, r2};
        for (const auto& tau : elems) {
            for (const auto& sigma : elems) {
                bool ok = true;
                for (int k = 0; k < 2 && ok; ++k) {
                    ok = (iv[k] == mv[sigma(k)]) && (jv[k] == rv[tau(k)]);
                }
                if (ok) val += static_cast<double>(wg.entry(tau, sigma));
            }
        }
        return val;
    };
    const int s2 = 40000;
    std::complex<double> m_diag = 0, m_cross = 0;
    core::Rng rng2(77);
    for (int s = 0; s < s2; ++s) {
        Eigen::MatrixXcd u = haar_unitary(2, rng2);
        m_diag += u(0, 0) * u(1, 1) * std::conj(u(0, 0) * u(1, 1));
        m_cross += u(0, 0) * u(1, 1) * std::conj(u(0, 1) * u(1, 0));
    }
    CHECK(std::abs(m_diag / static_cast<double>(s2) - exact_moment(0, 1, 0, 1, 0, 1, 0, 1)) < 5e-2);
    CHECK(std::abs(m_cross / static_cast<double>(s2) - exact_moment(0, 1, 0, 1, 0, 1, 1, 0)) < 5e-2);
}

TEST_CASE("renyi entropies: two code paths and monotonicity") {
    // random 8-qubit state
    Register reg;
    for (int i = 0; i < 8; ++i) reg.add({Role::S, i, -1});
    DenseState st(reg);
    core::Rng rng(9);
    for (int layer = 0; layer < 12; ++layer) {
        int qa = static_cast<int>(rng.next_below(8));
        int qb = static_cast<int>((qa + 1 + rng.next_below(7)) % 8);
        st.apply_2q(qa, qb, haar_unitary(4, rng));
    }
    st.assert_normalized();
    std::vector<int> region{0, 2, 5};
    double via_spec = st.renyi_entropy(region, 2);
    Eigen::MatrixXcd rho = st.reduced_density(region);
    double via_trace = -std::log2((rho * rho).trace().real());
    CHECK(std::abs(via_spec - via_trace) < 1e-10);

    for (int n = 1; n < 5; ++n) {
        CHECK(st.renyi_entropy(region, n) >= st.renyi_entropy(region, n + 1) - 1e-12);
    }
    // pure-state complementarity
    std::vector<int> comp{1, 3, 4, 6, 7};
    for (int n : {1, 2, 3}) {
        CHECK(std::abs(st.renyi_entropy(region, n) - st.renyi_entropy(comp, n)) < 1e-9);
    }
    CHECK(st.renyi_entropy(std::vector<int>{}, 2) == 0.0);
}

TEST_CASE("permutation operators satisfy the replica trace identity") {
    // tr[X_p rho^{(x) n}] = prod_cycles tr[rho^{|c|}]
    Register reg;
    reg.add({Role::S, 0, -1});
    reg.add({Role::S, 1, -1});
    reg.add({Role::E, -1, -1});
    DenseState st(reg);
    core::Rng rng(31);
    st.apply_2q(0, 1, haar_unitary(4, rng));
    st.apply_2q(1, 2, haar_unitary(4, rng));
    st.apply_2q(0, 2, haar_unitary(4, rng));
    Eigen::MatrixXcd rho = st.reduced_density(std::vector<int>{0, 1});

    const int n = 3, k = 2;
    Eigen::MatrixXcd rho_n = rho;
    for (int r = 1; r < n; ++r) {
        Eigen::MatrixXcd next(rho_n.rows() * 4, rho_n.cols() * 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                next.block(i * rho_n.rows(), j * rho_n.cols(), rho_n.rows(), rho_n.cols()) =
                    rho(i, j) * rho_n;
            }
        }
        rho_n = std::move(next);
    }
    for (const permrep::Perm& p : permrep::all_perms(n)) {
        std::complex<double> lhs = (permutation_operator(p, k) * rho_n).trace();
        std::complex<double> rhs = 1.0;
        for (int len : p.cycle_type()) {
            Eigen::MatrixXcd pow = Eigen::MatrixXcd::Identity(4, 4);
            for (int i = 0; i < len; ++i) pow = pow * rho;
            rhs *= pow.trace();
        }
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("probe dilations") {
    // projective measurement on psi0|0> + psi1|1>
    Register reg;
    reg.add({Role::S, 0, -1});
    DenseState st(reg);
    Eigen::Matrix2cd rot;
    double th = 0.7;
    rot << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    st.apply_1q(0, rot);
    apply_probe(st, ProbeKind::projective_measurement, 0);
    Eigen::MatrixXcd rho_sa = st.reduced_density(std::vector<int>{0, 1});
    const double w0 = std::cos(th) * std::cos(th), w1 = std::sin(th) * std::sin(th);
    CHECK(std::abs(rho_sa(0, 0).real() - w0) < 1e-12);
    CHECK(std::abs(rho_sa(3, 3).real() - w1) < 1e-12);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) CHECK(std::abs(rho_sa(i, j)) < 1e-12);
        }
    }

    // eigenstate |0>: system unchanged, apparatus |0>
    Register reg2;
    reg2.add({Role::S, 0, -1});
    DenseState st2(reg2);
    apply_probe(st2, ProbeKind::projective_measurement, 0);
    CHECK(st2.renyi_entropy(std::vector<int>{0}, 1) == doctest::Approx(0.0));
    CHECK(st2.renyi_entropy(std::vector<int>{1}, 1) == doctest::Approx(0.0));

    // noisy transduction on a site whose a,b qubits hold Bell halves
    Register reg3;
    reg3.add({Role::S, 0, 0});
    reg3.add({Role::S, 0, 1});
    DenseState st3(reg3);
    int r1 = st3.add_qubit({Role::Sp, 0, 0});
    int r2 = st3.add_qubit({Role::Sp, 0, 1});
    st3.apply_h(0);
    st3.apply_cnot(0, r1);
    st3.apply_h(1);
    st3.apply_cnot(1, r2);
    apply_probe(st3, ProbeKind::noisy_transduction, 0);
    CHECK(st3.num_qubits() == 6);
    CHECK(st3.renyi_entropy(st3.reg().apparatus_indices(), 1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(st3.renyi_entropy(st3.reg().environment_indices(), 1) == doctest::Approx(1.0).epsilon(1e-10));

    // incompatible-probe errors
    CHECK_THROWS_AS(apply_probe(st3, ProbeKind::projective_measurement, 0), std::invalid_argument);
    Register reg4;
    reg4.add({Role::S, 0, -1});
    DenseState st4(reg4);
    CHECK_THROWS_AS(apply_probe(st4, ProbeKind::noisy_transduction, 0), std::invalid_argument);
    CHECK_THROWS_AS(apply_probe(st4, ProbeKind::projective_measurement, 3), std::out_of_range);
}

TEST_CASE("dense brickwork: trivial limits and the contraction oracle") {
    CircuitSpec spec;
    spec.L = 2;
    spec.T = 0;
    spec.p = 0.0;
    spec.partition = {1, 0, 1};
    DenseState st = run_circuit_dense(spec);
    CHECK(st.num_qubits() == 4);
    CHECK(st.renyi_entropy(std::vector<int>{0, 1, 2, 3}, 1) == doctest::Approx(0.0));

    // p=0, any T: no apparatus or environment appears
    spec.T = 3;
    spec.gate_family = stabcore::GateFamily::haar2;
    DenseState st2 = run_circuit_dense(spec);
    CHECK(st2.reg().apparatus_indices().empty());
    CHECK(st2.reg().environment_indices().empty());

    // L=2, T=2, p=1 against the independent kron-based oracle: identical
    // bookkeeping (swap-as-relabel), independent gate-application math.
    spec.T = 2;
    spec.p = 1.0;
    spec.master_seed = 4242;
    DenseCircuit circ(spec);
    KronOracle oracle(4);
    std::array<std::array<int, 2>, 2> osys{{{0, 1}, {2, 3}}};
    for (int t = 0; t < 2; ++t) {
        const int x = (t % 2 == 0) ? 0 : 1, y = (x + 1) % 2;
        core::Rng rng(spec.gate_seed(t, x));
        Eigen::Matrix4cd m = haar_unitary(4, rng);
        oracle.apply(m, osys[x][0], osys[y][0]);
        oracle.apply(m, osys[x][1], osys[y][1]);
        oracle.apply(m, osys[x][1], osys[y][0]);
        oracle.apply(m, osys[x][0], osys[y][1]);
        for (int s = 0; s < 2; ++s) {
            if (spec.eta(t, s)) {
                oracle.add_qubit();
                oracle.add_qubit();
                osys[s] = {oracle.n - 2, oracle.n - 1};
            }
        }
        circ.step();
    }
    REQUIRE(circ.transduction_events() == 4);
    CHECK((circ.state().amplitudes() - oracle.psi).norm() < 1e-12);
    std::vector<int> circ_sys = circ.system_qubits();
    for (int n : {1, 2, 3}) {
        CHECK(std::abs(circ.state().renyi_entropy(circ_sys, n) - oracle.entropy(circ_sys, n)) < 1e-9);
        CHECK(std::abs(circ.state().renyi_entropy(circ.apparatus(), n) -
                       oracle.entropy(circ.apparatus(), n)) < 1e-9);
    }
}

TEST_CASE("cross-simulator: dense replay of a clifford spec matches stabcore exactly") {
    CircuitSpec spec;
    spec.L = 4;
    spec.T = 5;
    spec.p = 0.4;
    spec.master_seed = 314;
    spec.partition = {1, 0, 3};
    stabcore::Experiment stab(spec);
    DenseCircuit dense(spec);
    for (int t = 0; t < spec.T; ++t) {
        stab.step();
        dense.step();
    }
    REQUIRE(stab.transduction_events() == dense.transduction_events());
    auto check_region = [&](const std::vector<int>& cols) {
        int sbits = stab.entropy(cols);
        double dbits = dense.state().renyi_entropy(cols, 2);
        CHECK(std::abs(dbits - sbits) < 1e-9);
    };
    check_region(stab.system_cols());
    check_region(stab.apparatus_cols());
    check_region(stab.environment_cols());
    check_region(stab.site_cols(0, 2));
    check_region(stab.site_cols(1, 3));
}

TEST_CASE("IE symmetry: noisy transduction passes, single transduction fails") {
    int counter_violations = 0, counter_total = 0;
    for (uint64_t seed = 0; seed < 6; ++seed) {
        CircuitSpec spec;
        spec.L = 2;
        spec.T = 3;
        spec.p = 0.6;
        spec.master_seed = 1000 + seed;
        spec.gate_family = stabcore::GateFamily::haar2;
        spec.partition = {1, 0, 1};
        if (DenseCircuit::qubit_budget(spec, DenseCircuit::ProbeMode::noisy_transduction) > 18) continue;
        DenseState st = run_circuit_dense(spec);
        auto rep = check_ie_entropies(st, {1, 2, 3}, all_site_partitions(st));
        CHECK(rep.max_ie_deviation < 1e-9);
        CHECK(rep.max_complement_deviation < 1e-9);
        CHECK(rep.min_conditional_entropy > -1e-9);

        DenseCircuit counter(spec, DenseCircuit::ProbeMode::single_transduction);
        for (int t = 0; t < spec.T; ++t) counter.step();
        if (counter.transduction_events() == 0) continue;
        ++counter_total;
        auto crep = check_ie_entropies(counter.state(), {1, 2}, all_site_partitions(counter.state()));
        if (crep.max_ie_deviation > 0.1) ++counter_violations;
    }
    CHECK(counter_total >= 4);
    CHECK(counter_violations == counter_total);
}

TEST_CASE("conditional replica tensor: factorization with no apparatus") {
    // environment coupling only: Sigma~ = rho^{(x)2}
    Register reg;
    reg.add({Role::S, 0, -1});
    reg.add({Role::S, 1, -1});
    DenseState st(reg);
    int e = st.add_qubit({Role::E, -1, -1});
    core::Rng rng(8);
    st.apply_2q(0, 1, haar_unitary(4, rng));
    st.apply_2q(1, e, haar_unitary(4, rng));
    ReplicaTensor rt = conditional_replica_tensor(st, 2);
    CHECK(std::abs(rt.mat.trace().imag()) < 1e-12);
    CHECK(rt.mat.trace().real() > 0);

    Eigen::MatrixXcd rho = st.reduced_density(std::vector<int>{0, 1});
    Eigen::MatrixXcd rho2(16, 16);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) rho2.block(i * 4, j * 4, 4, 4) = rho(i, j) * rho;
    }
    CHECK((rt.mat - rho2).norm() < 1e-10);
}

TEST_CASE("conditional replica tensor: entropies match the state") {
    ProbeExperimentSpec pe;
    pe.sites = 2;
    pe.rounds = 2;
    pe.probe_prob = 0.7;
    pe.kind = ProbeKind::projective_measurement;
    pe.seed = 3;
    DenseState st = run_probe_experiment(pe);
    for (int n : {2, 3}) {
        ReplicaTensor rt = conditional_replica_tensor(st, n);
        // P = site 0 of S (block position 0)
        double via_tensor = renyi_from_replica_tensor(rt, {0});
        std::vector<int> region = st.reg().site_indices(0);
        auto app = st.reg().apparatus_indices();
        region.insert(region.end(), app.begin(), app.end());
        double direct = st.renyi_entropy(region, n);
        CHECK(std::abs(via_tensor - direct) < 1e-9);
    }
}

TEST_CASE("replica generators: measurement dilation passes S, H, E") {
    for (int n : {2, 3}) {
        ProbeExperimentSpec pe;
        pe.sites = 2;
        pe.rounds = 2;
        pe.probe_prob = 0.8;
        pe.kind = ProbeKind::projective_measurement;
        pe.seed = 17 + n;
        DenseState st = run_probe_experiment(pe);
        ReplicaTensor rt = conditional_replica_tensor(st, n);
        auto rep = check_replica_generators(rt);
        CHECK(rep.s_residual < 1e-9);
        CHECK(rep.h_residual < 1e-9);
        CHECK(rep.e_residual < 1e-9);
        // n=2: E passing implies X_{+1} Sigma~ = Sigma~
        if (n == 2) {
            permrep::Perm swap2 = permrep::Perm::transposition(2, 0, 1);
            CHECK((left_apply_perm(swap2, rt.mat, rt.k) - rt.mat).norm() / rt.mat.norm() < 1e-9);
        }
    }
}

TEST_CASE("replica tensor of bell-apparatus transduction is a cyclic permutation") {
    for (int n : {2, 3}) {
        ProbeExperimentSpec pe;
        pe.sites = 1;
        pe.rounds = 1;
        pe.probe_prob = 1.0;
        pe.kind = ProbeKind::transduction;
        pe.bell_apparatus = true;
        pe.seed = 5;
        DenseState st = run_probe_experiment(pe);
        ReplicaTensor rt = conditional_replica_tensor(st, n);
        std::vector<uint8_t> plus(n), minus(n);
        for (int i = 0; i < n; ++i) {
            plus[i] = static_cast<uint8_t>((i + 1) % n);
            minus[i] = static_cast<uint8_t>((i + n - 1) % n);
        }
        auto prop_plus = proportional_to_permutation(rt, permrep::Perm(plus));
        auto prop_minus = proportional_to_permutation(rt, permrep::Perm(minus));
        CHECK((prop_plus.proportional || prop_minus.proportional));
        MESSAGE("n=", n, ": Sigma~ proportional to X_{+1}: ", prop_plus.proportional,
                ", X_{-1}: ", prop_minus.proportional);

        // generator behavior must match the pure-permutation prediction
        auto rep = check_replica_generators(rt);
        const permrep::Perm cyc = prop_plus.residual <= prop_minus.residual ? permrep::Perm(plus)
                                                                            : permrep::Perm(minus);
        ReplicaTensor pure = rt;
        pure.mat = permutation_operator(cyc, rt.k);
        auto pred = check_replica_generators(pure);
        CHECK(std::abs(rep.s_residual - pred.s_residual) < 1e-8);
        CHECK(std::abs(rep.h_residual - pred.h_residual) < 1e-8);
        CHECK(std::abs(rep.e_residual - pred.e_residual) < 1e-8);
        if (n == 3) {
            // reflection alone is not a symmetry of an n-cycle for n > 2
            Eigen::MatrixXcd xr = permutation_operator(permrep::Perm(std::vector<uint8_t>{2, 1, 0}), rt.k);
            double refl_alone = (xr * rt.mat * xr - rt.mat).norm() / rt.mat.norm();
            CHECK(refl_alone > 0.1);
            double herm_alone = (rt.mat.adjoint() - rt.mat).norm() / rt.mat.norm();
            CHECK(herm_alone > 0.1);
        }
    }
}

TEST_CASE("noisy transduction: n=2 LU-adjusted E generator passes under a documented convention") {
    // master_seed 2 leaves untransduced system qubits behind (3 of 4 possible
    // events), so the species swap genuinely matters.
    CircuitSpec spec;
    spec.L = 2;
    spec.T = 2;
    spec.p = 0.5;
    spec.master_seed = 2;
    spec.gate_family = stabcore::GateFamily::haar2;
    spec.partition = {1, 0, 1};
    DenseCircuit circ(spec);
    for (int t = 0; t < spec.T; ++t) circ.step();
    REQUIRE(circ.transduction_events() == 3);
    ReplicaTensor rt = conditional_replica_tensor(circ.state(), 2);
    Eigen::MatrixXcd w = species_swap_matrix(rt);
    auto rep = check_replica_generators(rt, &w);
    CHECK(rep.s_residual < 1e-9);
    CHECK(rep.h_residual < 1e-9);
    // plain E and the ket-side placement both fail; two-sided conjugation holds
    CHECK(rep.e_residual > 0.1);
    CHECK(rep.e_lu_ket > 0.1);
    CHECK(rep.e_lu_conj < 1e-9);
    CHECK(rep.lu_convention == "conjugation");
    MESSAGE("noisy transduction n=2: plain E residual ", rep.e_residual, ", lu ket ", rep.e_lu_ket,
            ", lu conj ", rep.e_lu_conj, " -> convention: ", rep.lu_convention);
}

TEST_CASE("replica kernel factorization") {
    core::Rng rng(12);
    // no environment: exact replication of unitary conjugation
    Eigen::MatrixXcd u0 = haar_unitary(4, rng);
    auto res0 = replica_kernel_check(2, 0, u0, 2);
    CHECK(res0.factorization_residual < 1e-12);
    CHECK(res0.trace_residual < 1e-10);

    // 1 system qubit + 1 erasure, n = 2: 16x16 both ways
    Eigen::MatrixXcd u1 = haar_unitary(4, rng);
    auto res1 = replica_kernel_check(1, 1, u1, 2);
    CHECK(res1.factorization_residual < 1e-10);
    CHECK(res1.trace_residual < 1e-10);

    auto res2 = replica_kernel_check(1, 1, haar_unitary(4, rng), 3);
    CHECK(res2.factorization_residual < 1e-10);
}

TEST_CASE("norm bookkeeping") {
    DenseState st = DenseState::bell_pairs(2);
    core::Rng rng(2);
    for (int i = 0; i < 6; ++i) {
        int qa = static_cast<int>(rng.next_below(4));
        int qb = (qa + 1 + static_cast<int>(rng.next_below(3))) % 4;
        st.apply_2q(qa, qb, haar_unitary(4, rng));
        st.assert_normalized();
    }
}
