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

#include "labctl/verify.hpp"

#include <cmath>
#include <ostream>

#include "densequantum/circuit.hpp"
#include "densequantum/ie_checks.hpp"
#include "permrep/brick_weight.hpp"
#include "permrep/replica_sets.hpp"
#include "permrep/weingarten.hpp"
#include "pottsrbc/sw.hpp"
#include "stabcore/experiment.hpp"

namespace labctl {

namespace {

struct Reporter {
    std::ostream& out;
    int failures = 0;
    void check(const char* name, bool ok) {
        out << (ok ? "[ ok ] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    }
};

}  // namespace

int run_verify(std::ostream& out, bool quick) {
    Reporter r{out};

    {
        bool ok = true;
        for (int m = 2; m <= 4; ++m) {
            for (int d = 2; d <= 6; ++d) {
                if (d < m) continue;
                ok = ok && permrep::verify_inversion(permrep::gram_matrix(d, m),
                                                     permrep::weingarten_table(d, m));
            }
        }
        bool degeneracy_ok = false;
        try {
            permrep::weingarten_table(2, 4);
        } catch (const permrep::degeneracy_error&) {
            degeneracy_ok = true;
        }
        r.check("weingarten inversion exact (m <= 4) + degeneracy detection", ok && degeneracy_ok);
    }
    {
        bool ok = permrep::centralizer_of_swap(2).size() == 8 &&
                  permrep::centralizer_of_swap(3).size() == 48 && permrep::w_plus_set(2).h == 2 &&
                  permrep::w_plus_set(3).h == 5 && permrep::max_cycle_bound(3) == 4;
        if (!quick) {
            ok = ok && permrep::centralizer_of_swap(4).size() == 384 && permrep::w_plus_set(4).h == 14;
        }
        r.check("replica sets: centralizer sizes, h(n), max-cycle bound", ok);
    }
    {
        using permrep::Rational;
        permrep::Perm id2 = permrep::Perm::identity(2);
        bool ok = permrep::brick_weight(2, 1, id2, id2) == Rational(1) / 15;
        r.check("brick weight frozen value W(1,1) = 1/15 at q=2, n=1", ok);
    }
    {
        bool ok = true;
        for (uint64_t seed : {3ULL, 4ULL}) {
            stabcore::CircuitSpec spec;
            spec.L = 6;
            spec.T = quick ? 4 : 8;
            spec.p = 0.4;
            spec.master_seed = seed;
            spec.partition = {2, 0, 4};
            stabcore::Experiment e(spec);
            for (int t = 0; t < spec.T; ++t) {
                e.step();
                ok = ok && stabcore::ie_deviation(e) == 0 && stabcore::order_parameter_O(e) >= 0;
            }
            ok = ok && e.tableau().check_invariants();
        }
        r.check("stabilizer IE symmetry exact on every sampled layer", ok);
    }
    {
        stabcore::CircuitSpec spec;
        spec.L = 4;
        spec.T = 4;
        spec.p = 0.4;
        spec.master_seed = 11;
        spec.partition = {1, 0, 3};
        stabcore::Experiment stab(spec);
        densequantum::DenseCircuit dense(spec);
        for (int t = 0; t < spec.T; ++t) {
            stab.step();
            dense.step();
        }
        bool ok = true;
        auto cmp = [&](const std::vector<int>& cols) {
            ok = ok && std::abs(dense.state().renyi_entropy(cols, 2) - stab.entropy(cols)) < 1e-9;
        };
        cmp(stab.system_cols());
        cmp(stab.apparatus_cols());
        cmp(stab.site_cols(0, 2));
        r.check("dense replay matches the stabilizer engine exactly", ok);
    }
    {
        stabcore::CircuitSpec spec;
        spec.L = 2;
        spec.T = 2;
        spec.p = 0.6;
        spec.master_seed = 5;
        spec.gate_family = stabcore::GateFamily::haar2;
        spec.partition = {1, 0, 1};
        densequantum::DenseState st = densequantum::run_circuit_dense(spec);
        auto rep = densequantum::check_ie_entropies(st, {1, 2, 3},
                                                    densequantum::all_site_partitions(st));
        r.check("dense IE deviations below 1e-9",
                rep.max_ie_deviation < 1e-9 && rep.max_complement_deviation < 1e-9 &&
                    rep.min_conditional_entropy > -1e-9);
    }
    {
        pottsrbc::RbcParams params;
        params.h = 2;
        params.nu = 0.45;
        core::Rng rng(17);
        pottsrbc::RbcLattice lat(8, 4);
        const int sweeps = quick ? 4000 : 20000;
        double bond_mean = 0;
        for (int s = 0; s < 100; ++s) pottsrbc::sw_sweep(lat, params, rng);
        for (int s = 0; s < sweeps; ++s) {
            pottsrbc::sw_sweep(lat, params, rng);
            double present = 0;
            for (auto b : lat.bonds()) present += b;
            bond_mean += present / lat.edges().size();
        }
        bond_mean /= sweeps;
        // ES bond marginal: nu * P(spins equal across an edge); for h = 2 the
        // high-temperature edge-agreement stays within (0.5, 1), bounding the
        // density into (nu/2, nu).
        bool ok = bond_mean > params.nu / 2 && bond_mean < params.nu;
        r.check("edwards-sokal bond density in the exact bounds", ok);
    }
    {
        stabcore::CircuitSpec spec;
        spec.L = 8;
        spec.T = 8;
        spec.p = 0.2;
        spec.master_seed = 21;
        spec.partition = {2, 1, 5};
        auto a = stabcore::run_trajectory(spec);
        auto b = stabcore::run_trajectory(spec);
        r.check("trajectory determinism (identical records)", a == b);
    }
    out << (r.failures == 0 ? "verify: all checks passed\n"
                            : "verify: INVARIANT VIOLATIONS DETECTED\n");
    return r.failures;
}

}  // namespace labctl
