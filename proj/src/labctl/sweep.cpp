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

#include "labctl/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "densequantum/circuit.hpp"
#include "pottsrbc/sw.hpp"
#include "stabcore/experiment.hpp"

namespace labctl {

namespace fs = std::filesystem;

namespace {

constexpr const char* kCodeVersion = "iexsim 1.0";

struct Point {
    int size_idx;
    int value_idx;
};

stabcore::CircuitSpec spec_for_point(const SweepConfig& cfg, int size_idx, int value_idx,
                                     uint64_t unit_seed) {
    stabcore::CircuitSpec spec = cfg.base;
    spec.L = cfg.sizes[size_idx];
    spec.T = cfg.times.empty() ? 2 * spec.L : cfg.times[size_idx];
    spec.p = cfg.values[value_idx];
    spec.master_seed = unit_seed;
    if (spec.partition.es_sites == 0 && spec.partition.gap_sites == 0 &&
        spec.partition.ps_sites == 0) {
        // default geometry: E_S = L/8 sites, gaps of L/8 on both sides of P_S
        spec.partition.es_sites = std::max(1, spec.L / 8);
        spec.partition.gap_sites = std::max(1, spec.L / 8);
        spec.partition.ps_sites =
            spec.L - spec.partition.es_sites - 2 * spec.partition.gap_sites;
    }
    return spec;
}

bool wanted(const SweepConfig& cfg, const std::string& name) {
    if (cfg.observables.empty()) return true;
    return std::find(cfg.observables.begin(), cfg.observables.end(), name) != cfg.observables.end();
}

std::vector<Row> run_stab_unit(const SweepConfig& cfg, int point_index, int size_idx, int value_idx,
                               int realization, uint64_t unit_seed, std::string* jsonl) {
    stabcore::CircuitSpec spec = spec_for_point(cfg, size_idx, value_idx, unit_seed);
    stabcore::TrajectoryRecord rec = stabcore::run_trajectory(spec);
    if (jsonl) *jsonl = rec.to_jsonl();
    std::vector<Row> rows;
    for (const auto& s : rec.samples) {
        if (!wanted(cfg, s.name)) continue;
        rows.push_back({"stab", unit_seed, spec.L, spec.T, spec.p, realization, s.layer, s.name,
                        static_cast<double>(s.value)});
    }
    (void)point_index;
    return rows;
}

std::vector<Row> run_dense_unit(const SweepConfig& cfg, int point_index, int size_idx, int value_idx,
                                int realization, uint64_t unit_seed, std::string* jsonl) {
    stabcore::CircuitSpec spec = spec_for_point(cfg, size_idx, value_idx, unit_seed);
    densequantum::DenseCircuit circ(spec);
    std::vector<Row> rows;
    auto sample = [&](int layer) {
        const auto& st = circ.state();
        std::vector<int> app = st.reg().apparatus_indices();
        double s_a = st.renyi_entropy(app, 1);
        if (wanted(cfg, "apparatus_entropy")) {
            rows.push_back({"dense", unit_seed, spec.L, spec.T, spec.p, realization, layer,
                            "apparatus_entropy", s_a});
        }
        if (spec.initial_system == stabcore::SystemInit::pure_zero &&
            2 * spec.partition.ps_sites > spec.L && wanted(cfg, "order_parameter")) {
            auto region = [&](std::vector<int> a, const std::vector<int>& b) {
                a.insert(a.end(), b.begin(), b.end());
                return a;
            };
            std::vector<int> p_cols =
                circ.site_qubits(spec.partition.ps_first(spec.L), spec.partition.ps_sites);
            std::vector<int> e_cols = circ.site_qubits(0, spec.partition.es_sites);
            double o = st.renyi_entropy(region(p_cols, app), 1) +
                       st.renyi_entropy(region(e_cols, app), 1) -
                       st.renyi_entropy(region(region(p_cols, e_cols), app), 1) - s_a;
            rows.push_back({"dense", unit_seed, spec.L, spec.T, spec.p, realization, layer,
                            "order_parameter", o});
        }
        if (spec.initial_system == stabcore::SystemInit::mixed_via_reference &&
            wanted(cfg, "coherent_information")) {
            std::vector<int> sa = circ.system_qubits();
            sa.insert(sa.end(), app.begin(), app.end());
            rows.push_back({"dense", unit_seed, spec.L, spec.T, spec.p, realization, layer,
                            "coherent_information", st.renyi_entropy(sa, 1) - s_a});
        }
    };
    for (int t = 0; t < spec.T; ++t) {
        circ.step();
        bool last = (t == spec.T - 1);
        if (last || (spec.measure_stride > 0 && (t + 1) % spec.measure_stride == 0)) sample(t + 1);
    }
    if (spec.T == 0) sample(0);
    if (jsonl) {
        nlohmann::json j{{"spec_hash", spec.hash()}, {"engine", "dense"}, {"rows", rows.size()}};
        *jsonl = j.dump();
    }
    (void)point_index;
    return rows;
}

std::vector<Row> run_potts_unit(const SweepConfig& cfg, int point_index, int size_idx, int value_idx,
                                int realization, uint64_t unit_seed, std::string* jsonl) {
    const int w = cfg.sizes[size_idx];
    const int rows_t = cfg.times.empty() ? w : cfg.times[size_idx];
    pottsrbc::RbcParams params = cfg.potts;
    params.h = cfg.potts_h;
    params.nu = cfg.values[value_idx];
    core::Rng rng(unit_seed);
    pottsrbc::RbcLattice lat(2 * w, rows_t);
    for (int s = 0; s < params.thermalization; ++s) pottsrbc::sw_sweep(lat, params, rng);
    double acc_wrap = 0, acc_conn = 0, acc_lcf = 0, acc_m = 0, acc_m2 = 0, acc_m4 = 0;
    int count = 0;
    for (int s = 0; s < params.sweeps; ++s) {
        pottsrbc::sw_sweep(lat, params, rng);
        if (params.measure_stride > 0 && s % params.measure_stride != 0) continue;
        pottsrbc::Observables obs = pottsrbc::measure(lat, params.h);
        acc_wrap += obs.x_wrapping;
        acc_conn += obs.boundary_connectivity;
        acc_lcf += obs.largest_cluster_fraction;
        acc_m += obs.magnetization;
        acc_m2 += obs.magnetization * obs.magnetization;
        acc_m4 += obs.magnetization * obs.magnetization * obs.magnetization * obs.magnetization;
        ++count;
    }
    std::vector<Row> out;
    auto push = [&](const std::string& name, double v) {
        if (!wanted(cfg, name)) return;
        out.push_back({"potts", unit_seed, w, rows_t, params.nu, realization, params.sweeps, name, v});
    };
    push("wrapping", acc_wrap / count);
    push("connectivity", acc_conn / count);
    push("largest_cluster", acc_lcf / count);
    if (params.h > 1) {
        push("magnetization", acc_m / count);
        double m2 = acc_m2 / count, m4 = acc_m4 / count;
        push("binder", 1.0 - m4 / (3.0 * m2 * m2));
    }
    if (jsonl) {
        nlohmann::json j{{"engine", "potts"}, {"h", params.h}, {"nu", params.nu}, {"W", w},
                         {"rows", rows_t}, {"chain_seed", unit_seed}, {"measurements", count}};
        *jsonl = j.dump();
    }
    (void)point_index;
    return out;
}

}  // namespace

std::vector<Row> run_unit(const SweepConfig& cfg, int point_index, int realization,
                          std::string* jsonl_line) {
    const int num_values = static_cast<int>(cfg.values.size());
    const int size_idx = point_index / num_values;
    const int value_idx = point_index % num_values;
    const uint64_t unit_seed = core::derive(cfg.master_seed, "unit", static_cast<uint64_t>(point_index),
                                            static_cast<uint64_t>(realization));
    switch (cfg.engine) {
        case Engine::stab:
            return run_stab_unit(cfg, point_index, size_idx, value_idx, realization, unit_seed,
                                 jsonl_line);
        case Engine::dense:
            return run_dense_unit(cfg, point_index, size_idx, value_idx, realization, unit_seed,
                                  jsonl_line);
        default:
            return run_potts_unit(cfg, point_index, size_idx, value_idx, realization, unit_seed,
                                  jsonl_line);
    }
}

SweepResult run_sweep(const SweepConfig& cfg, int num_threads, int max_units) {
    cfg.validate();
    const fs::path out_dir(cfg.output_dir);
    const fs::path unit_dir = out_dir / "units";
    fs::create_directories(unit_dir);

    // guard against mixing outputs of different configs in one directory
    const nlohmann::json cfg_json = to_json(cfg);
    const fs::path cfg_path = out_dir / "config.json";
    if (fs::exists(cfg_path)) {
        std::ifstream in(cfg_path);
        nlohmann::json existing;
        in >> existing;
        if (existing != cfg_json) {
            throw config_error("output directory already holds a different config: " +
                               cfg_path.string());
        }
    } else {
        std::ofstream out(cfg_path);
        out << cfg_json.dump(2) << '\n';
    }

    const int num_points = static_cast<int>(cfg.sizes.size() * cfg.values.size());
    struct Unit {
        int point;
        int realization;
        fs::path csv;
        fs::path jsonl;
    };
    std::vector<Unit> units;
    for (int pt = 0; pt < num_points; ++pt) {
        for (int r = 0; r < cfg.realizations; ++r) {
            std::string stem = "u" + std::to_string(pt) + "_" + std::to_string(r);
            units.push_back({pt, r, unit_dir / (stem + ".csv"), unit_dir / (stem + ".jsonl")});
        }
    }

    std::vector<int> pending;
    int skipped = 0;
    for (size_t i = 0; i < units.size(); ++i) {
        if (fs::exists(units[i].csv) && fs::exists(units[i].jsonl)) {
            ++skipped;
        } else {
            pending.push_back(static_cast<int>(i));
        }
    }
    if (max_units >= 0 && static_cast<int>(pending.size()) > max_units) {
        pending.resize(max_units);
    }

    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mu;
    auto worker = [&]() {
        while (!failed.load()) {
            size_t i = next.fetch_add(1);
            if (i >= pending.size()) break;
            const Unit& u = units[pending[i]];
            try {
                std::string jsonl;
                std::vector<Row> rows = run_unit(cfg, u.point, u.realization, &jsonl);
                fs::path tmp_csv = u.csv;
                tmp_csv += ".tmp";
                {
                    std::ofstream out(tmp_csv);
                    for (const Row& r : rows) out << to_csv(r) << '\n';
                }
                fs::rename(tmp_csv, u.csv);
                fs::path tmp_jsonl = u.jsonl;
                tmp_jsonl += ".tmp";
                {
                    std::ofstream out(tmp_jsonl);
                    out << jsonl << '\n';
                }
                fs::rename(tmp_jsonl, u.jsonl);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mu);
                error_message = std::string("unit failed (") + u.csv.string() + "): " + e.what();
                failed.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::max(1, num_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) throw std::runtime_error(error_message);

    SweepResult res;
    res.units_executed = static_cast<int>(pending.size());
    res.units_skipped = skipped;
    if (max_units >= 0 && res.units_executed + skipped < static_cast<int>(units.size())) {
        return res;  // interrupted on purpose; no merge yet
    }

    // deterministic merge
    const fs::path csv_path = out_dir / "dataset.csv";
    const fs::path jsonl_path = out_dir / "records.jsonl";
    {
        std::ofstream csv(csv_path);
        csv << kCsvHeader << '\n';
        std::ofstream jsonl(jsonl_path);
        for (const Unit& u : units) {
            std::ifstream in_csv(u.csv);
            csv << in_csv.rdbuf();
            std::ifstream in_jsonl(u.jsonl);
            jsonl << in_jsonl.rdbuf();
        }
    }
    nlohmann::json manifest{
        {"schema_version", kSchemaVersion},
        {"code_version", kCodeVersion},
        {"config", cfg_json},
        {"columns", kCsvHeader},
        {"units", units.size()},
        {"unit_seeds_derived_from", cfg.master_seed},
    };
    const fs::path manifest_path = out_dir / "manifest.json";
    {
        std::ofstream out(manifest_path);
        out << manifest.dump(2) << '\n';
    }
    res.dataset_csv = csv_path.string();
    res.records_jsonl = jsonl_path.string();
    res.manifest_path = manifest_path.string();
    res.merged = true;
    return res;
}

}  // namespace labctl
