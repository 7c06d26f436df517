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

#include "labctl/config.hpp"

#include <fstream>
#include <set>

namespace labctl {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed, const std::string& scope) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw config_error("unknown key: " + scope + it.key());
        }
    }
}

template <typename T>
T get_as(const json& j, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw config_error("type error at key: " + key);
    }
}

}  // namespace

const char* to_string(Engine e) {
    switch (e) {
        case Engine::stab: return "stab";
        case Engine::dense: return "dense";
        default: return "potts";
    }
}

void SweepConfig::validate() const {
    if (realizations < 1) throw config_error("range error at key: realizations (must be >= 1)");
    if (values.empty()) throw config_error("range error at key: sweep.values (must be nonempty)");
    if (sizes.empty()) throw config_error("range error at key: sweep.sizes (must be nonempty)");
    if (!times.empty() && times.size() != sizes.size()) {
        throw config_error("range error at key: sweep.T (must pair with sweep.sizes)");
    }
    for (double v : values) {
        if (v < 0.0 || v > 1.0) throw config_error("range error at key: p (values must lie in [0, 1])");
    }
    if (engine == Engine::potts) {
        if (potts_h < 1) throw config_error("range error at key: potts.h (must be >= 1)");
        if (potts.sweeps < 1) throw config_error("range error at key: potts.sweeps");
        for (int w : sizes) {
            if (w < 2) throw config_error("range error at key: sweep.sizes (widths must be >= 2)");
        }
    } else {
        for (size_t i = 0; i < sizes.size(); ++i) {
            stabcore::CircuitSpec probe = base;
            probe.L = sizes[i];
            probe.T = times.empty() ? 2 * sizes[i] : times[i];
            probe.p = values.front();
            try {
                probe.validate(engine == Engine::dense);
            } catch (const std::invalid_argument& e) {
                throw config_error(std::string("range error: ") + e.what());
            }
        }
    }
    if (output_dir.empty()) throw config_error("range error at key: output (must be set)");
}

SweepConfig parse_config_json(const json& j) {
    require_keys(j, {"engine", "seed", "realizations", "sweep", "base", "potts", "observables", "output"},
                 "");
    SweepConfig cfg;
    std::string engine = get_as<std::string>(j, "engine", "stab");
    if (engine == "stab") {
        cfg.engine = Engine::stab;
    } else if (engine == "dense") {
        cfg.engine = Engine::dense;
    } else if (engine == "potts") {
        cfg.engine = Engine::potts;
    } else {
        throw config_error("range error at key: engine (stab|dense|potts)");
    }
    cfg.master_seed = get_as<uint64_t>(j, "seed", 0);
    cfg.realizations = get_as<int>(j, "realizations", 1);
    cfg.output_dir = get_as<std::string>(j, "output", "");
    cfg.observables = get_as<std::vector<std::string>>(j, "observables", {});

    if (!j.contains("sweep")) throw config_error("missing key: sweep");
    const json& sw = j.at("sweep");
    require_keys(sw, {"p", "nu", "L", "W", "T"}, "sweep.");
    if (sw.contains("p") && sw.contains("nu")) throw config_error("unknown key: sweep.p+nu (pick one)");
    cfg.values = get_as<std::vector<double>>(sw, sw.contains("nu") ? "nu" : "p", {});
    cfg.sizes = get_as<std::vector<int>>(sw, sw.contains("W") ? "W" : "L", {});
    cfg.times = get_as<std::vector<int>>(sw, "T", {});

    if (j.contains("base")) {
        const json& b = j.at("base");
        require_keys(b,
                     {"gate_family", "initial_system", "apparatus_init", "env_init", "partition",
                      "measure_stride"},
                     "base.");
        std::string gf = get_as<std::string>(b, "gate_family", "clifford2_uniform");
        if (gf == "clifford2_uniform") {
            cfg.base.gate_family = stabcore::GateFamily::clifford2_uniform;
        } else if (gf == "haar2") {
            cfg.base.gate_family = stabcore::GateFamily::haar2;
        } else {
            throw config_error("range error at key: base.gate_family");
        }
        std::string si = get_as<std::string>(b, "initial_system", "pure_zero");
        if (si == "pure_zero") {
            cfg.base.initial_system = stabcore::SystemInit::pure_zero;
        } else if (si == "mixed_via_reference") {
            cfg.base.initial_system = stabcore::SystemInit::mixed_via_reference;
        } else {
            throw config_error("range error at key: base.initial_system");
        }
        std::string ai = get_as<std::string>(b, "apparatus_init", "pure_zero");
        if (ai == "pure_zero") {
            cfg.base.apparatus_init = stabcore::ApparatusInit::pure_zero;
        } else if (ai == "bell_with_copy") {
            cfg.base.apparatus_init = stabcore::ApparatusInit::bell_with_copy;
        } else {
            throw config_error("range error at key: base.apparatus_init");
        }
        std::string ei = get_as<std::string>(b, "env_init", "pure_zero");
        if (ei == "pure_zero") {
            cfg.base.env_init = stabcore::EnvInit::pure_zero;
        } else if (ei == "maximally_mixed") {
            cfg.base.env_init = stabcore::EnvInit::maximally_mixed;
        } else {
            throw config_error("range error at key: base.env_init");
        }
        cfg.base.measure_stride = get_as<int>(b, "measure_stride", 1);
        if (b.contains("partition")) {
            const json& pt = b.at("partition");
            require_keys(pt, {"es", "gap", "ps"}, "base.partition.");
            cfg.base.partition.es_sites = get_as<int>(pt, "es", 0);
            cfg.base.partition.gap_sites = get_as<int>(pt, "gap", 0);
            cfg.base.partition.ps_sites = get_as<int>(pt, "ps", 0);
        }
    }
    if (j.contains("potts")) {
        const json& p = j.at("potts");
        require_keys(p, {"h", "sweeps", "thermalization", "measure_stride"}, "potts.");
        cfg.potts_h = get_as<int>(p, "h", 1);
        cfg.potts.sweeps = get_as<int>(p, "sweeps", 1000);
        cfg.potts.thermalization = get_as<int>(p, "thermalization", 100);
        cfg.potts.measure_stride = get_as<int>(p, "measure_stride", 1);
    }
    cfg.base.master_seed = cfg.master_seed;
    cfg.potts.seed = cfg.master_seed;
    cfg.validate();
    return cfg;
}

SweepConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config_json(j);
}

nlohmann::json to_json(const SweepConfig& cfg) {
    json sw;
    sw[cfg.engine == Engine::potts ? "nu" : "p"] = cfg.values;
    sw[cfg.engine == Engine::potts ? "W" : "L"] = cfg.sizes;
    if (!cfg.times.empty()) sw["T"] = cfg.times;
    json j{
        {"engine", to_string(cfg.engine)},
        {"seed", cfg.master_seed},
        {"realizations", cfg.realizations},
        {"sweep", sw},
        {"output", cfg.output_dir},
    };
    if (!cfg.observables.empty()) j["observables"] = cfg.observables;
    if (cfg.engine == Engine::potts) {
        j["potts"] = json{{"h", cfg.potts_h},
                          {"sweeps", cfg.potts.sweeps},
                          {"thermalization", cfg.potts.thermalization},
                          {"measure_stride", cfg.potts.measure_stride}};
    } else {
        j["base"] = json{{"gate_family", stabcore::to_string(cfg.base.gate_family)},
                         {"initial_system", stabcore::to_string(cfg.base.initial_system)},
                         {"apparatus_init", stabcore::to_string(cfg.base.apparatus_init)},
                         {"env_init", stabcore::to_string(cfg.base.env_init)},
                         {"measure_stride", cfg.base.measure_stride},
                         {"partition", json{{"es", cfg.base.partition.es_sites},
                                            {"gap", cfg.base.partition.gap_sites},
                                            {"ps", cfg.base.partition.ps_sites}}}};
    }
    return j;
}

}  // namespace labctl
