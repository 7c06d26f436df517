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

#include "permrep/json_export.hpp"

namespace permrep {

nlohmann::json weingarten_to_json(const WeingartenTable& table) {
    const SymmetricGroup& g = table.group();
    nlohmann::json values = nlohmann::json::object();
    for (int c = 0; c < g.num_classes(); ++c) {
        const Perm& rep = g.element(g.class_representative(c));
        values[rep.cycle_string()] = rational_to_string(table.value_for_class(c));
    }
    return nlohmann::json{
        {"d", table.dimension()},
        {"n", table.copies()},
        {"keyed_by", "conjugacy class of tau*sigma^{-1}, canonical representative"},
        {"values", values},
    };
}

nlohmann::json w_plus_to_json(int n) {
    WPlusSet set = w_plus_set(n);
    nlohmann::json elems = nlohmann::json::array();
    for (const Perm& p : set.elements) elems.push_back(p.cycle_string());
    return nlohmann::json{{"n", n}, {"h", set.h}, {"elements", elems}};
}

}  // namespace permrep
