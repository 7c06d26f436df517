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

#ifndef IEXSIM_PERMREP_JSON_EXPORT_HPP
#define IEXSIM_PERMREP_JSON_EXPORT_HPP

#include <json.hpp>

#include "permrep/replica_sets.hpp"
#include "permrep/weingarten.hpp"

namespace permrep {

/// Weingarten values keyed by canonical cycle notation of one representative per
/// conjugacy class of tau sigma^{-1}; values are exact "num/den" strings.
nlohmann::json weingarten_to_json(const WeingartenTable& table);

/// { "n":, "h":, "elements": ["()", "(1 3)(2 4)", ...] } in canonical order.
nlohmann::json w_plus_to_json(int n);

}  // namespace permrep

#endif
