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

#ifndef IEXSIM_LABCTL_VERIFY_HPP
#define IEXSIM_LABCTL_VERIFY_HPP

#include <iosfwd>

namespace labctl {

/// Cross-module invariant/oracle smoke suite behind `labctl verify`: exact
/// Weingarten inversion, replica-set counts, brick-weight values, stabilizer
/// IE exactness, dense-vs-stabilizer agreement, Edwards-Sokal statistics, and
/// pipeline determinism. Returns the number of failed checks.
int run_verify(std::ostream& out, bool quick = false);

}  // namespace labctl

#endif
