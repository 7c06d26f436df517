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

#ifndef IEXSIM_DENSEQUANTUM_HAAR_HPP
#define IEXSIM_DENSEQUANTUM_HAAR_HPP

#include <Eigen/Dense>

#include "core/rng.hpp"

namespace densequantum {

/// Haar-distributed unitary: complex Gaussian matrix, QR, then phase fix so the
/// triangular factor has positive real diagonal.
Eigen::MatrixXcd haar_unitary(int dim, core::Rng& rng);
inline Eigen::MatrixXcd haar_unitary(int dim, uint64_t seed) {
    core::Rng rng(seed);
    return haar_unitary(dim, rng);
}

}  // namespace densequantum

#endif
