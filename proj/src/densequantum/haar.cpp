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

#include "densequantum/haar.hpp"

#include <stdexcept>

namespace densequantum {

Eigen::MatrixXcd haar_unitary(int dim, core::Rng& rng) {
    if (dim < 2) throw std::invalid_argument("haar_unitary: dim must be >= 2");
    Eigen::MatrixXcd z(dim, dim);
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            z(i, j) = std::complex<double>(rng.next_gaussian() * s, rng.next_gaussian() * s);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        std::complex<double> d = r(j, j);
        std::complex<double> phase = (std::abs(d) > 0) ? d / std::abs(d) : 1.0;
        q.col(j) *= phase;
    }
    return q;
}

}  // namespace densequantum
