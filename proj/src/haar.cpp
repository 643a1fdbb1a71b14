// Copyright 2026 The sglab Authors
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

#include "sglab/haar.hpp"

#include <cmath>
#include <numbers>

#include "sglab/errors.hpp"

namespace sglab {

Matrix haar_unitary(std::size_t d, std::uint64_t seed) {
    RngStream rng(seed);
    return haar_unitary(d, rng);
}

Matrix haar_unitary(std::size_t d, RngStream &rng) {
    if (d == 0) {
        throw InvalidArgument("haar_unitary needs d >= 1");
    }
    const auto n = static_cast<Eigen::Index>(d);
    Matrix g(n, n);
    // Column-major fill order is part of the reproducibility contract.
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(r, c) = cplx(re, im) * (1.0 / std::numbers::sqrt2);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix &r = qr.matrixQR();
    for (Eigen::Index k = 0; k < n; ++k) {
        const cplx rkk = r(k, k);
        const double mag = std::abs(rkk);
        const cplx phase = mag > 0.0 ? rkk / mag : cplx(1.0);
        q.col(k) *= phase;
    }
    return q;
}

} // namespace sglab
