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

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace sglab {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Exact-structure tolerance used for normalization and Hermiticity checks.
inline constexpr double kExactTol = 1e-12;

/// Largest register a PureState may live on.
inline constexpr std::size_t kMaxStateDim = std::size_t{1} << 16;

/// Largest register a dense DensityMatrix may live on.
inline constexpr std::size_t kMaxDensityDim = 4096;

} // namespace sglab
