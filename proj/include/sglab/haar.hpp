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

#include <cstdint>

#include "sglab/rng.hpp"
#include "sglab/types.hpp"

namespace sglab {

/// Haar-random d x d unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal folded back into Q.
Matrix haar_unitary(std::size_t d, std::uint64_t seed);
Matrix haar_unitary(std::size_t d, RngStream &rng);

} // namespace sglab
