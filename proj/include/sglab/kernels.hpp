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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sglab/register.hpp"
#include "sglab/types.hpp"

/**
 * Dense kernels over a flat big-endian amplitude index.
 *
 * Every kernel comes in two flavours with identical signatures:
 * `serial::` is the straightforward reference loop, `omp::` distributes the
 * outer loop with OpenMP. Reductions in `omp::` use a fixed block count, so
 * their result does not depend on the thread count.
 */
namespace sglab::kernels {

/**
 * Index plan for an operator acting on a subset of slots.
 *
 * `offsets[a]` is the flat offset of target sub-index `a` (big-endian over
 * the targets in the order given, which need not be register order or
 * adjacent). `bases` enumerates every configuration of the remaining slots
 * with the target digits set to zero.
 */
struct Layout {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> bases;
};

Layout make_layout(const Register &reg, std::span<const std::string> targets);

namespace serial {
void apply(std::span<cplx> amps, const Matrix &op, const Layout &layout);
cplx expectation(std::span<const cplx> amps, const Matrix &op, const Layout &layout);
cplx expectation(const Matrix &rho, const Matrix &op, const Layout &layout);
Matrix partial_trace(const Matrix &rho, const Layout &keep);
Matrix reduced_density(std::span<const cplx> amps, const Layout &keep);
} // namespace serial

namespace omp {
void apply(std::span<cplx> amps, const Matrix &op, const Layout &layout);
cplx expectation(std::span<const cplx> amps, const Matrix &op, const Layout &layout);
cplx expectation(const Matrix &rho, const Matrix &op, const Layout &layout);
Matrix partial_trace(const Matrix &rho, const Layout &keep);
Matrix reduced_density(std::span<const cplx> amps, const Layout &keep);
} // namespace omp

} // namespace sglab::kernels
