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

#include "sglab/kernels.hpp"

#include <algorithm>

#include "sglab/errors.hpp"

namespace sglab::kernels {

namespace {

// Below this much work the OpenMP region costs more than it saves.
constexpr std::size_t kParallelThreshold = 1 << 12;
constexpr std::size_t kReductionBlocks = 64;

std::size_t block_begin(std::size_t b, std::size_t n, std::size_t blocks) {
    return b * n / blocks;
}

} // namespace

Layout make_layout(const Register &reg, std::span<const std::string> targets) {
    Layout layout;
    std::vector<bool> is_target(reg.size(), false);
    std::vector<std::size_t> pos;
    pos.reserve(targets.size());
    for (const auto &t : targets) {
        const std::size_t p = reg.index_of(t);
        if (is_target[p]) {
            throw InvalidArgument("slot '" + t + "' targeted twice");
        }
        is_target[p] = true;
        pos.push_back(p);
    }

    // Target offsets, big-endian over the targets in the order given.
    layout.offsets = {0};
    for (std::size_t p : pos) {
        const std::size_t dim = reg.slots()[p].dim;
        std::vector<std::size_t> next;
        next.reserve(layout.offsets.size() * dim);
        for (std::size_t off : layout.offsets) {
            for (std::size_t digit = 0; digit < dim; ++digit) {
                next.push_back(off + digit * reg.stride(p));
            }
        }
        layout.offsets = std::move(next);
    }

    layout.bases = {0};
    for (std::size_t p = 0; p < reg.size(); ++p) {
        if (is_target[p]) {
            continue;
        }
        const std::size_t dim = reg.slots()[p].dim;
        std::vector<std::size_t> next;
        next.reserve(layout.bases.size() * dim);
        for (std::size_t base : layout.bases) {
            for (std::size_t digit = 0; digit < dim; ++digit) {
                next.push_back(base + digit * reg.stride(p));
            }
        }
        layout.bases = std::move(next);
    }
    return layout;
}

namespace {

void check_op(const Matrix &op, const Layout &layout) {
    const auto k = static_cast<Eigen::Index>(layout.offsets.size());
    if (op.rows() != k || op.cols() != k) {
        throw InvalidArgument("operator is " + std::to_string(op.rows()) + "x" +
                              std::to_string(op.cols()) + " but targets span dimension " +
                              std::to_string(k));
    }
}

inline void apply_at(std::span<cplx> amps, const Matrix &op, const Layout &layout,
                     std::size_t base, std::vector<cplx> &scratch) {
    const std::size_t k = layout.offsets.size();
    for (std::size_t a = 0; a < k; ++a) {
        scratch[a] = amps[base + layout.offsets[a]];
    }
    for (std::size_t a = 0; a < k; ++a) {
        cplx acc = 0.0;
        for (std::size_t b = 0; b < k; ++b) {
            acc += op(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) * scratch[b];
        }
        amps[base + layout.offsets[a]] = acc;
    }
}

inline cplx expectation_at(std::span<const cplx> amps, const Matrix &op, const Layout &layout,
                           std::size_t base) {
    const std::size_t k = layout.offsets.size();
    cplx acc = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
        cplx row = 0.0;
        for (std::size_t b = 0; b < k; ++b) {
            row += op(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) *
                   amps[base + layout.offsets[b]];
        }
        acc += std::conj(amps[base + layout.offsets[a]]) * row;
    }
    return acc;
}

inline cplx dm_expectation_at(const Matrix &rho, const Matrix &op, const Layout &layout,
                              std::size_t base) {
    const std::size_t k = layout.offsets.size();
    cplx acc = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            acc += rho(static_cast<Eigen::Index>(base + layout.offsets[b]),
                       static_cast<Eigen::Index>(base + layout.offsets[a])) *
                   op(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        }
    }
    return acc;
}

inline cplx trace_entry(const Matrix &rho, const Layout &keep, std::size_t a, std::size_t b) {
    cplx acc = 0.0;
    for (std::size_t base : keep.bases) {
        acc += rho(static_cast<Eigen::Index>(base + keep.offsets[a]),
                   static_cast<Eigen::Index>(base + keep.offsets[b]));
    }
    return acc;
}

inline cplx pure_trace_entry(std::span<const cplx> amps, const Layout &keep, std::size_t a,
                             std::size_t b) {
    cplx acc = 0.0;
    for (std::size_t base : keep.bases) {
        acc += amps[base + keep.offsets[a]] * std::conj(amps[base + keep.offsets[b]]);
    }
    return acc;
}

} // namespace

namespace serial {

void apply(std::span<cplx> amps, const Matrix &op, const Layout &layout) {
    check_op(op, layout);
    std::vector<cplx> scratch(layout.offsets.size());
    for (std::size_t base : layout.bases) {
        apply_at(amps, op, layout, base, scratch);
    }
}

cplx expectation(std::span<const cplx> amps, const Matrix &op, const Layout &layout) {
    check_op(op, layout);
    cplx acc = 0.0;
    for (std::size_t base : layout.bases) {
        acc += expectation_at(amps, op, layout, base);
    }
    return acc;
}

cplx expectation(const Matrix &rho, const Matrix &op, const Layout &layout) {
    check_op(op, layout);
    cplx acc = 0.0;
    for (std::size_t base : layout.bases) {
        acc += dm_expectation_at(rho, op, layout, base);
    }
    return acc;
}

Matrix partial_trace(const Matrix &rho, const Layout &keep) {
    const auto k = static_cast<Eigen::Index>(keep.offsets.size());
    Matrix out(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) {
            out(a, b) = trace_entry(rho, keep, static_cast<std::size_t>(a),
                                    static_cast<std::size_t>(b));
        }
    }
    return out;
}

Matrix reduced_density(std::span<const cplx> amps, const Layout &keep) {
    const auto k = static_cast<Eigen::Index>(keep.offsets.size());
    Matrix out(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) {
            out(a, b) = pure_trace_entry(amps, keep, static_cast<std::size_t>(a),
                                         static_cast<std::size_t>(b));
        }
    }
    return out;
}

} // namespace serial

namespace omp {

void apply(std::span<cplx> amps, const Matrix &op, const Layout &layout) {
    check_op(op, layout);
    const std::size_t k = layout.offsets.size();
    const auto n = static_cast<std::ptrdiff_t>(layout.bases.size());
    const bool par = layout.bases.size() * k * k >= kParallelThreshold;
#pragma omp parallel if (par)
    {
        std::vector<cplx> scratch(k);
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            apply_at(amps, op, layout, layout.bases[static_cast<std::size_t>(i)], scratch);
        }
    }
}

cplx expectation(std::span<const cplx> amps, const Matrix &op, const Layout &layout) {
    check_op(op, layout);
    const std::size_t n = layout.bases.size();
    const std::size_t k = layout.offsets.size();
    const std::size_t blocks = std::min(kReductionBlocks, n);
    std::vector<cplx> partial(blocks, 0.0);
    const bool par = n * k * k >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const auto ub = static_cast<std::size_t>(b);
        cplx acc = 0.0;
        for (std::size_t i = block_begin(ub, n, blocks); i < block_begin(ub + 1, n, blocks); ++i) {
            acc += expectation_at(amps, op, layout, layout.bases[i]);
        }
        partial[ub] = acc;
    }
    cplx total = 0.0;
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

cplx expectation(const Matrix &rho, const Matrix &op, const Layout &layout) {
    check_op(op, layout);
    const std::size_t n = layout.bases.size();
    const std::size_t k = layout.offsets.size();
    const std::size_t blocks = std::min(kReductionBlocks, n);
    std::vector<cplx> partial(blocks, 0.0);
    const bool par = n * k * k >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const auto ub = static_cast<std::size_t>(b);
        cplx acc = 0.0;
        for (std::size_t i = block_begin(ub, n, blocks); i < block_begin(ub + 1, n, blocks); ++i) {
            acc += dm_expectation_at(rho, op, layout, layout.bases[i]);
        }
        partial[ub] = acc;
    }
    cplx total = 0.0;
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

Matrix partial_trace(const Matrix &rho, const Layout &keep) {
    const auto k = static_cast<std::ptrdiff_t>(keep.offsets.size());
    Matrix out(k, k);
    const bool par = static_cast<std::size_t>(k * k) * keep.bases.size() >= kParallelThreshold;
#pragma omp parallel for collapse(2) schedule(static) if (par)
    for (std::ptrdiff_t a = 0; a < k; ++a) {
        for (std::ptrdiff_t b = 0; b < k; ++b) {
            out(a, b) = trace_entry(rho, keep, static_cast<std::size_t>(a),
                                    static_cast<std::size_t>(b));
        }
    }
    return out;
}

Matrix reduced_density(std::span<const cplx> amps, const Layout &keep) {
    const auto k = static_cast<std::ptrdiff_t>(keep.offsets.size());
    Matrix out(k, k);
    const bool par = static_cast<std::size_t>(k * k) * keep.bases.size() >= kParallelThreshold;
#pragma omp parallel for collapse(2) schedule(static) if (par)
    for (std::ptrdiff_t a = 0; a < k; ++a) {
        for (std::ptrdiff_t b = 0; b < k; ++b) {
            out(a, b) = pure_trace_entry(amps, keep, static_cast<std::size_t>(a),
                                         static_cast<std::size_t>(b));
        }
    }
    return out;
}

} // namespace omp

} // namespace sglab::kernels
