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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sglab {

struct Slot {
    std::string label;
    std::size_t dim;

    friend bool operator==(const Slot &, const Slot &) = default;
};

/**
 * Ordered list of labeled tensor factors.
 *
 * Indexing is big-endian: the leftmost slot is the most significant digit of
 * the flat amplitude index, so "(s, A_up, A_dn)" with |110> sits at index 6.
 */
class Register {
  public:
    Register() = default;
    Register(std::initializer_list<Slot> slots);
    explicit Register(std::vector<Slot> slots);

    /// Convenience: every label is a qubit.
    static Register qubits(std::initializer_list<std::string> labels);

    [[nodiscard]] const std::vector<Slot> &slots() const noexcept { return slots_; }
    [[nodiscard]] std::size_t size() const noexcept { return slots_.size(); }
    [[nodiscard]] std::size_t total_dim() const noexcept { return total_dim_; }

    [[nodiscard]] std::optional<std::size_t> find(const std::string &label) const;
    /// Position of `label`; throws InvalidArgument if absent.
    [[nodiscard]] std::size_t index_of(const std::string &label) const;
    [[nodiscard]] bool contains(const std::string &label) const { return find(label).has_value(); }
    [[nodiscard]] std::size_t dim_of(const std::string &label) const;

    /// Stride of slot `pos` in the flat index.
    [[nodiscard]] std::size_t stride(std::size_t pos) const { return strides_.at(pos); }

    /// Slots in `this` followed by `other`; throws on label collision.
    [[nodiscard]] Register concat(const Register &other) const;

    /// Sub-register with the listed labels in the listed order.
    [[nodiscard]] Register select(std::span<const std::string> labels) const;

    /// Labels not in `labels`, in register order.
    [[nodiscard]] std::vector<std::string> complement(std::span<const std::string> labels) const;

    [[nodiscard]] std::vector<std::string> labels() const;

    /// Flat index of a multi-index given in register order.
    [[nodiscard]] std::size_t flat_index(std::span<const std::size_t> digits) const;

    friend bool operator==(const Register &a, const Register &b) { return a.slots_ == b.slots_; }

  private:
    void validate();

    std::vector<Slot> slots_;
    std::vector<std::size_t> strides_;
    std::size_t total_dim_ = 1;
};

} // namespace sglab
