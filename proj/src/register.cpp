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

#include "sglab/register.hpp"

#include <algorithm>
#include <set>

#include "sglab/errors.hpp"
#include "sglab/types.hpp"

namespace sglab {

Register::Register(std::initializer_list<Slot> slots) : slots_(slots) { validate(); }

Register::Register(std::vector<Slot> slots) : slots_(std::move(slots)) { validate(); }

Register Register::qubits(std::initializer_list<std::string> labels) {
    std::vector<Slot> slots;
    for (const auto &l : labels) {
        slots.push_back({l, 2});
    }
    return Register(std::move(slots));
}

void Register::validate() {
    std::set<std::string> seen;
    total_dim_ = 1;
    for (const auto &s : slots_) {
        if (s.dim == 0) {
            throw InvalidArgument("slot '" + s.label + "' has dimension 0");
        }
        if (!seen.insert(s.label).second) {
            throw InvalidArgument("duplicate slot label '" + s.label + "'");
        }
        if (total_dim_ > kMaxStateDim / s.dim) {
            throw DimensionCapError("register dimension exceeds cap of " +
                                    std::to_string(kMaxStateDim));
        }
        total_dim_ *= s.dim;
    }
    strides_.assign(slots_.size(), 1);
    for (std::size_t i = slots_.size(); i-- > 1;) {
        strides_[i - 1] = strides_[i] * slots_[i].dim;
    }
}

std::optional<std::size_t> Register::find(const std::string &label) const {
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (slots_[i].label == label) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Register::index_of(const std::string &label) const {
    auto pos = find(label);
    if (!pos) {
        throw InvalidArgument("unknown slot label '" + label + "'");
    }
    return *pos;
}

std::size_t Register::dim_of(const std::string &label) const {
    return slots_[index_of(label)].dim;
}

Register Register::concat(const Register &other) const {
    std::vector<Slot> all = slots_;
    for (const auto &s : other.slots_) {
        if (contains(s.label)) {
            throw InvalidArgument("label collision on '" + s.label + "'");
        }
        all.push_back(s);
    }
    return Register(std::move(all));
}

Register Register::select(std::span<const std::string> labels) const {
    std::vector<Slot> out;
    out.reserve(labels.size());
    for (const auto &l : labels) {
        out.push_back(slots_[index_of(l)]);
    }
    return Register(std::move(out));
}

std::vector<std::string> Register::complement(std::span<const std::string> labels) const {
    std::vector<std::string> out;
    for (const auto &s : slots_) {
        if (std::find(labels.begin(), labels.end(), s.label) == labels.end()) {
            out.push_back(s.label);
        }
    }
    return out;
}

std::vector<std::string> Register::labels() const {
    std::vector<std::string> out;
    out.reserve(slots_.size());
    for (const auto &s : slots_) {
        out.push_back(s.label);
    }
    return out;
}

std::size_t Register::flat_index(std::span<const std::size_t> digits) const {
    if (digits.size() != slots_.size()) {
        throw InvalidArgument("multi-index length does not match register");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= slots_[i].dim) {
            throw InvalidArgument("digit out of range for slot '" + slots_[i].label + "'");
        }
        idx += digits[i] * strides_[i];
    }
    return idx;
}

} // namespace sglab
