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

#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "sglab/errors.hpp"
#include "sglab/register.hpp"
#include "sglab/types.hpp"

using namespace sglab;

TEST_CASE("big-endian strides and flat index") {
    const Register reg{{"s", 2}, {"E", 3}, {"D", 2}};
    CHECK(reg.total_dim() == 12);
    CHECK(reg.stride(0) == 6);
    CHECK(reg.stride(1) == 2);
    CHECK(reg.stride(2) == 1);
    const std::array<std::size_t, 3> digits{1, 2, 0};
    CHECK(reg.flat_index(digits) == 10);
}

TEST_CASE("ghz basis word sits at index 6") {
    const auto reg = Register::qubits({"s", "A_up", "A_dn"});
    const std::array<std::size_t, 3> digits{1, 1, 0};
    CHECK(reg.flat_index(digits) == 6);
}

TEST_CASE("lookup by label") {
    const Register reg{{"a", 2}, {"b", 4}};
    CHECK(reg.index_of("b") == 1);
    CHECK(reg.dim_of("b") == 4);
    CHECK(reg.contains("a"));
    CHECK_FALSE(reg.find("zz").has_value());
    CHECK_THROWS_AS((void)reg.index_of("zz"), InvalidArgument);
}

TEST_CASE("invalid registers are rejected") {
    CHECK_THROWS_AS(Register({{"a", 2}, {"a", 2}}), InvalidArgument);
    CHECK_THROWS_AS(Register({{"a", 0}}), InvalidArgument);
    std::vector<Slot> big;
    for (int i = 0; i < 17; ++i) {
        big.push_back({"q" + std::to_string(i), 2});
    }
    CHECK_THROWS_AS((void)Register(std::vector<Slot>(big)), DimensionCapError);
}

TEST_CASE("concat, select and complement") {
    const auto a = Register::qubits({"s", "A_up"});
    const auto b = Register::qubits({"A_dn"});
    const auto ab = a.concat(b);
    CHECK(ab.labels() == std::vector<std::string>{"s", "A_up", "A_dn"});
    CHECK_THROWS_AS((void)a.concat(a), InvalidArgument);

    const std::vector<std::string> keep{"A_dn", "s"};
    const auto sel = ab.select(keep);
    CHECK(sel.labels() == keep);
    CHECK(ab.complement(keep) == std::vector<std::string>{"A_up"});
    CHECK(sel == Register::qubits({"A_dn", "s"}));
    CHECK_FALSE(sel == ab);
}
