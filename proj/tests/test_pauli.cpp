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

#include <cmath>
#include <vector>

#include "sglab/errors.hpp"
#include "sglab/pauli.hpp"
#include "sglab/rng.hpp"
#include "sglab/state.hpp"

using namespace sglab;

namespace {
const cplx kI(0.0, 1.0);
}

TEST_CASE("sign convention: |1> is the +1 eigenstate of Z") {
    const Matrix z = gates::z();
    CHECK(z(0, 0).real() == -1.0);
    CHECK(z(1, 1).real() == 1.0);
    const Matrix y = gates::y();
    CHECK(y(0, 1) == kI);
    CHECK(y(1, 0) == -kI);
    CHECK((gates::x() * y - kI * z).cwiseAbs().maxCoeff() < 1e-15);
    for (auto p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        const Matrix m = gates::pauli(p);
        CHECK(is_hermitian(m));
        CHECK((m * m - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("hadamard maps X eigenstates onto the computational basis") {
    const Matrix h = gates::hadamard();
    CHECK((h * h - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((h - (gates::x() + gates::z()) / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-15);
    Vector plus(2);
    plus << 1.0, 1.0; // |1> + |0>
    plus /= std::sqrt(2.0);
    const Vector out = h * plus;
    CHECK(std::abs(out(1)) == doctest::Approx(1.0));
    CHECK(std::abs(out(0)) < 1e-15);
}

TEST_CASE("cnot, phase and kron") {
    const Matrix cx = gates::cnot();
    CHECK(cx(3, 2) == cplx(1.0));
    CHECK(cx(2, 3) == cplx(1.0));
    CHECK(cx(0, 0) == cplx(1.0));
    const Matrix ph = gates::phase(0.3);
    CHECK(std::abs(ph(1, 1) - std::polar(1.0, 0.3)) < 1e-15);
    const Matrix k = gates::kron(gates::z(), gates::identity(3));
    CHECK(k.rows() == 6);
    CHECK(k(4, 4) == cplx(1.0));
    CHECK(k(0, 0) == cplx(-1.0));
}

TEST_CASE("pauli strings") {
    const std::vector<std::string> labels{"s", "A_up", "A_dn"};
    const auto p = PauliString::from_word("XIZ", labels);
    CHECK(p.at("s") == Pauli::X);
    CHECK(p.at("A_up") == Pauli::I);
    CHECK(p.letters().size() == 2);
    CHECK(p.word(labels) == "XIZ");
    CHECK(PauliString::from_word("III", labels).is_identity());
    CHECK_THROWS_AS(PauliString::from_word("XQ", {"a", "b"}), InvalidArgument);
    CHECK_THROWS_AS(PauliString::from_word("XX", {"a"}), InvalidArgument);
    const Register qutrit{{"q", 3}};
    CHECK_THROWS_AS(PauliString({{"q", Pauli::X}}).check(qutrit), InvalidArgument);
}

TEST_CASE("apply_pauli matches the dense operator") {
    const Register reg{{"a", 2}, {"e", 3}, {"b", 2}, {"c", 2}};
    RngStream rng(4);
    Vector v(static_cast<Eigen::Index>(reg.total_dim()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = cplx(rng.normal(), rng.normal());
    }
    const PauliString obs{{"c", Pauli::Y}, {"a", Pauli::X}, {"b", Pauli::Z}};
    CHECK((apply_pauli(reg, v, obs) - pauli_matrix(obs, reg) * v).cwiseAbs().maxCoeff() < 1e-13);
}
