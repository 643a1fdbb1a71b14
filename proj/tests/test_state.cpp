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
#include <string>
#include <vector>

#include "sglab/errors.hpp"
#include "sglab/experiment.hpp"
#include "sglab/haar.hpp"
#include "sglab/pauli.hpp"
#include "sglab/rng.hpp"
#include "sglab/state.hpp"

using namespace sglab;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

PureState ghz() {
    Vector v = Vector::Zero(8);
    v(6) = kH;
    v(1) = kH;
    return PureState(Register::qubits({"s", "A_up", "A_dn"}), v);
}

PureState random_state(const Register &reg, std::uint64_t seed) {
    RngStream rng(seed);
    Vector v(static_cast<Eigen::Index>(reg.total_dim()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = cplx(rng.normal(), rng.normal());
    }
    return PureState::normalized(reg, v);
}

// Textbook trace over the trailing factor of a two-block split.
Matrix trace_out_trailing(const Matrix &rho, std::size_t keep_dim, std::size_t rest_dim) {
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(keep_dim));
    for (std::size_t i = 0; i < keep_dim; ++i) {
        for (std::size_t j = 0; j < keep_dim; ++j) {
            for (std::size_t k = 0; k < rest_dim; ++k) {
                out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
                    rho(static_cast<Eigen::Index>(i * rest_dim + k), static_cast<Eigen::Index>(j * rest_dim + k));
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("pure states validate length and norm") {
    const auto reg = Register::qubits({"a"});
    CHECK_THROWS_AS(PureState(reg, Vector::Zero(3)), InvalidArgument);
    Vector v(2);
    v << 1.0, 1.0;
    CHECK_THROWS_AS(PureState(reg, v), InvalidArgument);
    CHECK(PureState::normalized(reg, v).norm() == doctest::Approx(1.0));
    CHECK_THROWS_AS(PureState::normalized(reg, Vector::Zero(2)), InvalidArgument);
    const auto b = PureState::basis(Register::qubits({"s", "A_up", "A_dn"}), "110");
    CHECK(std::abs(b[6] - cplx(1.0)) < 1e-15);
}

TEST_CASE("density matrices enforce their contract") {
    const auto reg = Register::qubits({"a"});
    Matrix m = Matrix::Identity(2, 2) * 0.5;
    CHECK_NOTHROW(DensityMatrix(reg, m));
    Matrix bad_trace = Matrix::Identity(2, 2);
    CHECK_THROWS_AS(DensityMatrix(reg, bad_trace), InvalidArgument);
    Matrix non_herm = m;
    non_herm(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix(reg, non_herm), InvalidArgument);
    Matrix negative(2, 2);
    negative << 1.5, 0.0, 0.0, -0.5;
    CHECK_THROWS_AS(DensityMatrix(reg, negative), InvalidArgument);
    std::vector<Slot> slots;
    for (int i = 0; i < 13; ++i) {
        slots.push_back({"q" + std::to_string(i), 2});
    }
    CHECK_THROWS_AS(DensityMatrix::from_pure(PureState::basis(Register(slots), std::string(13, '0'))),
                    DimensionCapError);
}

TEST_CASE("ZZI is diagonal with the expected signs") {
    const auto reg = Register::qubits({"s", "A_up", "A_dn"});
    const Matrix zzi = pauli_matrix(PauliString::from_word("ZZI", {"s", "A_up", "A_dn"}), reg);
    const std::vector<double> diag{1, 1, -1, -1, -1, -1, 1, 1};
    for (Eigen::Index i = 0; i < 8; ++i) {
        CHECK(zzi(i, i).real() == doctest::Approx(diag[static_cast<std::size_t>(i)]));
    }
    CHECK((zzi - Matrix(zzi.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("GHZ ancilla marginal is the classical mixture") {
    const auto rho = partial_trace(ghz(), {"A_up", "A_dn"});
    CHECK(rho(0, 0).real() == doctest::Approx(0.0));
    CHECK(rho(1, 1).real() == doctest::Approx(0.5));
    CHECK(rho(2, 2).real() == doctest::Approx(0.5));
    CHECK(rho(3, 3).real() == doctest::Approx(0.0));
    CHECK(std::abs(rho(1, 2)) < 1e-15);
}

TEST_CASE("partial trace matches the textbook formula for every split up to dim 64") {
    const Register reg{{"a", 2}, {"b", 2}, {"c", 4}, {"e", 4}};
    const auto psi = random_state(reg, 5);
    const auto rho = DensityMatrix::from_pure(psi);
    const std::vector<std::vector<std::string>> keeps{{"a"}, {"a", "b"}, {"a", "b", "c"}};
    for (const auto &keep : keeps) {
        const auto sub = reg.select(keep);
        const std::size_t kd = sub.total_dim();
        const Matrix expect = trace_out_trailing(rho.entries(), kd, reg.total_dim() / kd);
        CHECK((partial_trace(rho, keep).entries() - expect).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((partial_trace(psi, keep).entries() - expect).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("partial trace keeps the requested order") {
    const Register reg{{"a", 2}, {"b", 3}};
    const auto psi = random_state(reg, 8);
    const auto ab = partial_trace(psi, {"a", "b"});
    const auto ba = partial_trace(psi, {"b", "a"});
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 3; ++l) {
                    CHECK(std::abs(ab(i * 3 + j, k * 3 + l) - ba(j * 2 + i, l * 2 + k)) < 1e-15);
                }
            }
        }
    }
}

TEST_CASE("tensor products and factor_out invert each other") {
    const auto a = random_state(Register::qubits({"x"}), 1);
    const auto b = PureState::basis(Register::qubits({"y"}), "1");
    const auto ab = tensor_product(a, b);
    CHECK(ab.reg().labels() == std::vector<std::string>{"x", "y"});
    const auto back = factor_out(ab, "y", 1);
    CHECK((back.amplitudes() - a.amplitudes()).norm() < 1e-15);
    CHECK_THROWS_AS(factor_out(ab, "y", 0), InvalidArgument);
    CHECK_THROWS_AS(tensor_product(a, a), InvalidArgument);
}

TEST_CASE("apply_operator refuses norm-changing operators unless renormalizing") {
    const auto psi = ghz();
    const Matrix proj = gates::outer(1, 1);
    CHECK_THROWS_AS(apply_operator(psi, proj, {"s"}), InvalidArgument);
    const auto up = apply_operator(psi, proj, {"s"}, Renormalize::yes);
    CHECK(std::abs(up[6]) == doctest::Approx(1.0));
    CHECK_THROWS_AS(apply_operator(psi, gates::x(), {"nope"}), InvalidArgument);
}

TEST_CASE("expectations on kets and density matrices agree") {
    const auto psi = random_state(Register{{"a", 2}, {"b", 3}, {"c", 2}}, 12);
    const Matrix zz = gates::kron(gates::z(), gates::z());
    const auto rho = DensityMatrix::from_pure(psi);
    CHECK(std::abs(expectation(psi, zz, {"c", "a"}) - expectation(rho, zz, {"c", "a"})) < 1e-13);
    CHECK_THROWS_AS(expectation(psi, gates::outer(0, 1), {"a"}), InvalidArgument);
}

TEST_CASE("unbalanced prep: <ZII> at t4 is |alpha|^2 - |beta|^2") {
    const auto t4 = t4_state({0.6, 0.8});
    CHECK(expectation(t4, gates::z(), {"s"}).real() == doctest::Approx(-0.28).epsilon(1e-12));
}

TEST_CASE("fidelity and contraction") {
    const auto g = ghz();
    CHECK(fidelity(g, g) == doctest::Approx(1.0));
    CHECK(fidelity(g, DensityMatrix::from_pure(g)) == doctest::Approx(1.0));
    Vector one = Vector::Zero(2);
    one(1) = 1.0;
    const auto [rest, p] = contract(g, "s", one);
    CHECK(p == doctest::Approx(0.5));
    CHECK(std::abs(rest[2]) == doctest::Approx(1.0)); // A_up A_dn = 10
    const auto [rest0, p0] = contract(PureState::basis(Register::qubits({"s", "x"}), "11"), "s", one);
    CHECK(p0 == doctest::Approx(1.0));
    CHECK(rest0.reg().labels() == std::vector<std::string>{"x"});
    Vector zero = Vector::Zero(2);
    zero(0) = 1.0;
    CHECK_THROWS_AS(contract(PureState::basis(Register::qubits({"s"}), "1"), "s", zero), InvalidArgument);
}

TEST_CASE("ensembles and mixtures") {
    const auto mix = DensityMatrix::from_ensemble(classical_mixture(SpinPrep::balanced()));
    CHECK(mix(6, 6).real() == doctest::Approx(0.5));
    CHECK(mix(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(mix(1, 6)) == 0.0);
    CHECK(is_hermitian(mix.entries()));
    CHECK(is_unitary(haar_unitary(5, 3)));
    CHECK_FALSE(is_unitary(gates::outer(0, 0)));
}
