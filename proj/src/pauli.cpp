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

#include "sglab/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sglab/errors.hpp"
#include "sglab/state.hpp"

namespace sglab {

namespace gates {

Matrix identity(std::size_t dim) {
    return Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

Matrix x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Matrix y() {
    const cplx i(0.0, 1.0);
    Matrix m(2, 2);
    m << 0.0, i, -i, 0.0;
    return m;
}

Matrix z() {
    Matrix m(2, 2);
    m << -1.0, 0.0, 0.0, 1.0;
    return m;
}

Matrix pauli(Pauli p) {
    switch (p) {
    case Pauli::I:
        return identity(2);
    case Pauli::X:
        return x();
    case Pauli::Y:
        return y();
    case Pauli::Z:
        return z();
    }
    throw InvalidArgument("unknown Pauli letter");
}

Matrix hadamard() { return (x() + z()) * (1.0 / std::numbers::sqrt2); }

Matrix cnot() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
}

Matrix phase(double chi) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = std::polar(1.0, chi);
    return m;
}

Matrix outer(std::size_t i, std::size_t j, std::size_t dim) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

} // namespace gates

namespace {

Pauli parse_letter(char c) {
    switch (c) {
    case 'I':
        return Pauli::I;
    case 'X':
        return Pauli::X;
    case 'Y':
        return Pauli::Y;
    case 'Z':
        return Pauli::Z;
    default:
        throw InvalidArgument(std::string("not a Pauli letter: '") + c + "'");
    }
}

} // namespace

PauliString::PauliString(std::initializer_list<std::pair<std::string, Pauli>> letters) {
    for (const auto &[label, p] : letters) {
        set(label, p);
    }
}

PauliString PauliString::from_word(std::string_view word, std::span<const std::string> labels) {
    if (word.size() != labels.size()) {
        throw InvalidArgument("Pauli word '" + std::string(word) + "' has " +
                              std::to_string(word.size()) + " letters for " +
                              std::to_string(labels.size()) + " slots");
    }
    PauliString out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        out.set(labels[i], parse_letter(word[i]));
    }
    return out;
}

PauliString PauliString::from_word(std::string_view word, std::initializer_list<std::string> labels) {
    const std::vector<std::string> l(labels);
    return from_word(word, std::span<const std::string>(l));
}

void PauliString::set(const std::string &label, Pauli p) {
    auto it = std::find_if(letters_.begin(), letters_.end(),
                           [&](const auto &e) { return e.first == label; });
    if (p == Pauli::I) {
        if (it != letters_.end()) {
            letters_.erase(it);
        }
        return;
    }
    if (it != letters_.end()) {
        it->second = p;
    } else {
        letters_.emplace_back(label, p);
    }
}

Pauli PauliString::at(const std::string &label) const {
    for (const auto &[l, p] : letters_) {
        if (l == label) {
            return p;
        }
    }
    return Pauli::I;
}

std::string PauliString::word(std::span<const std::string> labels) const {
    std::string out;
    for (const auto &l : labels) {
        out.push_back(static_cast<char>(at(l)));
    }
    return out;
}

void PauliString::check(const Register &reg) const {
    for (const auto &[label, p] : letters_) {
        if (reg.dim_of(label) != 2) {
            throw InvalidArgument("Pauli letter on slot '" + label + "' which is not a qubit");
        }
    }
}

Matrix pauli_matrix(const PauliString &obs, const Register &reg) {
    obs.check(reg);
    if (reg.total_dim() > kMaxDensityDim) {
        throw DimensionCapError("dense Pauli operator exceeds cap");
    }
    Matrix out = Matrix::Ones(1, 1);
    for (const auto &slot : reg.slots()) {
        const Matrix factor =
            slot.dim == 2 ? gates::pauli(obs.at(slot.label)) : gates::identity(slot.dim);
        out = gates::kron(out, factor);
    }
    return out;
}

Vector apply_pauli(const Register &reg, const Vector &amps, const PauliString &obs) {
    obs.check(reg);
    Vector out = amps;
    for (const auto &[label, p] : obs.letters()) {
        const std::vector<std::string> target{label};
        out = apply_raw(reg, std::move(out), gates::pauli(p), target);
    }
    return out;
}

} // namespace sglab
