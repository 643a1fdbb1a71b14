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

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sglab/register.hpp"
#include "sglab/types.hpp"

namespace sglab {

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/**
 * Single-qubit gates in the computational index order (|0>, |1>).
 *
 * Sign convention used throughout: Z|1> = |1>,
 * Z|0> = -|0>, Y|1> = i|0>, Y|0> = -i|1>. So |1> is the +1 eigenstate of Z
 * and XY = iZ still holds.
 */
namespace gates {
Matrix identity(std::size_t dim = 2);
Matrix pauli(Pauli p);
Matrix x();
Matrix y();
Matrix z();
/// (X + Z)/sqrt2: maps the X eigenstates (|1> +- |0>)/sqrt2 onto |1>, |0>.
Matrix hadamard();
/// Controlled-X on (control, target), control active on |1>.
Matrix cnot();
/// diag(1, e^{i chi}).
Matrix phase(double chi);
/// |i><j| on a slot of dimension `dim`.
Matrix outer(std::size_t i, std::size_t j, std::size_t dim = 2);
/// Kronecker product a (x) b; `a` acts on the more significant slot.
Matrix kron(const Matrix &a, const Matrix &b);
} // namespace gates

/// Pauli word addressed to named qubit slots; omitted slots are I.
class PauliString {
  public:
    PauliString() = default;
    PauliString(std::initializer_list<std::pair<std::string, Pauli>> letters);

    /// "ZZI" over ("s", "A_up", "A_dn").
    static PauliString from_word(std::string_view word, std::span<const std::string> labels);
    static PauliString from_word(std::string_view word, std::initializer_list<std::string> labels);

    /// Overwrites any previous letter for `label`.
    void set(const std::string &label, Pauli p);
    [[nodiscard]] Pauli at(const std::string &label) const;

    /// Non-identity letters, in insertion order.
    [[nodiscard]] const std::vector<std::pair<std::string, Pauli>> &letters() const noexcept {
        return letters_;
    }
    [[nodiscard]] bool is_identity() const noexcept { return letters_.empty(); }

    /// Word over `labels`, e.g. "IZZ".
    [[nodiscard]] std::string word(std::span<const std::string> labels) const;

    /// Throws unless every letter addresses a qubit slot of `reg`.
    void check(const Register &reg) const;

  private:
    std::vector<std::pair<std::string, Pauli>> letters_;
};

/// Dense operator of `obs` on the whole register.
Matrix pauli_matrix(const PauliString &obs, const Register &reg);

/// O|psi> for the Pauli word, without forming the dense operator.
Vector apply_pauli(const Register &reg, const Vector &amps, const PauliString &obs);

} // namespace sglab
