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

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sglab/register.hpp"
#include "sglab/types.hpp"

namespace sglab {

/// Normalized ket on a labeled register.
class PureState {
  public:
    /// Throws InvalidArgument unless `amps` has the register's length and unit norm.
    PureState(Register reg, Vector amps);

    /// Computational basis state from one digit per slot.
    static PureState basis(Register reg, std::span<const std::size_t> digits);
    /// Qubit-register shorthand: `basis(reg, "110")`.
    static PureState basis(Register reg, std::string_view bits);
    /// Normalizes `amps` first; throws if it is zero.
    static PureState normalized(Register reg, Vector amps);

    [[nodiscard]] const Register &reg() const noexcept { return reg_; }
    [[nodiscard]] const Vector &amplitudes() const noexcept { return amps_; }
    [[nodiscard]] cplx operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
    [[nodiscard]] std::size_t dim() const noexcept { return reg_.total_dim(); }
    [[nodiscard]] double norm() const { return amps_.norm(); }

  private:
    Register reg_;
    Vector amps_;
};

/// Weighted list of pure states sharing one register.
class EnsembleState {
  public:
    struct Member {
        double weight;
        PureState state;
    };

    explicit EnsembleState(std::vector<Member> members);

    [[nodiscard]] const std::vector<Member> &members() const noexcept { return members_; }
    [[nodiscard]] const Register &reg() const { return members_.front().state.reg(); }

  private:
    std::vector<Member> members_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on a register.
class DensityMatrix {
  public:
    /// Validates the density-matrix contract (tolerances 1e-12, eigenvalues >= -1e-10).
    DensityMatrix(Register reg, Matrix entries);

    static DensityMatrix from_pure(const PureState &psi);
    static DensityMatrix from_ensemble(const EnsembleState &ens);

    [[nodiscard]] const Register &reg() const noexcept { return reg_; }
    [[nodiscard]] const Matrix &entries() const noexcept { return rho_; }
    [[nodiscard]] cplx operator()(std::size_t r, std::size_t c) const {
        return rho_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
    [[nodiscard]] std::size_t dim() const noexcept { return reg_.total_dim(); }

  private:
    Register reg_;
    Matrix rho_;
};

enum class Renormalize { no, yes };

/// Kronecker product on the concatenated register; throws on label collision.
PureState tensor_product(const PureState &a, const PureState &b);

/**
 * Applies `op` to the listed slots (identity elsewhere). Targets may be
 * non-adjacent and in any order; `op` is indexed big-endian over `targets`
 * as listed.
 *
 * With Renormalize::no the operator must preserve the norm; non-unitary
 * operators (projectors) need Renormalize::yes or `apply_raw`.
 */
PureState apply_operator(const PureState &state, const Matrix &op,
                         std::span<const std::string> targets,
                         Renormalize renorm = Renormalize::no);
PureState apply_operator(const PureState &state, const Matrix &op,
                         std::initializer_list<std::string> targets,
                         Renormalize renorm = Renormalize::no);

/// Unnormalized `(op (x) I) amps`.
Vector apply_raw(const Register &reg, Vector amps, const Matrix &op,
                 std::span<const std::string> targets);

/// <psi|O|psi>; `op` must be Hermitian.
cplx expectation(const PureState &state, const Matrix &op, std::span<const std::string> targets);
cplx expectation(const PureState &state, const Matrix &op, std::initializer_list<std::string> targets);
/// Tr(rho O); `op` must be Hermitian.
cplx expectation(const DensityMatrix &rho, const Matrix &op, std::span<const std::string> targets);
cplx expectation(const DensityMatrix &rho, const Matrix &op, std::initializer_list<std::string> targets);

/// Reduced density matrix on `keep` (in the order given).
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::string> keep);
DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<std::string> keep);
/// Same, straight from a ket without forming the full density matrix.
DensityMatrix partial_trace(const PureState &psi, std::span<const std::string> keep);
DensityMatrix partial_trace(const PureState &psi, std::initializer_list<std::string> keep);

/// |<a|b>|^2; registers must match.
double fidelity(const PureState &a, const PureState &b);
/// <psi|rho|psi>.
double fidelity(const PureState &psi, const DensityMatrix &rho);

/// Drops a slot known to be in basis state `digit`; throws if it is not.
PureState factor_out(const PureState &state, const std::string &label, std::size_t digit);

/// Contracts slot `label` with `<ket|` and renormalizes. Returns the state on
/// the remaining slots and the probability of that contraction.
std::pair<PureState, double> contract(const PureState &state, const std::string &label,
                                      const Vector &ket);

bool is_hermitian(const Matrix &m, double tol = kExactTol);
bool is_unitary(const Matrix &m, double tol = kExactTol);

} // namespace sglab
