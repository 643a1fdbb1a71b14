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

#include "sglab/state.hpp"

#include <cmath>

#include "sglab/errors.hpp"
#include "sglab/kernels.hpp"

namespace sglab {

namespace {

std::span<cplx> as_span(Vector &v) {
    return {v.data(), static_cast<std::size_t>(v.size())};
}

std::span<const cplx> as_span(const Vector &v) {
    return {v.data(), static_cast<std::size_t>(v.size())};
}

void require_hermitian(const Matrix &op) {
    if (op.rows() != op.cols() || !is_hermitian(op)) {
        throw InvalidArgument("expectation requires a Hermitian operator");
    }
}

} // namespace

bool is_hermitian(const Matrix &m, double tol) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const Matrix id = Matrix::Identity(m.rows(), m.cols());
    return (m.adjoint() * m - id).cwiseAbs().maxCoeff() <= tol;
}

PureState::PureState(Register reg, Vector amps) : reg_(std::move(reg)), amps_(std::move(amps)) {
    if (static_cast<std::size_t>(amps_.size()) != reg_.total_dim()) {
        throw InvalidArgument("amplitude vector has length " + std::to_string(amps_.size()) +
                              ", register needs " + std::to_string(reg_.total_dim()));
    }
    if (std::abs(amps_.norm() - 1.0) > kExactTol) {
        throw InvalidArgument("state is not normalized (norm " + std::to_string(amps_.norm()) + ")");
    }
}

PureState PureState::basis(Register reg, std::span<const std::size_t> digits) {
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(reg.total_dim()));
    amps(static_cast<Eigen::Index>(reg.flat_index(digits))) = 1.0;
    return PureState(std::move(reg), std::move(amps));
}

PureState PureState::basis(Register reg, std::string_view bits) {
    if (bits.size() != reg.size()) {
        throw InvalidArgument("basis word '" + std::string(bits) + "' does not match register size");
    }
    std::vector<std::size_t> digits;
    for (char c : bits) {
        if (c < '0' || c > '9') {
            throw InvalidArgument("basis word must be digits");
        }
        digits.push_back(static_cast<std::size_t>(c - '0'));
    }
    return basis(std::move(reg), digits);
}

PureState PureState::normalized(Register reg, Vector amps) {
    const double n = amps.norm();
    if (n < 1e-300) {
        throw InvalidArgument("cannot normalize the zero vector");
    }
    amps /= n;
    return PureState(std::move(reg), std::move(amps));
}

EnsembleState::EnsembleState(std::vector<Member> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw InvalidArgument("ensemble needs at least one member");
    }
    double total = 0.0;
    for (const auto &m : members_) {
        if (m.weight < 0.0) {
            throw InvalidArgument("ensemble weight is negative");
        }
        if (!(m.state.reg() == members_.front().state.reg())) {
            throw InvalidArgument("ensemble members must share one register");
        }
        total += m.weight;
    }
    if (std::abs(total - 1.0) > kExactTol) {
        throw InvalidArgument("ensemble weights sum to " + std::to_string(total));
    }
}

DensityMatrix::DensityMatrix(Register reg, Matrix entries) : reg_(std::move(reg)), rho_(std::move(entries)) {
    const auto n = static_cast<Eigen::Index>(reg_.total_dim());
    if (reg_.total_dim() > kMaxDensityDim) {
        throw DimensionCapError("density matrix dimension " + std::to_string(reg_.total_dim()) +
                                " exceeds cap of " + std::to_string(kMaxDensityDim));
    }
    if (rho_.rows() != n || rho_.cols() != n) {
        throw InvalidArgument("density matrix shape does not match register");
    }
    if (!is_hermitian(rho_)) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    if (std::abs(rho_.trace() - cplx(1.0)) > kExactTol) {
        throw InvalidArgument("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(rho_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-10) {
        throw InvalidArgument("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    if (psi.dim() > kMaxDensityDim) {
        throw DimensionCapError("density matrix dimension exceeds cap");
    }
    return DensityMatrix(psi.reg(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::from_ensemble(const EnsembleState &ens) {
    const auto n = static_cast<Eigen::Index>(ens.reg().total_dim());
    if (ens.reg().total_dim() > kMaxDensityDim) {
        throw DimensionCapError("density matrix dimension exceeds cap");
    }
    Matrix rho = Matrix::Zero(n, n);
    for (const auto &m : ens.members()) {
        rho.noalias() += m.weight * (m.state.amplitudes() * m.state.amplitudes().adjoint());
    }
    return DensityMatrix(ens.reg(), std::move(rho));
}

PureState tensor_product(const PureState &a, const PureState &b) {
    Register reg = a.reg().concat(b.reg());
    Vector amps(static_cast<Eigen::Index>(reg.total_dim()));
    const auto nb = static_cast<Eigen::Index>(b.dim());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.dim()); ++i) {
        amps.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
    }
    return PureState::normalized(std::move(reg), std::move(amps));
}

Vector apply_raw(const Register &reg, Vector amps, const Matrix &op,
                 std::span<const std::string> targets) {
    const auto layout = kernels::make_layout(reg, targets);
    kernels::omp::apply(as_span(amps), op, layout);
    return amps;
}

PureState apply_operator(const PureState &state, const Matrix &op,
                         std::span<const std::string> targets, Renormalize renorm) {
    Vector out = apply_raw(state.reg(), state.amplitudes(), op, targets);
    if (renorm == Renormalize::yes) {
        return PureState::normalized(state.reg(), std::move(out));
    }
    if (std::abs(out.norm() - 1.0) > kExactTol) {
        throw InvalidArgument("operator changed the norm; request renormalization");
    }
    // Unitary application: remove accumulated rounding so the norm invariant stays tight.
    out /= out.norm();
    return PureState(state.reg(), std::move(out));
}

PureState apply_operator(const PureState &state, const Matrix &op,
                         std::initializer_list<std::string> targets, Renormalize renorm) {
    const std::vector<std::string> t(targets);
    return apply_operator(state, op, std::span<const std::string>(t), renorm);
}

cplx expectation(const PureState &state, const Matrix &op, std::span<const std::string> targets) {
    require_hermitian(op);
    const auto layout = kernels::make_layout(state.reg(), targets);
    return kernels::omp::expectation(as_span(state.amplitudes()), op, layout);
}

cplx expectation(const PureState &state, const Matrix &op, std::initializer_list<std::string> targets) {
    const std::vector<std::string> t(targets);
    return expectation(state, op, std::span<const std::string>(t));
}

cplx expectation(const DensityMatrix &rho, const Matrix &op, std::span<const std::string> targets) {
    require_hermitian(op);
    const auto layout = kernels::make_layout(rho.reg(), targets);
    return kernels::omp::expectation(rho.entries(), op, layout);
}

cplx expectation(const DensityMatrix &rho, const Matrix &op, std::initializer_list<std::string> targets) {
    const std::vector<std::string> t(targets);
    return expectation(rho, op, std::span<const std::string>(t));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::string> keep) {
    if (keep.empty()) {
        throw InvalidArgument("partial trace needs at least one kept slot");
    }
    const auto layout = kernels::make_layout(rho.reg(), keep);
    return DensityMatrix(rho.reg().select(keep), kernels::omp::partial_trace(rho.entries(), layout));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<std::string> keep) {
    const std::vector<std::string> k(keep);
    return partial_trace(rho, std::span<const std::string>(k));
}

DensityMatrix partial_trace(const PureState &psi, std::span<const std::string> keep) {
    if (keep.empty()) {
        throw InvalidArgument("partial trace needs at least one kept slot");
    }
    Register sub = psi.reg().select(keep);
    if (sub.total_dim() > kMaxDensityDim) {
        throw DimensionCapError("reduced density matrix dimension exceeds cap");
    }
    const auto layout = kernels::make_layout(psi.reg(), keep);
    return DensityMatrix(std::move(sub),
                         kernels::omp::reduced_density(as_span(psi.amplitudes()), layout));
}

DensityMatrix partial_trace(const PureState &psi, std::initializer_list<std::string> keep) {
    const std::vector<std::string> k(keep);
    return partial_trace(psi, std::span<const std::string>(k));
}

double fidelity(const PureState &a, const PureState &b) {
    if (!(a.reg() == b.reg())) {
        throw InvalidArgument("fidelity needs states on the same register");
    }
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

double fidelity(const PureState &psi, const DensityMatrix &rho) {
    if (!(psi.reg() == rho.reg())) {
        throw InvalidArgument("fidelity needs state and density matrix on the same register");
    }
    return psi.amplitudes().dot(rho.entries() * psi.amplitudes()).real();
}

PureState factor_out(const PureState &state, const std::string &label, std::size_t digit) {
    const std::size_t dim = state.reg().dim_of(label);
    if (digit >= dim) {
        throw InvalidArgument("digit out of range for slot '" + label + "'");
    }
    Vector ket = Vector::Zero(static_cast<Eigen::Index>(dim));
    ket(static_cast<Eigen::Index>(digit)) = 1.0;
    auto [rest, prob] = contract(state, label, ket);
    if (std::abs(prob - 1.0) > kExactTol) {
        throw InvalidArgument("slot '" + label + "' is not in basis state " + std::to_string(digit));
    }
    return rest;
}

std::pair<PureState, double> contract(const PureState &state, const std::string &label,
                                      const Vector &ket) {
    const Register &reg = state.reg();
    const std::size_t dim = reg.dim_of(label);
    if (static_cast<std::size_t>(ket.size()) != dim) {
        throw InvalidArgument("contraction vector does not match slot '" + label + "'");
    }
    const std::vector<std::string> target{label};
    const auto rest_labels = reg.complement(target);
    if (rest_labels.empty()) {
        throw InvalidArgument("cannot contract the only slot of a register");
    }
    Register rest = reg.select(rest_labels);
    const auto layout = kernels::make_layout(reg, target);
    // Bases enumerate the other slots in register order, which is `rest`'s flat order.
    Vector out(static_cast<Eigen::Index>(layout.bases.size()));
    for (std::size_t i = 0; i < layout.bases.size(); ++i) {
        cplx acc = 0.0;
        for (std::size_t a = 0; a < dim; ++a) {
            acc += std::conj(ket(static_cast<Eigen::Index>(a))) *
                   state[layout.bases[i] + layout.offsets[a]];
        }
        out(static_cast<Eigen::Index>(i)) = acc;
    }
    const double prob = out.squaredNorm();
    if (prob < 1e-14) {
        throw InvalidArgument("contraction of slot '" + label + "' has probability below 1e-14");
    }
    return {PureState::normalized(std::move(rest), std::move(out)), prob};
}

} // namespace sglab
