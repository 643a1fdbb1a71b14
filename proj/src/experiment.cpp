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

#include "sglab/experiment.hpp"

#include <cmath>
#include <numbers>

#include "sglab/errors.hpp"

namespace sglab {

namespace {

const std::vector<std::string> kAncillaLabels{slots::spin, slots::a_up, slots::a_dn};

Register interferometer_register() {
    return Register::qubits({slots::spin, slots::p_up, slots::p_dn, slots::a_up, slots::a_dn});
}

PureState drop(PureState psi, std::initializer_list<std::string> labels) {
    for (const auto &l : labels) {
        psi = factor_out(psi, l, 0);
    }
    return psi;
}

} // namespace

PureState split_paths(const PureState &psi) {
    PureState out = apply_operator(psi, gates::cnot(), {slots::spin, slots::p_up});
    out = apply_operator(out, gates::x(), {slots::p_dn});
    return apply_operator(out, gates::cnot(), {slots::spin, slots::p_dn});
}

PureState recombine_paths(const PureState &psi) {
    PureState out = apply_operator(psi, gates::cnot(), {slots::spin, slots::p_dn});
    out = apply_operator(out, gates::x(), {slots::p_dn});
    return apply_operator(out, gates::cnot(), {slots::spin, slots::p_up});
}

SpinPrep SpinPrep::balanced() {
    return {cplx((1.0 / std::numbers::sqrt2)), cplx((1.0 / std::numbers::sqrt2))};
}

void SpinPrep::validate() const {
    const double n = std::norm(alpha) + std::norm(beta);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kExactTol) {
        throw InvalidArgument("spin preparation is not normalized: |alpha|^2 + |beta|^2 = " +
                              std::to_string(n));
    }
}

PureState SpinPrep::ket() const {
    validate();
    Vector v(2);
    v << beta, alpha; // index 0 = |0> = down
    return PureState(Register::qubits({slots::spin}), v);
}

std::string to_string(Stage s) {
    switch (s) {
    case Stage::t1:
        return "t1";
    case Stage::t2:
        return "t2";
    case Stage::t3:
        return "t3";
    case Stage::t4:
        return "t4";
    }
    return "?";
}

std::vector<StageState> evolve_stages(const SpinPrep &prep, double phase) {
    prep.validate();
    const Register full = interferometer_register();
    PureState psi = tensor_product(prep.ket(),
                                   PureState::basis(full.select(std::vector<std::string>{
                                                        slots::p_up, slots::p_dn, slots::a_up,
                                                        slots::a_dn}),
                                                    "0000"));
    std::vector<StageState> stages;
    stages.push_back({Stage::t1, drop(psi, {slots::p_up, slots::p_dn})});

    psi = split_paths(psi);
    stages.push_back({Stage::t2, drop(psi, {slots::a_up, slots::a_dn})});

    psi = apply_operator(psi, gates::cnot(), {slots::p_up, slots::a_up});
    psi = apply_operator(psi, gates::cnot(), {slots::p_dn, slots::a_dn});
    // Paths are still separated at t3; the path pair is a function of the
    // spin, so it is disentangled to show the (s, A_up, A_dn) content.
    stages.push_back({Stage::t3, drop(recombine_paths(psi), {slots::p_up, slots::p_dn})});

    psi = apply_operator(psi, gates::phase(phase), {slots::p_dn});
    stages.push_back({Stage::t4, drop(recombine_paths(psi), {slots::p_up, slots::p_dn})});
    return stages;
}

PureState t4_state(const SpinPrep &prep, double phase) {
    return evolve_stages(prep, phase).back().state;
}

EnsembleState classical_mixture(const SpinPrep &prep) {
    prep.validate();
    const Register reg = Register::qubits({slots::spin, slots::a_up, slots::a_dn});
    return EnsembleState({{std::norm(prep.alpha), PureState::basis(reg, "110")},
                          {std::norm(prep.beta), PureState::basis(reg, "001")}});
}

std::string LocalShot::word() const {
    std::string w;
    for (int o : outcomes) {
        w.push_back(o == +1 ? '1' : '0');
    }
    return w;
}

namespace {

LocalShot local_shot(const EnsembleState &input, LocalBasis basis, LocalOrder order, RngStream rng) {
    const std::size_t member = input.members().size() > 1 ? sample_member(input, rng) : 0;
    PureState psi = input.members()[member].state;
    static const std::array<std::size_t, 3> spin_first{0, 1, 2};
    static const std::array<std::size_t, 3> ancillas_first{1, 2, 0};
    const auto &seq = order == LocalOrder::spin_first ? spin_first : ancillas_first;

    LocalShot shot{};
    shot.product = 1;
    for (std::size_t k : seq) {
        const std::string &label = kAncillaLabels[k];
        if (basis == LocalBasis::X) {
            psi = apply_operator(psi, gates::hadamard(), {label});
        }
        auto out = measure_projective(psi, PauliString{{label, Pauli::Z}}, rng);
        psi = std::move(out.post_state);
        shot.outcomes[k] = out.eigenvalue;
        shot.product *= out.eigenvalue;
    }
    return shot;
}

LocalModeResult summarize(std::vector<LocalShot> shots) {
    LocalModeResult r;
    for (const auto &s : shots) {
        ++r.histogram[s.word()];
        for (std::size_t k = 0; k < 3; ++k) {
            r.slot_means[k] += s.outcomes[k];
        }
        r.product_mean += s.product;
        r.product_plus += s.product == +1 ? 1 : 0;
    }
    const auto n = static_cast<double>(shots.size());
    for (auto &m : r.slot_means) {
        m /= n;
    }
    r.product_mean /= n;
    r.shots = std::move(shots);
    return r;
}

void check_local_input(const EnsembleState &input, std::size_t shots) {
    if (shots == 0) {
        throw InvalidArgument("shots must be >= 1");
    }
    for (const auto &l : kAncillaLabels) {
        (void)input.reg().index_of(l);
    }
    if (input.reg().size() != 3) {
        throw InvalidArgument("local mode expects the register (s, A_up, A_dn)");
    }
}

} // namespace

LocalModeResult run_local_mode(const EnsembleState &input, LocalBasis basis, std::size_t shots,
                               std::uint64_t seed, LocalOrder order) {
    check_local_input(input, shots);
    const RngStream root(seed);
    std::vector<LocalShot> out(shots);
    const auto n = static_cast<std::ptrdiff_t>(shots);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            local_shot(input, basis, order, root.split(static_cast<std::uint64_t>(i)));
    }
    return summarize(std::move(out));
}

LocalModeResult run_local_mode(const SpinPrep &prep, LocalBasis basis, std::size_t shots,
                               std::uint64_t seed, const LocalModeOptions &opts) {
    const EnsembleState input({{1.0, t4_state(prep, opts.phase)}});
    return run_local_mode(input, basis, shots, seed, opts.order);
}

namespace serial {

LocalModeResult run_local_mode(const EnsembleState &input, LocalBasis basis, std::size_t shots,
                               std::uint64_t seed, LocalOrder order) {
    check_local_input(input, shots);
    const RngStream root(seed);
    std::vector<LocalShot> out;
    out.reserve(shots);
    for (std::size_t i = 0; i < shots; ++i) {
        out.push_back(local_shot(input, basis, order, root.split(i)));
    }
    return summarize(std::move(out));
}

} // namespace serial

std::string to_string(JointObservable o) {
    switch (o) {
    case JointObservable::IZZ:
        return "IZZ";
    case JointObservable::ZZI:
        return "ZZI";
    case JointObservable::ZIZ:
        return "ZIZ";
    case JointObservable::XXX:
        return "XXX";
    }
    return "?";
}

JointObservable parse_joint_observable(const std::string &s) {
    for (auto o : {JointObservable::IZZ, JointObservable::ZZI, JointObservable::ZIZ,
                   JointObservable::XXX}) {
        if (to_string(o) == s) {
            return o;
        }
    }
    throw InvalidArgument("unknown joint observable '" + s + "' (expected IZZ, ZZI, ZIZ or XXX)");
}

PureState load_spin_x_into_c(const PureState &state) {
    PureState out = apply_operator(state, gates::hadamard(), {slots::spin});
    out = apply_operator(out, gates::cnot(), {slots::spin, slots::c});
    out = apply_operator(out, gates::hadamard(), {slots::spin});
    return apply_operator(out, gates::hadamard(), {slots::c});
}

PureState unload_spin_x_from_c(const PureState &state) {
    PureState out = apply_operator(state, gates::hadamard(), {slots::c});
    out = apply_operator(out, gates::hadamard(), {slots::spin});
    out = apply_operator(out, gates::cnot(), {slots::spin, slots::c});
    return apply_operator(out, gates::hadamard(), {slots::spin});
}

namespace {

CircuitReadout joint_step(const PureState &psi, JointObservable obs, RngStream &rng) {
    switch (obs) {
    case JointObservable::IZZ:
        return joint_circuit_izz(psi, rng);
    case JointObservable::ZZI:
    case JointObservable::ZIZ: {
        const std::string &partner = obs == JointObservable::ZZI ? slots::a_up : slots::a_dn;
        const PureState loaded = apply_operator(psi, gates::cnot(), {slots::spin, slots::c});
        const std::vector<std::string> targets{slots::c, partner};
        auto r = parity_circuit(loaded, targets, ParityBasis::Z, slots::b, rng);
        r.post_state = apply_operator(r.post_state, gates::cnot(), {slots::spin, slots::c});
        return r;
    }
    case JointObservable::XXX: {
        auto r = joint_circuit_xxx(load_spin_x_into_c(psi), rng);
        r.post_state = unload_spin_x_from_c(r.post_state);
        return r;
    }
    }
    throw InvalidArgument("unknown joint observable");
}

PureState reset_b(const PureState &psi) {
    const auto p = outcome_probabilities(psi, PauliString{{slots::b, Pauli::Z}});
    return p.plus > 0.5 ? apply_operator(psi, gates::x(), {slots::b}) : psi;
}

} // namespace

JointModeResult run_joint_mode(const SpinPrep &prep, std::span<const JointObservable> observables,
                               std::uint64_t seed, double phase) {
    const PureState initial = t4_state(prep, phase);
    PureState psi = tensor_product(initial, PureState::basis(Register::qubits({slots::c, slots::b}), "00"));
    RngStream rng(seed);
    std::vector<JointStep> steps;
    double fid = 1.0;
    for (auto obs : observables) {
        auto r = joint_step(psi, obs, rng);
        psi = reset_b(r.post_state);
        fid = fidelity(initial, partial_trace(psi, kAncillaLabels));
        steps.push_back({obs, r.readout, r.probability, fid});
    }
    return {std::move(steps), fid, std::move(psi)};
}

ConditionedAncillas condition_on_spin_x(const SpinPrep &prep, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw InvalidArgument("spin X outcome must be +1 or -1");
    }
    const PureState psi = t4_state(prep);
    // X eigenstates (|1> +- |0>)/sqrt2 in (|0>, |1>) index order.
    Vector ket(2);
    ket << static_cast<double>(outcome) * (1.0 / std::numbers::sqrt2), (1.0 / std::numbers::sqrt2);
    auto [ancillas, prob] = contract(psi, slots::spin, ket);
    return {std::move(ancillas), prob};
}

OrdinaryPremeasurement ordinary_premeasurement(const SpinPrep &prep) {
    StageState t2 = evolve_stages(prep)[1];
    const Matrix zz = gates::kron(gates::z(), gates::z());
    const double pp = expectation(t2.state, zz, {slots::p_up, slots::p_dn}).real();
    const double sp_up = expectation(t2.state, zz, {slots::spin, slots::p_up}).real();
    const double sp_dn = expectation(t2.state, zz, {slots::spin, slots::p_dn}).real();
    return {std::move(t2), pp, sp_up, sp_dn};
}

} // namespace sglab
