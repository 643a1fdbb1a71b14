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

#include "sglab/measure.hpp"

#include <vector>

#include "sglab/errors.hpp"

namespace sglab {

namespace {

constexpr double kNeverSample = 1e-14;

struct Projections {
    Vector plus;
    Vector minus;
};

Projections project(const PureState &state, const PauliString &obs) {
    if (obs.is_identity()) {
        throw InvalidArgument("identity observable has no measurement content");
    }
    const Vector o_psi = apply_pauli(state.reg(), state.amplitudes(), obs);
    return {(state.amplitudes() + o_psi) * 0.5, (state.amplitudes() - o_psi) * 0.5};
}

} // namespace

OutcomeProbabilities outcome_probabilities(const PureState &state, const PauliString &obs) {
    const auto p = project(state, obs);
    return {p.plus.squaredNorm(), p.minus.squaredNorm()};
}

MeasurementOutcome measure_projective(const PureState &state, const PauliString &obs, RngStream &rng) {
    auto p = project(state, obs);
    const double p_plus = p.plus.squaredNorm();
    const double p_minus = p.minus.squaredNorm();
    const double u = rng.uniform();
    bool plus;
    if (p_plus < kNeverSample) {
        plus = false;
    } else if (p_minus < kNeverSample) {
        plus = true;
    } else {
        plus = u * (p_plus + p_minus) < p_plus;
    }
    if (plus) {
        return {+1, p_plus, PureState::normalized(state.reg(), std::move(p.plus))};
    }
    return {-1, p_minus, PureState::normalized(state.reg(), std::move(p.minus))};
}

MeasurementOutcome measure_joint_spectral(const PureState &state, const PauliString &obs, RngStream &rng) {
    return measure_projective(state, obs, rng);
}

std::size_t sample_member(const EnsembleState &state, RngStream &rng) {
    const double u = rng.uniform();
    double acc = 0.0;
    const auto &members = state.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        acc += members[i].weight;
        if (u < acc && members[i].weight >= kNeverSample) {
            return i;
        }
    }
    // Rounding left u above the last cumulative weight: take the last nonzero member.
    for (std::size_t i = members.size(); i-- > 0;) {
        if (members[i].weight >= kNeverSample) {
            return i;
        }
    }
    return members.size() - 1;
}

MeasurementOutcome measure_joint_spectral(const EnsembleState &state, const PauliString &obs,
                                          RngStream &rng) {
    const std::size_t k = sample_member(state, rng);
    return measure_joint_spectral(state.members()[k].state, obs, rng);
}

MeasurementOutcome measure_projective(const EnsembleState &state, const PauliString &obs,
                                      RngStream &rng) {
    const std::size_t k = sample_member(state, rng);
    return measure_projective(state.members()[k].state, obs, rng);
}

CircuitReadout parity_circuit(const PureState &state, std::span<const std::string> targets,
                              ParityBasis basis, const std::string &ancilla, RngStream &rng) {
    if (targets.empty()) {
        throw InvalidArgument("parity circuit needs at least one target");
    }
    const PauliString z_anc{{ancilla, Pauli::Z}};
    (void)state.reg().index_of(ancilla);
    if (outcome_probabilities(state, z_anc).plus > kExactTol) {
        throw InvalidArgument("ancilla '" + ancilla + "' is not in |0>");
    }

    const Matrix h = gates::hadamard();
    const Matrix cx = gates::cnot();
    Vector amps = state.amplitudes();
    for (const auto &t : targets) {
        const std::vector<std::string> single{t};
        const std::vector<std::string> pair{t, ancilla};
        if (basis == ParityBasis::X) {
            amps = apply_raw(state.reg(), std::move(amps), h, single);
        }
        amps = apply_raw(state.reg(), std::move(amps), cx, pair);
        if (basis == ParityBasis::X) {
            amps = apply_raw(state.reg(), std::move(amps), h, single);
        }
    }
    const PureState coupled = PureState::normalized(state.reg(), std::move(amps));

    // Z = +1 <-> ancilla bit 1.
    auto out = measure_projective(coupled, z_anc, rng);
    const int bit = out.eigenvalue == +1 ? 1 : 0;
    const int readout = ((bit + static_cast<int>(targets.size())) % 2 == 0) ? +1 : -1;
    return {readout, out.probability, std::move(out.post_state)};
}

CircuitReadout joint_circuit_izz(const PureState &state, RngStream &rng) {
    const std::vector<std::string> targets{slots::a_up, slots::a_dn};
    return parity_circuit(state, targets, ParityBasis::Z, slots::b, rng);
}

CircuitReadout joint_circuit_xxx(const PureState &state, RngStream &rng) {
    const std::vector<std::string> targets{slots::a_up, slots::a_dn, slots::c};
    return parity_circuit(state, targets, ParityBasis::X, slots::b, rng);
}

} // namespace sglab
