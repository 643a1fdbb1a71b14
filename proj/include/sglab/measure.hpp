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

#include "sglab/pauli.hpp"
#include "sglab/rng.hpp"
#include "sglab/state.hpp"

namespace sglab {

/// Slot labels shared by the experiment pipelines.
namespace slots {
inline const std::string spin = "s";
inline const std::string a_up = "A_up";
inline const std::string a_dn = "A_dn";
inline const std::string p_up = "P_up";
inline const std::string p_dn = "P_dn";
inline const std::string b = "B";
inline const std::string c = "C";
} // namespace slots

struct MeasurementOutcome {
    int eigenvalue;     // +1 or -1
    double probability; // ||P_lambda psi||^2
    PureState post_state;
};

/// Probability of +1 and of -1 for a Pauli observable.
struct OutcomeProbabilities {
    double plus;
    double minus;
};

OutcomeProbabilities outcome_probabilities(const PureState &state, const PauliString &obs);

/**
 * Born-rule measurement of a Pauli observable.
 *
 * Samples lambda with probability ||P_lambda psi||^2, P_lambda = (I + lambda O)/2,
 * and returns the renormalized projection. Exactly one uniform draw is taken
 * from `rng`. A branch with probability below 1e-14 is never selected.
 */
MeasurementOutcome measure_projective(const PureState &state, const PauliString &obs, RngStream &rng);

/// Idealized nondestructive joint measurement: same Born rule, so an
/// eigenstate input comes back unchanged.
MeasurementOutcome measure_joint_spectral(const PureState &state, const PauliString &obs, RngStream &rng);

/// Mixed input: draw a member by weight, then measure it.
MeasurementOutcome measure_joint_spectral(const EnsembleState &state, const PauliString &obs,
                                          RngStream &rng);
MeasurementOutcome measure_projective(const EnsembleState &state, const PauliString &obs,
                                      RngStream &rng);

/// Index of an ensemble member drawn by weight (one uniform draw).
std::size_t sample_member(const EnsembleState &state, RngStream &rng);

enum class ParityBasis { Z, X };

struct CircuitReadout {
    int readout; // +1 or -1
    double probability;
    PureState post_state; // ancilla left in its read-out basis state
};

/**
 * Accumulates the parity of `targets` onto the ancilla and reads it in Z.
 *
 * Each target is coupled by CNOT(target -> ancilla), conjugated by Hadamards
 * on the target for the X basis. Z|1> = +|1> makes the product of n target
 * eigenvalues (-1)^(b + n), where b is the ancilla bit read out; for two
 * targets that is "ancilla |1> reports -1". Throws if the ancilla does not
 * start in |0>.
 */
CircuitReadout parity_circuit(const PureState &state, std::span<const std::string> targets,
                              ParityBasis basis, const std::string &ancilla, RngStream &rng);

/// IZZ via CNOT(A_up -> B), CNOT(A_dn -> B), Z readout of B.
CircuitReadout joint_circuit_izz(const PureState &state, RngStream &rng);

/// XXX via H-CNOT-H couplings of A_up, A_dn and C onto B. C must already
/// carry the spin's X value (see `experiment.hpp`).
CircuitReadout joint_circuit_xxx(const PureState &state, RngStream &rng);

} // namespace sglab
