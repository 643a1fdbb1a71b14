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

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sglab/measure.hpp"
#include "sglab/state.hpp"

namespace sglab {

/// Incoming spin state alpha|1> + beta|0> (|1> = spin up).
struct SpinPrep {
    cplx alpha;
    cplx beta;

    static SpinPrep balanced();
    /// Throws InvalidArgument unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
    void validate() const;
    /// alpha|1> + beta|0> on the single slot "s".
    [[nodiscard]] PureState ket() const;
};

enum class Stage { t1, t2, t3, t4 };

std::string to_string(Stage s);

/// t1, t3, t4 live on (s, A_up, A_dn); t2 on the path register (s, P_up, P_dn).
struct StageState {
    Stage stage;
    PureState state;
};

/**
 * Interferometer run from t1 to t4.
 *
 * The magnet is modeled as gates on an internal (s, P_up, P_dn, A_up, A_dn)
 * register: path occupation copied from the spin, each ancilla flipped by
 * its path, then the paths recombined. `phase` is an extra e^{i phase} on the
 * lower path before recombination (0 in the ideal interferometer).
 */
std::vector<StageState> evolve_stages(const SpinPrep &prep, double phase = 0.0);

/// Path occupation copied from the spin (P_up = s, P_dn = NOT s); needs
/// slots s, P_up, P_dn with both paths empty.
PureState split_paths(const PureState &psi);
/// Inverse of `split_paths`.
PureState recombine_paths(const PureState &psi);

/// The t4 state on (s, A_up, A_dn).
PureState t4_state(const SpinPrep &prep, double phase = 0.0);

/// |alpha|^2 |110><110| + |beta|^2 |001><001| as an ensemble.
EnsembleState classical_mixture(const SpinPrep &prep);

enum class LocalBasis { Z, X };
enum class LocalOrder { spin_first, ancillas_first };

struct LocalShot {
    std::array<int, 3> outcomes; // (s, A_up, A_dn), each +1 or -1
    int product;
    /// Bits over (s, A_up, A_dn); '1' for outcome +1.
    [[nodiscard]] std::string word() const;
};

struct LocalModeResult {
    std::vector<LocalShot> shots;
    std::map<std::string, std::size_t> histogram;
    std::array<double, 3> slot_means{};
    double product_mean = 0.0;
    std::size_t product_plus = 0;
};

struct LocalModeOptions {
    LocalOrder order = LocalOrder::spin_first;
    double phase = 0.0;
};

/**
 * Local readout. Each shot rebuilds the input, measures the three
 * slots one at a time (X basis = Hadamard, then Z readout) and records the
 * word and the product. Shot i draws from `RngStream(seed).split(i)`.
 */
LocalModeResult run_local_mode(const SpinPrep &prep, LocalBasis basis, std::size_t shots,
                               std::uint64_t seed, const LocalModeOptions &opts = {});
/// Same, for a mixed input: each shot first draws a member by weight.
LocalModeResult run_local_mode(const EnsembleState &input, LocalBasis basis, std::size_t shots,
                               std::uint64_t seed, LocalOrder order = LocalOrder::spin_first);

namespace serial {
/// Single-threaded reference for the shot loop.
LocalModeResult run_local_mode(const EnsembleState &input, LocalBasis basis, std::size_t shots,
                               std::uint64_t seed, LocalOrder order = LocalOrder::spin_first);
} // namespace serial

enum class JointObservable { IZZ, ZZI, ZIZ, XXX };

std::string to_string(JointObservable o);
JointObservable parse_joint_observable(const std::string &s);

struct JointStep {
    JointObservable observable;
    int readout;
    double probability;
    /// Fidelity of the (s, A_up, A_dn) marginal with the initial t4 state after this step.
    double fidelity;
};

struct JointModeResult {
    std::vector<JointStep> steps;
    double final_fidelity = 1.0;
    PureState final_state; // on (s, A_up, A_dn, C, B)
};

/**
 * Nondestructive joint sequence on one state instance (s, A_up, A_dn, C, B).
 *
 * IZZ couples A_up, A_dn to B. ZZI / ZIZ first copy Z_s onto C and couple C
 * with one ancilla. XXX first loads the spin's X value into C's X basis
 * (H_s, CNOT(s -> C), H_s, H_C) and couples A_up, A_dn, C through
 * Hadamard-conjugated CNOTs. C's preparation is undone and B reset after
 * every readout.
 */
JointModeResult run_joint_mode(const SpinPrep &prep, std::span<const JointObservable> observables,
                               std::uint64_t seed, double phase = 0.0);

/// Loads X_s into C's X basis on a register holding s and C (C in |0>).
PureState load_spin_x_into_c(const PureState &state);
/// Inverse of `load_spin_x_into_c`.
PureState unload_spin_x_from_c(const PureState &state);

struct ConditionedAncillas {
    PureState ancillas; // on (A_up, A_dn)
    double probability;
};

/// Two-ancilla state after the spin's X readout gave `outcome` (+1 / -1).
ConditionedAncillas condition_on_spin_x(const SpinPrep &prep, int outcome);

struct OrdinaryPremeasurement {
    StageState stage; // t2 on (s, P_up, P_dn)
    double zp_up_zp_dn;
    double zs_zp_up;
    double zs_zp_dn;
};

/// Spin/path premeasurement of an ordinary apparatus, with its three
/// defining joint eigenvalues evaluated.
OrdinaryPremeasurement ordinary_premeasurement(const SpinPrep &prep);

} // namespace sglab
