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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sglab/experiment.hpp"
#include "sglab/rng.hpp"
#include "sglab/state.hpp"

namespace sglab {

enum class DetectorMode { transmitting, absorbing };
/// Class of the environment part V of the passage unitary.
enum class EnvModel { haar, phases, identity };
/// Distribution p_mu over the initial environment microstates.
enum class WeightsModel { uniform, geometric };

std::string to_string(DetectorMode m);
std::string to_string(EnvModel m);
std::string to_string(WeightsModel m);
EnvModel parse_env_model(const std::string &s);
WeightsModel parse_weights_model(const std::string &s);

/// Slot labels of the detector registers.
namespace slots {
inline const std::string d_up = "D_up"; // pointer (readout) of the upper detector
inline const std::string d_dn = "D_dn";
inline const std::string e_up = "E_up"; // internal environment, dimension d
inline const std::string e_dn = "E_dn";
} // namespace slots

/**
 * Real detector: a readout qubit and an internal environment of dimension d.
 * Passage of the atom maps |0, mu> to |1, V mu>.
 */
struct DetectorModel {
    std::size_t d = 1;
    std::vector<double> weights{1.0};
    Matrix env_unitary = Matrix::Identity(1, 1);
    DetectorMode mode = DetectorMode::transmitting;
    std::string label = "D_up";

    /// Weights a probability vector of length d, V unitary to 1e-12.
    void validate() const;
};

std::vector<double> make_weights(std::size_t d, WeightsModel model);
Matrix make_env_unitary(std::size_t d, EnvModel model, RngStream &rng);

DetectorModel make_detector(std::size_t d, EnvModel env, WeightsModel weights, DetectorMode mode,
                            std::string label, RngStream &rng);

struct DetectorPair {
    DetectorModel up;
    DetectorModel down;
};

/// Both detectors of one seeded model; up draws from split(0), down from split(1).
DetectorPair make_detector_pair(std::size_t d, EnvModel env, WeightsModel weights,
                                DetectorMode mode, std::uint64_t seed);

struct CoherenceFactor {
    cplx value; // sum_mu p_mu <mu|V|mu>, |value| <= 1
};

CoherenceFactor coherence_factor(const DetectorModel &det);

/// X (x) V on (readout, environment).
Matrix detector_passage_unitary(const DetectorModel &det);

/**
 * Absorbing passage on the padded space (path, readout, environment):
 * |1>_P |0, mu> <-> |0>_P |1, V mu>, identity on the P = readout sectors.
 * The atom's path occupation is consumed into the detector's 1-sector.
 */
Matrix absorbing_passage_unitary(const DetectorModel &det);

/**
 * Full detector X operator on (readout, environment):
 * P(1) U P(0) + P(0) U^-1 P(1). For absorbing detectors U is the padded
 * passage contracted with <0|_P ... |1>_P.
 */
Matrix demon_x_operator(const DetectorModel &det);

/// Largest working register (path qubits included) for the full-rho oracle.
inline constexpr std::size_t kOracleDimCap = 512;

/**
 * Spin/detector density matrix at t4, built by brute force: one pure state
 * per pair of initial microstates (mu_up, mu_dn), weighted p p, pushed
 * through split / passage / recombine gates.
 *
 * Transmitting register: (s, D_up, E_up, D_dn, E_dn). Absorbing: the atom is
 * consumed, register (D_up, E_up, D_dn, E_dn).
 */
DensityMatrix rho_t4_full(const SpinPrep &prep, const DetectorModel &up, const DetectorModel &down);

/**
 * Environment-traced state from the coherence factors alone: diagonal
 * (|alpha|^2, |beta|^2) on |110>, |001> of (s, D_up, D_dn) (absorbing: |10>,
 * |01> of (D_up, D_dn)) with off-diagonal alpha beta* f_up conj(f_dn).
 */
DensityMatrix reduced_rho_analytic(const SpinPrep &prep, const DetectorModel &up,
                                   const DetectorModel &down);

/// Pointer labels kept by the environment trace for `mode`.
std::vector<std::string> pointer_labels(DetectorMode mode);

struct BlindnessReport {
    DetectorMode mode;
    std::size_t d;
    cplx f_up;
    cplx f_dn;
    /// <X_s X_Dup X_Ddn> (absorbing: <X_Dup X_Ddn>) with demon operators, full rho.
    double demon_x;
    /// Same observable with readout-only X (identity on the environments), full rho.
    double readout_x;
    /// 2 Re(alpha beta* f_up conj(f_dn)).
    double readout_x_analytic;
    /// Z-sector correlations from the full rho; spin ones absent when absorbing.
    std::optional<double> zs_zup;
    std::optional<double> zs_zdn;
    double zup_zdn;
    /// max |reduced_rho_analytic - Tr_E rho_t4_full|.
    double oracle_deviation;
};

/// Demon vs readout-only superposition test on the full rho (subject to the oracle cap).
BlindnessReport blindness_contrast(const SpinPrep &prep, const DetectorModel &up,
                                   const DetectorModel &down);

/// The same analysis with both detectors switched to absorbing mode.
BlindnessReport absorbing_variant(const SpinPrep &prep, const DetectorModel &up,
                                  const DetectorModel &down);

struct SweepPoint {
    std::size_t d;
    std::size_t trial;
    std::uint64_t seed;
    double f_abs2;       // |f_up|^2
    double offdiag_abs;  // |alpha beta* f_up conj(f_dn)|
    double zs_zup;       // from the analytic reduced rho
    double zs_zdn;
    double zup_zdn;
};

/// Seed of model `trial` at dimension `d` derived from a run seed.
std::uint64_t model_seed(std::uint64_t seed, std::size_t d, std::size_t trial);

/// Seeded Monte Carlo over environment models for each d; transmitting mode.
std::vector<SweepPoint> suppression_sweep(const SpinPrep &prep, std::span<const std::size_t> ds,
                                          std::size_t trials, EnvModel env, WeightsModel weights,
                                          std::uint64_t seed);

namespace serial {
std::vector<SweepPoint> suppression_sweep(const SpinPrep &prep, std::span<const std::size_t> ds,
                                          std::size_t trials, EnvModel env, WeightsModel weights,
                                          std::uint64_t seed);
} // namespace serial

} // namespace sglab
