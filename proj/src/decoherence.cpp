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

#include "sglab/decoherence.hpp"

#include <cmath>
#include <numbers>

#include "sglab/errors.hpp"
#include "sglab/haar.hpp"
#include "sglab/pauli.hpp"

namespace sglab {

std::string to_string(DetectorMode m) {
    return m == DetectorMode::transmitting ? "transmitting" : "absorbing";
}

std::string to_string(EnvModel m) {
    switch (m) {
    case EnvModel::haar:
        return "haar";
    case EnvModel::phases:
        return "phases";
    case EnvModel::identity:
        return "identity";
    }
    return "?";
}

std::string to_string(WeightsModel m) {
    return m == WeightsModel::uniform ? "uniform" : "geometric";
}

EnvModel parse_env_model(const std::string &s) {
    for (auto m : {EnvModel::haar, EnvModel::phases, EnvModel::identity}) {
        if (to_string(m) == s) {
            return m;
        }
    }
    throw InvalidArgument("unknown environment model '" + s + "' (expected haar, phases or identity)");
}

WeightsModel parse_weights_model(const std::string &s) {
    for (auto m : {WeightsModel::uniform, WeightsModel::geometric}) {
        if (to_string(m) == s) {
            return m;
        }
    }
    throw InvalidArgument("unknown weights model '" + s + "' (expected uniform or geometric)");
}

void DetectorModel::validate() const {
    if (d == 0) {
        throw InvalidArgument("detector environment dimension must be >= 1");
    }
    if (weights.size() != d) {
        throw InvalidArgument("detector weights must have length d");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw InvalidArgument("detector weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kExactTol) {
        throw InvalidArgument("detector weights must sum to 1");
    }
    const auto n = static_cast<Eigen::Index>(d);
    if (env_unitary.rows() != n || env_unitary.cols() != n || !is_unitary(env_unitary)) {
        throw InvalidArgument("detector environment operator must be a d x d unitary");
    }
}

std::vector<double> make_weights(std::size_t d, WeightsModel model) {
    if (d == 0) {
        throw InvalidArgument("detector environment dimension must be >= 1");
    }
    std::vector<double> w(d);
    if (model == WeightsModel::uniform) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(d));
        return w;
    }
    double total = 0.0;
    for (std::size_t mu = 0; mu < d; ++mu) {
        w[mu] = std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(mu, 1000)));
        total += w[mu];
    }
    for (auto &x : w) {
        x /= total;
    }
    return w;
}

Matrix make_env_unitary(std::size_t d, EnvModel model, RngStream &rng) {
    switch (model) {
    case EnvModel::haar:
        return haar_unitary(d, rng);
    case EnvModel::phases: {
        Matrix v = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (Eigen::Index k = 0; k < v.rows(); ++k) {
            v(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        }
        return v;
    }
    case EnvModel::identity:
        return gates::identity(d);
    }
    throw InvalidArgument("unknown environment model");
}

DetectorModel make_detector(std::size_t d, EnvModel env, WeightsModel weights, DetectorMode mode,
                            std::string label, RngStream &rng) {
    DetectorModel det{d, make_weights(d, weights), make_env_unitary(d, env, rng), mode,
                      std::move(label)};
    det.validate();
    return det;
}

DetectorPair make_detector_pair(std::size_t d, EnvModel env, WeightsModel weights,
                                DetectorMode mode, std::uint64_t seed) {
    const RngStream root(seed);
    RngStream up = root.split(0);
    RngStream down = root.split(1);
    return {make_detector(d, env, weights, mode, slots::d_up, up),
            make_detector(d, env, weights, mode, slots::d_dn, down)};
}

CoherenceFactor coherence_factor(const DetectorModel &det) {
    cplx f = 0.0;
    for (std::size_t mu = 0; mu < det.d; ++mu) {
        const auto m = static_cast<Eigen::Index>(mu);
        f += det.weights[mu] * det.env_unitary(m, m);
    }
    return {f};
}

Matrix detector_passage_unitary(const DetectorModel &det) {
    return gates::kron(gates::x(), det.env_unitary);
}

Matrix absorbing_passage_unitary(const DetectorModel &det) {
    const auto d = static_cast<Eigen::Index>(det.d);
    // Flat index (path, readout, env) = path * 2d + readout * d + env.
    Matrix w = Matrix::Identity(4 * d, 4 * d);
    w.block(d, d, d, d).setZero();         // (P=0, r=1) sector
    w.block(2 * d, 2 * d, d, d).setZero(); // (P=1, r=0) sector
    w.block(d, 2 * d, d, d) = det.env_unitary;             // |1>_P|0,mu> -> |0>_P|1,V mu>
    w.block(2 * d, d, d, d) = det.env_unitary.adjoint();   // and back
    return w;
}

Matrix demon_x_operator(const DetectorModel &det) {
    det.validate();
    const auto d = static_cast<Eigen::Index>(det.d);
    const Matrix p0 = gates::kron(gates::outer(0, 0), gates::identity(det.d));
    const Matrix p1 = gates::kron(gates::outer(1, 1), gates::identity(det.d));
    Matrix forward;
    if (det.mode == DetectorMode::transmitting) {
        forward = detector_passage_unitary(det);
    } else {
        // <0|_P W |1>_P as an operator on (readout, environment).
        forward = absorbing_passage_unitary(det).block(0, 2 * d, 2 * d, 2 * d);
    }
    const Matrix raising = p1 * forward * p0;
    return raising + raising.adjoint();
}

std::vector<std::string> pointer_labels(DetectorMode mode) {
    if (mode == DetectorMode::transmitting) {
        return {sglab::slots::spin, slots::d_up, slots::d_dn};
    }
    return {slots::d_up, slots::d_dn};
}

namespace {

DetectorMode common_mode(const DetectorModel &up, const DetectorModel &down) {
    up.validate();
    down.validate();
    if (up.mode != down.mode) {
        throw InvalidArgument("both detectors must use the same mode");
    }
    return up.mode;
}

Matrix controlled(const Matrix &u) {
    const Eigen::Index n = u.rows();
    Matrix c = Matrix::Identity(2 * n, 2 * n);
    c.block(n, n, n, n) = u;
    return c;
}

PureState drop_zero(PureState psi, std::initializer_list<std::string> labels) {
    for (const auto &l : labels) {
        psi = factor_out(psi, l, 0);
    }
    return psi;
}

} // namespace

DensityMatrix rho_t4_full(const SpinPrep &prep, const DetectorModel &up, const DetectorModel &down) {
    const DetectorMode mode = common_mode(up, down);
    prep.validate();
    const std::size_t work_dim = 8 * (2 * up.d) * (2 * down.d);
    if (work_dim > kOracleDimCap) {
        throw DimensionCapError("full density-matrix construction needs dimension " +
                                std::to_string(work_dim) + " > cap " +
                                std::to_string(kOracleDimCap) + "; use the analytic path");
    }
    const Register rest({{sglab::slots::p_up, 2},
                         {sglab::slots::p_dn, 2},
                         {slots::d_up, 2},
                         {slots::e_up, up.d},
                         {slots::d_dn, 2},
                         {slots::e_dn, down.d}});
    const std::vector<std::string> up_slots{sglab::slots::p_up, slots::d_up, slots::e_up};
    const std::vector<std::string> dn_slots{sglab::slots::p_dn, slots::d_dn, slots::e_dn};
    Matrix pass_up, pass_dn;
    if (mode == DetectorMode::transmitting) {
        pass_up = controlled(detector_passage_unitary(up));
        pass_dn = controlled(detector_passage_unitary(down));
    } else {
        pass_up = absorbing_passage_unitary(up);
        pass_dn = absorbing_passage_unitary(down);
    }

    std::optional<Register> out_reg;
    Matrix rho;
    for (std::size_t mu_up = 0; mu_up < up.d; ++mu_up) {
        for (std::size_t mu_dn = 0; mu_dn < down.d; ++mu_dn) {
            const double w = up.weights[mu_up] * down.weights[mu_dn];
            const std::array<std::size_t, 6> digits{0, 0, 0, mu_up, 0, mu_dn};
            PureState psi = split_paths(tensor_product(prep.ket(), PureState::basis(rest, digits)));
            if (mode == DetectorMode::transmitting) {
                psi = apply_operator(psi, pass_up, up_slots);
                psi = apply_operator(psi, pass_dn, dn_slots);
                psi = drop_zero(recombine_paths(psi), {sglab::slots::p_up, sglab::slots::p_dn});
            } else {
                // Spin travels with the absorbed atom: fold it into the path pair.
                psi = apply_operator(psi, gates::cnot(), {sglab::slots::p_up, sglab::slots::spin});
                psi = drop_zero(psi, {sglab::slots::spin});
                psi = apply_operator(psi, pass_up, up_slots);
                psi = apply_operator(psi, pass_dn, dn_slots);
                psi = drop_zero(psi, {sglab::slots::p_up, sglab::slots::p_dn});
            }
            if (!out_reg) {
                out_reg = psi.reg();
                rho = Matrix::Zero(static_cast<Eigen::Index>(psi.dim()),
                                   static_cast<Eigen::Index>(psi.dim()));
            }
            rho.noalias() += w * (psi.amplitudes() * psi.amplitudes().adjoint());
        }
    }
    return DensityMatrix(std::move(*out_reg), std::move(rho));
}

DensityMatrix reduced_rho_analytic(const SpinPrep &prep, const DetectorModel &up,
                                   const DetectorModel &down) {
    const DetectorMode mode = common_mode(up, down);
    prep.validate();
    const cplx off = prep.alpha * std::conj(prep.beta) * coherence_factor(up).value *
                     std::conj(coherence_factor(down).value);
    const auto labels = pointer_labels(mode);
    std::vector<Slot> slots_;
    for (const auto &l : labels) {
        slots_.push_back({l, 2});
    }
    Register reg(std::move(slots_));
    // Branch indices: |110>, |001> with spin; |10>, |01> without.
    const Eigen::Index first = mode == DetectorMode::transmitting ? 6 : 2;
    const Eigen::Index second = 1;
    const auto n = static_cast<Eigen::Index>(reg.total_dim());
    Matrix rho = Matrix::Zero(n, n);
    rho(first, first) = std::norm(prep.alpha);
    rho(second, second) = std::norm(prep.beta);
    rho(first, second) = off;
    rho(second, first) = std::conj(off);
    return DensityMatrix(std::move(reg), std::move(rho));
}

namespace {

BlindnessReport contrast(const SpinPrep &prep, const DetectorModel &up, const DetectorModel &down) {
    const DetectorMode mode = common_mode(up, down);
    const DensityMatrix rho = rho_t4_full(prep, up, down);
    const DensityMatrix analytic = reduced_rho_analytic(prep, up, down);
    const DensityMatrix traced = partial_trace(rho, pointer_labels(mode));

    const Matrix x = gates::x();
    const Matrix zz = gates::kron(gates::z(), gates::z());
    const Matrix demon_pair = gates::kron(demon_x_operator(up), demon_x_operator(down));
    const Matrix readout_pair = gates::kron(x, x);

    BlindnessReport r{};
    r.mode = mode;
    r.d = up.d;
    r.f_up = coherence_factor(up).value;
    r.f_dn = coherence_factor(down).value;
    r.readout_x_analytic =
        2.0 * (prep.alpha * std::conj(prep.beta) * r.f_up * std::conj(r.f_dn)).real();
    if (mode == DetectorMode::transmitting) {
        r.demon_x = expectation(rho, gates::kron(x, demon_pair),
                                {sglab::slots::spin, slots::d_up, slots::e_up, slots::d_dn, slots::e_dn})
                        .real();
        r.readout_x = expectation(rho, gates::kron(x, readout_pair),
                                  {sglab::slots::spin, slots::d_up, slots::d_dn})
                          .real();
        r.zs_zup = expectation(rho, zz, {sglab::slots::spin, slots::d_up}).real();
        r.zs_zdn = expectation(rho, zz, {sglab::slots::spin, slots::d_dn}).real();
    } else {
        r.demon_x = expectation(rho, demon_pair, {slots::d_up, slots::e_up, slots::d_dn, slots::e_dn}).real();
        r.readout_x = expectation(rho, readout_pair, {slots::d_up, slots::d_dn}).real();
    }
    r.zup_zdn = expectation(rho, zz, {slots::d_up, slots::d_dn}).real();
    r.oracle_deviation = (analytic.entries() - traced.entries()).cwiseAbs().maxCoeff();
    return r;
}

DetectorModel with_mode(DetectorModel det, DetectorMode mode) {
    det.mode = mode;
    return det;
}

SweepPoint sweep_point(const SpinPrep &prep, std::size_t d, std::size_t trial, std::uint64_t seed,
                       EnvModel env, WeightsModel weights) {
    const DetectorPair pair = make_detector_pair(d, env, weights, DetectorMode::transmitting, seed);
    const DensityMatrix red = reduced_rho_analytic(prep, pair.up, pair.down);
    const cplx f_up = coherence_factor(pair.up).value;
    const cplx f_dn = coherence_factor(pair.down).value;
    const Matrix zz = gates::kron(gates::z(), gates::z());
    return {d,
            trial,
            seed,
            std::norm(f_up),
            std::abs(prep.alpha * std::conj(prep.beta) * f_up * std::conj(f_dn)),
            expectation(red, zz, {sglab::slots::spin, slots::d_up}).real(),
            expectation(red, zz, {sglab::slots::spin, slots::d_dn}).real(),
            expectation(red, zz, {slots::d_up, slots::d_dn}).real()};
}

void check_sweep(const SpinPrep &prep, std::span<const std::size_t> ds, std::size_t trials) {
    prep.validate();
    if (ds.empty() || trials == 0) {
        throw InvalidArgument("sweep needs at least one d and one trial");
    }
    for (auto d : ds) {
        if (d == 0) {
            throw InvalidArgument("environment dimension must be >= 1");
        }
    }
}

} // namespace

std::uint64_t model_seed(std::uint64_t seed, std::size_t d, std::size_t trial) {
    return RngStream(seed).split(d).split(trial).key();
}

BlindnessReport blindness_contrast(const SpinPrep &prep, const DetectorModel &up,
                                   const DetectorModel &down) {
    return contrast(prep, with_mode(up, DetectorMode::transmitting),
                    with_mode(down, DetectorMode::transmitting));
}

BlindnessReport absorbing_variant(const SpinPrep &prep, const DetectorModel &up,
                                  const DetectorModel &down) {
    return contrast(prep, with_mode(up, DetectorMode::absorbing),
                    with_mode(down, DetectorMode::absorbing));
}

std::vector<SweepPoint> suppression_sweep(const SpinPrep &prep, std::span<const std::size_t> ds,
                                          std::size_t trials, EnvModel env, WeightsModel weights,
                                          std::uint64_t seed) {
    check_sweep(prep, ds, trials);
    std::vector<SweepPoint> out(ds.size() * trials);
    const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const std::size_t d = ds[k / trials];
        const std::size_t t = k % trials;
        out[k] = sweep_point(prep, d, t, model_seed(seed, d, t), env, weights);
    }
    return out;
}

namespace serial {

std::vector<SweepPoint> suppression_sweep(const SpinPrep &prep, std::span<const std::size_t> ds,
                                          std::size_t trials, EnvModel env, WeightsModel weights,
                                          std::uint64_t seed) {
    check_sweep(prep, ds, trials);
    std::vector<SweepPoint> out;
    out.reserve(ds.size() * trials);
    for (std::size_t d : ds) {
        for (std::size_t t = 0; t < trials; ++t) {
            out.push_back(sweep_point(prep, d, t, model_seed(seed, d, t), env, weights));
        }
    }
    return out;
}

} // namespace serial

} // namespace sglab
