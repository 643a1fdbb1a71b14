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

#include "sglab/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>

#include "sglab/decoherence.hpp"
#include "sglab/errors.hpp"
#include "sglab/experiment.hpp"
#include "sglab/pauli.hpp"
#include "sglab/rng.hpp"

namespace sglab {

namespace {

Json complex_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

double real_or_nan(const std::optional<double> &v) {
    return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

void run_local(const ExperimentConfig &cfg, Report &rep) {
    const auto basis = cfg.basis == "X" ? LocalBasis::X : LocalBasis::Z;
    LocalModeOptions opts;
    opts.order = cfg.order == "ancillas-first" ? LocalOrder::ancillas_first : LocalOrder::spin_first;
    opts.phase = cfg.phase;
    const auto res = run_local_mode(cfg.prep(), basis, cfg.shots, *cfg.seed, opts);
    for (std::size_t i = 0; i < res.shots.size(); ++i) {
        const auto &s = res.shots[i];
        rep.records.push_back(Json{{"shot", i},
                                   {"word", s.word()},
                                   {"s", s.outcomes[0]},
                                   {"A_up", s.outcomes[1]},
                                   {"A_dn", s.outcomes[2]},
                                   {"product", s.product}});
    }
    Json hist = Json::object();
    for (const auto &[w, n] : res.histogram) {
        hist[w] = n;
    }
    rep.summary["shots"] = res.shots.size();
    rep.summary["histogram"] = hist;
    rep.summary["mean_s"] = res.slot_means[0];
    rep.summary["mean_A_up"] = res.slot_means[1];
    rep.summary["mean_A_dn"] = res.slot_means[2];
    rep.summary["product_mean"] = res.product_mean;
    rep.summary["product_plus"] = res.product_plus;
}

void run_joint(const ExperimentConfig &cfg, Report &rep) {
    std::vector<JointObservable> obs;
    for (const auto &o : cfg.observables) {
        obs.push_back(parse_joint_observable(o));
    }
    const auto res = run_joint_mode(cfg.prep(), obs, *cfg.seed, cfg.phase);
    Json readouts = Json::array();
    for (std::size_t i = 0; i < res.steps.size(); ++i) {
        const auto &st = res.steps[i];
        rep.records.push_back(Json{{"step", i},
                                   {"observable", to_string(st.observable)},
                                   {"readout", st.readout},
                                   {"probability", st.probability},
                                   {"fidelity", st.fidelity}});
        readouts.push_back(st.readout);
    }
    rep.summary["readouts"] = readouts;
    rep.summary["final_fidelity"] = res.final_fidelity;
}

void run_condition(const ExperimentConfig &cfg, Report &rep) {
    const auto prep = cfg.prep();
    const Register anc = Register::qubits({slots::a_up, slots::a_dn});
    const double h = 1.0 / std::sqrt(2.0);
    for (int outcome : {+1, -1}) {
        Json rec{{"outcome", outcome}};
        Vector bell = Vector::Zero(4);
        bell(2) = h;
        bell(1) = outcome * h;
        const PureState target(anc, bell);
        try {
            const auto c = condition_on_spin_x(prep, outcome);
            const auto &a = c.ancillas.amplitudes();
            rec["probability"] = c.probability;
            rec["amp_10_re"] = a(2).real();
            rec["amp_10_im"] = a(2).imag();
            rec["amp_01_re"] = a(1).real();
            rec["amp_01_im"] = a(1).imag();
            rec["bell_fidelity"] = fidelity(target, c.ancillas);
            rec["zz"] = expectation(c.ancillas, gates::kron(gates::z(), gates::z()),
                                    {slots::a_up, slots::a_dn})
                            .real();
        } catch (const InvalidArgument &) {
            // Outcome impossible for this prep: report it with zero probability.
            const double nan = std::numeric_limits<double>::quiet_NaN();
            rec["probability"] = 0.0;
            for (const char *k : {"amp_10_re", "amp_10_im", "amp_01_re", "amp_01_im", "bell_fidelity", "zz"}) {
                rec[k] = nan;
            }
        }
        rep.records.push_back(rec);
    }
}

void run_ordinary(const ExperimentConfig &cfg, Report &rep) {
    const auto pm = ordinary_premeasurement(cfg.prep());
    const auto &a = pm.stage.state.amplitudes();
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.size()); ++i) {
        if (std::abs(a(static_cast<Eigen::Index>(i))) == 0.0) {
            continue;
        }
        std::string word;
        for (int b = 2; b >= 0; --b) {
            word += ((i >> b) & 1U) ? '1' : '0';
        }
        rep.records.push_back(Json{{"word", word},
                                   {"amp_re", a(static_cast<Eigen::Index>(i)).real()},
                                   {"amp_im", a(static_cast<Eigen::Index>(i)).imag()}});
    }
    rep.summary["register"] = "s,P_up,P_dn";
    rep.summary["zp_up_zp_dn"] = pm.zp_up_zp_dn;
    rep.summary["zs_zp_up"] = pm.zs_zp_up;
    rep.summary["zs_zp_dn"] = pm.zs_zp_dn;
}

void run_blindness(const ExperimentConfig &cfg, Report &rep, DetectorMode mode) {
    const auto prep = cfg.prep();
    const auto env = parse_env_model(cfg.env_model);
    const auto weights = parse_weights_model(cfg.weights);
    double max_dev = 0.0;
    double max_demon_err = 0.0;
    double max_readout_err = 0.0;
    for (std::size_t d : cfg.d) {
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto ms = model_seed(*cfg.seed, d, t);
            const auto pair = make_detector_pair(d, env, weights, mode, ms);
            const auto r = mode == DetectorMode::absorbing ? absorbing_variant(prep, pair.up, pair.down)
                                                           : blindness_contrast(prep, pair.up, pair.down);
            max_dev = std::max(max_dev, r.oracle_deviation);
            max_demon_err = std::max(max_demon_err, std::abs(r.demon_x - 2.0 * (prep.alpha * std::conj(prep.beta)).real()));
            max_readout_err = std::max(max_readout_err, std::abs(r.readout_x - r.readout_x_analytic));
            rep.records.push_back(Json{{"d", d},
                                       {"trial", t},
                                       {"seed", ms},
                                       {"f_up_re", r.f_up.real()},
                                       {"f_up_im", r.f_up.imag()},
                                       {"f_dn_re", r.f_dn.real()},
                                       {"f_dn_im", r.f_dn.imag()},
                                       {"demon_x", r.demon_x},
                                       {"readout_x", r.readout_x},
                                       {"readout_x_analytic", r.readout_x_analytic},
                                       {"zs_zup", real_or_nan(r.zs_zup)},
                                       {"zs_zdn", real_or_nan(r.zs_zdn)},
                                       {"zup_zdn", r.zup_zdn},
                                       {"oracle_deviation", r.oracle_deviation}});
        }
    }
    rep.summary["mode"] = to_string(mode);
    rep.summary["models"] = rep.records.size();
    rep.summary["max_oracle_deviation"] = max_dev;
    rep.summary["max_demon_error"] = max_demon_err;
    rep.summary["max_readout_error"] = max_readout_err;
}

void run_sweep(const ExperimentConfig &cfg, Report &rep) {
    const auto pts = suppression_sweep(cfg.prep(), cfg.d, cfg.trials, parse_env_model(cfg.env_model),
                                       parse_weights_model(cfg.weights), *cfg.seed);
    std::map<std::size_t, std::vector<double>> by_d;
    for (const auto &p : pts) {
        rep.records.push_back(Json{{"d", p.d},
                                   {"trial", p.trial},
                                   {"seed", p.seed},
                                   {"f_abs2", p.f_abs2},
                                   {"offdiag_abs", p.offdiag_abs},
                                   {"zs_zup", p.zs_zup},
                                   {"zs_zdn", p.zs_zdn},
                                   {"zup_zdn", p.zup_zdn}});
        by_d[p.d].push_back(p.f_abs2);
    }
    Json per_d = Json::array();
    for (std::size_t d : cfg.d) {
        const auto &v = by_d[d];
        const double n = static_cast<double>(v.size());
        double mean = 0.0;
        for (double x : v) {
            mean += x;
        }
        mean /= n;
        double var = 0.0;
        for (double x : v) {
            var += (x - mean) * (x - mean);
        }
        var = v.size() > 1 ? var / (n - 1.0) : 0.0;
        std::vector<double> mags;
        for (double x : v) {
            mags.push_back(std::sqrt(x));
        }
        std::sort(mags.begin(), mags.end());
        const double median = mags.size() % 2 ? mags[mags.size() / 2]
                                              : 0.5 * (mags[mags.size() / 2 - 1] + mags[mags.size() / 2]);
        per_d.push_back(Json{{"d", d},
                             {"trials", v.size()},
                             {"mean_f_abs2", mean},
                             {"stderr_f_abs2", std::sqrt(var / n)},
                             {"uniform_haar_reference", 1.0 / (static_cast<double>(d) * static_cast<double>(d))},
                             {"median_f_abs", median}});
    }
    rep.summary["per_d"] = per_d;
}

} // namespace

Report run_pipeline(const ExperimentConfig &cfg) {
    cfg.validate();
    if (!cfg.seed) {
        throw InvalidArgument("run_pipeline needs a resolved seed");
    }
    Report rep;
    rep.config = to_json(cfg);
    rep.summary["pipeline"] = to_string(cfg.pipeline);
    rep.summary["seed"] = *cfg.seed;
    rep.summary["prep"] = Json{{"alpha", complex_json(cfg.prep().alpha)}, {"beta", complex_json(cfg.prep().beta)}};
    switch (cfg.pipeline) {
    case Pipeline::local:
        run_local(cfg, rep);
        break;
    case Pipeline::joint:
        run_joint(cfg, rep);
        break;
    case Pipeline::condition:
        run_condition(cfg, rep);
        break;
    case Pipeline::ordinary:
        run_ordinary(cfg, rep);
        break;
    case Pipeline::blindness:
        run_blindness(cfg, rep, DetectorMode::transmitting);
        break;
    case Pipeline::absorbing:
        run_blindness(cfg, rep, DetectorMode::absorbing);
        break;
    case Pipeline::sweep:
        run_sweep(cfg, rep);
        break;
    }
    return rep;
}

ExperimentConfig resolve_seed(ExperimentConfig cfg) {
    if (cfg.seed) {
        return cfg;
    }
    const char *ci = std::getenv("CI");
    if (ci != nullptr && *ci != '\0') {
        throw InvalidArgument("a --seed is required when CI is set");
    }
    cfg.seed = entropy_seed();
    return cfg;
}

std::optional<std::filesystem::path> output_path(const ExperimentConfig &cfg) {
    if (!cfg.out.empty()) {
        return std::filesystem::path(cfg.out);
    }
    const char *dir = std::getenv(kOutDirEnv);
    if (dir != nullptr && *dir != '\0') {
        const std::string ext = parse_report_format(cfg.format) == ReportFormat::csv ? ".csv" : ".jsonl";
        return std::filesystem::path(dir) / (to_string(cfg.pipeline) + ext);
    }
    return std::nullopt;
}

int run(const ExperimentConfig &input, std::ostream &out, std::ostream &err) {
    try {
        input.validate();
        const auto cfg = resolve_seed(input);
        const auto rep = run_pipeline(cfg);
        const auto format = parse_report_format(cfg.format);
        if (const auto path = output_path(cfg)) {
            emit_report(rep, format, *path);
        } else {
            write_report(out, rep, format);
            out.flush();
            if (!out) {
                throw IoError("failed writing report to stdout");
            }
        }
        return kExitOk;
    } catch (const DimensionCapError &e) {
        err << "sglab: dimension cap exceeded: " << e.what() << '\n';
        return kExitCap;
    } catch (const IoError &e) {
        err << "sglab: I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const InvalidArgument &e) {
        err << "sglab: invalid configuration: " << e.what() << '\n';
        return kExitInvalid;
    }
}

} // namespace sglab
