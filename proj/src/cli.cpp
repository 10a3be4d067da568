// Copyright 2026 The Bunching Authors
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

#include "bunching/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bunching/analysis.hpp"
#include "bunching/circuit.hpp"
#include "bunching/ensemble.hpp"
#include "bunching/io.hpp"
#include "bunching/verify.hpp"

namespace bunching::cli {
namespace {

using io::format_shortest;

struct ParticleFlags {
    std::string input;
    std::string species;
    std::string model = "boson";
    std::optional<double> weight;
};

void add_particle_flags(CLI::App* cmd, ParticleFlags& flags, bool input_required) {
    auto* input = cmd->add_option("--input", flags.input, "1-based input modes, e.g. \"1,2,3\"");
    if (input_required) input->required();
    cmd->add_option("--species", flags.species, "species label per particle, e.g. \"a,a,b\" (mixed model)");
    cmd->add_option("--model", flags.model, "boson | classical | fermion | mixed")
        ->check(CLI::IsMember({"boson", "classical", "fermion", "mixed"}));
    cmd->add_option("--weight", flags.weight,
                    "mixed model: probability that all particles are indistinguishable");
}

InputSpec make_input(const ParticleFlags& flags, std::size_t modes) {
    const std::vector<std::size_t> input_modes = io::parse_mode_list(flags.input, modes);
    std::vector<Particle> particles;
    particles.reserve(input_modes.size());
    if (flags.species.empty()) {
        for (std::size_t mode : input_modes) particles.push_back(Particle{mode, "a"});
    } else {
        const std::vector<std::string> labels = io::parse_label_list(flags.species);
        if (labels.size() != input_modes.size()) {
            throw ValidationError("--species lists " + std::to_string(labels.size()) + " labels for " +
                                  std::to_string(input_modes.size()) + " particles");
        }
        for (std::size_t i = 0; i < input_modes.size(); ++i) particles.push_back(Particle{input_modes[i], labels[i]});
    }
    return InputSpec(modes, std::move(particles));
}

Statistics make_statistics(const ParticleFlags& flags) {
    Statistics stats{parse_model(flags.model), flags.weight};
    validate(stats);
    return stats;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        io::write_text_file(path, text);
    }
}

std::string optional_text(const std::optional<double>& x) { return x ? format_shortest(*x) : "undefined"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multi-particle interference and bunching in linear interferometers", "bunching"};
    app.require_subcommand(1);
    std::function<int()> action;

    // haar
    auto* haar = app.add_subcommand("haar", "sample a Haar-random unitary");
    std::size_t haar_modes = 0;
    std::uint64_t haar_seed = 0;
    std::string haar_out;
    haar->add_option("--modes", haar_modes, "number of modes")->required();
    haar->add_option("--seed", haar_seed, "64-bit seed")->required();
    haar->add_option("--out", haar_out, "unitary JSON path (stdout if omitted)");
    haar->callback([&] {
        action = [&] {
            emit(io::unitary_to_json(haar_sample(haar_modes, Seed{haar_seed})).dump(2) + "\n", haar_out, out);
            return kExitOk;
        };
    });

    // build
    auto* build = app.add_subcommand("build", "compile a preset or circuit file into a unitary");
    std::string preset;
    std::string circuit_path;
    std::size_t build_modes = 0;
    std::size_t build_layers = 0;
    double build_t = 0.5;
    std::optional<std::uint64_t> phase_seed;
    std::string build_out;
    auto* preset_opt = build->add_option("--preset", preset, "qft_tritter | balanced_coupler | brickwall | random_phase_network")
                           ->check(CLI::IsMember({"qft_tritter", "balanced_coupler", "brickwall", "random_phase_network"}));
    auto* circuit_opt = build->add_option("--circuit", circuit_path, "circuit JSON file");
    preset_opt->excludes(circuit_opt);
    build->add_option("--modes", build_modes, "modes (layered presets)");
    build->add_option("--layers", build_layers, "layers (layered presets)");
    build->add_option("--transmissivity", build_t, "coupler bar probability (brickwall)");
    build->add_option("--phase-seed", phase_seed, "seed for uniform random phases; zero phases if omitted");
    build->add_option("--out", build_out, "unitary JSON path (stdout if omitted)");
    build->callback([&] {
        if (preset.empty() && circuit_path.empty()) throw CLI::RequiredError("--preset or --circuit");
        action = [&] {
            std::optional<UnitaryMatrix> u;
            if (!circuit_path.empty()) {
                u = build_unitary(io::load_circuit(circuit_path));
            } else if (preset == "qft_tritter") {
                u = preset_unitary(QftTritterPreset{});
            } else if (preset == "balanced_coupler") {
                u = preset_unitary(BalancedCouplerPreset{});
            } else if (preset == "brickwall") {
                std::optional<Seed> seed;
                if (phase_seed) seed = Seed{*phase_seed};
                u = preset_unitary(BrickwallPreset{build_modes, build_layers, build_t, seed});
            } else {
                u = preset_unitary(RandomPhaseNetworkPreset{build_modes, build_layers, Seed{phase_seed.value_or(0)}});
            }
            emit(io::unitary_to_json(*u).dump(2) + "\n", build_out, out);
            return kExitOk;
        };
    });

    // distribution
    auto* distribution = app.add_subcommand("distribution", "exact output distribution over all occupation states");
    std::string dist_unitary;
    ParticleFlags dist_flags;
    std::string dist_out;
    distribution->add_option("--unitary", dist_unitary, "unitary JSON file")->required();
    add_particle_flags(distribution, dist_flags, true);
    distribution->add_option("--out", dist_out, "CSV path (stdout if omitted)");
    distribution->callback([&] {
        action = [&] {
            const UnitaryMatrix u = io::load_unitary(dist_unitary);
            const InputSpec input = make_input(dist_flags, u.dim());
            std::ostringstream csv;
            io::write_distribution_csv(csv, distribution_for(u, input, make_statistics(dist_flags)));
            emit(csv.str(), dist_out, out);
            return kExitOk;
        };
    });

    // bunching
    auto* bunching_cmd = app.add_subcommand("bunching", "bunching report for one interferometer and input");
    std::string bunch_unitary;
    ParticleFlags bunch_flags;
    std::string bunch_out;
    bunching_cmd->add_option("--unitary", bunch_unitary, "unitary JSON file")->required();
    add_particle_flags(bunching_cmd, bunch_flags, true);
    bunching_cmd->add_option("--out", bunch_out, "report JSON path");
    bunching_cmd->callback([&] {
        action = [&] {
            const UnitaryMatrix u = io::load_unitary(bunch_unitary);
            const InputSpec input = make_input(bunch_flags, u.dim());
            const BunchingReport report = bunching_report(u, input, make_statistics(bunch_flags));
            const double p_classical =
                bunching_probability(output_distribution(u, input.as_all_distinct(), StatisticsModel::classical));
            std::optional<double> r_fb;
            for (const auto& r : report.r_fb) {
                if (r) {
                    r_fb = r;
                    break;
                }
            }
            out << "p_bunch,p_bunch_classical,r_fb\n"
                << format_shortest(report.p_bunch) << ',' << format_shortest(p_classical) << ','
                << optional_text(r_fb) << '\n';
            if (!bunch_out.empty()) io::write_text_file(bunch_out, io::report_to_json(report).dump(2) + "\n");
            return kExitOk;
        };
    });

    // birthday
    auto* birthday = app.add_subcommand("birthday", "Haar-average bunching probability of n bosons in m modes");
    std::size_t bday_n = 0;
    std::size_t bday_m = 0;
    birthday->add_option("--n", bday_n, "bosons")->required();
    birthday->add_option("--m", bday_m, "modes")->required();
    birthday->callback([&] {
        action = [&] {
            out << format_shortest(birthday_formula(bday_n, bday_m)) << '\n';
            return kExitOk;
        };
    });

    // ensemble
    auto* ensemble = app.add_subcommand("ensemble", "bunching statistics over Haar-random interferometers");
    std::size_t ens_n = 0;
    std::size_t ens_m = 0;
    std::size_t ens_samples = 10000;
    std::uint64_t ens_seed = 0;
    std::size_t ens_threads = 0;
    ParticleFlags ens_flags;
    std::string ens_out;
    std::string ens_summary;
    ensemble->add_option("--n", ens_n, "particles")->required();
    ensemble->add_option("--m", ens_m, "modes")->required();
    add_particle_flags(ensemble, ens_flags, false);
    ensemble->add_option("--samples", ens_samples, "number of Haar samples");
    ensemble->add_option("--seed", ens_seed, "64-bit master seed")->required();
    ensemble->add_option("--threads", ens_threads, "worker threads (0 = all cores); does not change results");
    ensemble->add_option("--out", ens_out, "per-sample CSV path");
    ensemble->add_option("--summary", ens_summary, "summary JSON path");
    ensemble->callback([&] {
        action = [&] {
            if (ens_m == 0) throw DomainError("--m must be at least 1");
            ParticleFlags flags = ens_flags;
            if (flags.input.empty()) {
                for (std::size_t i = 1; i <= ens_n; ++i) flags.input += (i > 1 ? "," : "") + std::to_string(i);
            }
            const InputSpec input = make_input(flags, ens_m);
            if (input.particle_count() != ens_n) {
                throw ValidationError("--input lists " + std::to_string(input.particle_count()) +
                                      " particles but --n is " + std::to_string(ens_n));
            }
            const EnsembleReport report =
                haar_ensemble_scan(EnsembleRequest{input, ens_samples, Seed{ens_seed}, make_statistics(flags), ens_threads});
            if (!ens_out.empty()) {
                std::ostringstream csv;
                io::write_ensemble_csv(csv, report);
                io::write_text_file(ens_out, csv.str());
            }
            if (!ens_summary.empty()) io::write_text_file(ens_summary, io::ensemble_summary_json(report).dump(2) + "\n");
            out << "mean,std,band_low,band_high\n"
                << format_shortest(report.mean) << ',' << format_shortest(report.stddev) << ','
                << format_shortest(std::clamp(report.band_low, 0.0, 1.0)) << ','
                << format_shortest(std::clamp(report.band_high, 0.0, 1.0)) << '\n';
            return kExitOk;
        };
    });

    // predict-ratio
    auto* predict = app.add_subcommand("predict-ratio", "full-bunching ratio of a partial-distinguishability mixture");
    std::size_t pred_n = 0;
    double pred_w = 1.0;
    predict->add_option("--n", pred_n, "particles")->required();
    predict->add_option("--w", pred_w, "weight of the fully indistinguishable component")->required();
    predict->callback([&] {
        action = [&] {
            out << format_shortest(predicted_ratio_mixture(pred_n, pred_w)) << '\n';
            return kExitOk;
        };
    });

    // hom-invert
    auto* invert = app.add_subcommand("hom-invert", "bosonic bunching probability from a coincidence ratio");
    double inv_t = 0.0;
    double inv_pc = 0.0;
    invert->add_option("--t", inv_t, "coincidence ratio (1 - p_q) / (1 - p_c)")->required();
    invert->add_option("--pc", inv_pc, "classical bunching probability")->required();
    invert->callback([&] {
        action = [&] {
            out << format_shortest(hom_invert(inv_t, inv_pc)) << '\n';
            return kExitOk;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run the full-bunching law sweep and kernel oracle checks");
    std::uint64_t verify_seed = 20140101;
    verify->add_option("--seed", verify_seed, "master seed");
    verify->callback([&] {
        action = [&] {
            bool ok = true;
            for (const CheckResult& check : run_verification(Seed{verify_seed})) {
                out << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << '\n';
                ok = ok && check.passed;
            }
            return ok ? kExitOk : kExitVerifyFailed;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const Error& e) {
        // Validation raised from a subcommand callback.
        err << "error: " << e.what() << '\n';
        return kExitError;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace bunching::cli
