#include "fifwave/cli.hpp"

#include <cmath>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "fifwave/cwt.hpp"
#include "fifwave/errors.hpp"
#include "fifwave/io.hpp"
#include "fifwave/regularity.hpp"
#include "fifwave/spectrum.hpp"
#include "fifwave/verify.hpp"

namespace fif {

namespace {

std::vector<double> omega_grid(double start, double stop, int steps, const std::string& scale) {
    if (steps < 1) throw DomainError("spectrum: omega-steps >= 1 required");
    std::vector<double> out;
    if (steps == 1) return {start};
    for (int i = 0; i < steps; ++i) {
        double f = static_cast<double>(i) / static_cast<double>(steps - 1);
        if (scale == "log") {
            if (!(start > 0.0) || !(stop > 0.0))
                throw DomainError("spectrum: log spacing needs positive omega range");
            out.push_back(start * std::pow(stop / start, f));
        } else {
            out.push_back(start + (stop - start) * f);
        }
    }
    return out;
}

int run_parsed(const std::vector<std::string>& args) {
    CLI::App app{"fractal interpolation functions: sampling, spectra, wavelet analysis"};
    app.require_subcommand(1);

    std::string problem_path;
    std::string out_path = "out.csv";

    auto* sample = app.add_subcommand("sample", "exact FIF samples on the N-adic grid");
    int level = 10;
    sample->add_option("problem", problem_path, "problem JSON file")->required();
    sample->add_option("--level", level, "grid level J");
    sample->add_option("--out", out_path, "output CSV path");

    auto* spectrum = app.add_subcommand("spectrum", "Fourier transform over a frequency grid");
    double om_start = 0.5, om_stop = 200.0;
    int om_steps = 64, trunc = 40, grid_level = 14;
    std::string om_scale = "log", sp_method = "series";
    spectrum->add_option("problem", problem_path)->required();
    spectrum->add_option("--omega-start", om_start);
    spectrum->add_option("--omega-stop", om_stop);
    spectrum->add_option("--omega-steps", om_steps);
    spectrum->add_option("--omega-scale", om_scale)->check(CLI::IsMember({"log", "linear"}));
    spectrum->add_option("--trunc", trunc, "series truncation depth");
    spectrum->add_option("--grid-level", grid_level, "signal grid level for the quad method");
    spectrum->add_option("--method", sp_method)
        ->check(CLI::IsMember({"series", "brute", "linear", "quad"}));
    spectrum->add_option("--out", out_path);

    auto* cwt = app.add_subcommand("cwt", "scalogram over dyadic scales");
    int smin = 3, smax = 7, tsteps = 9, order = 4;
    std::string cwt_method = "direct", conj = "on";
    cwt->add_option("problem", problem_path)->required();
    cwt->add_option("--scale-min-exp", smin, "coarsest scale 2^-exp");
    cwt->add_option("--scale-max-exp", smax, "finest scale 2^-exp");
    cwt->add_option("--t-steps", tsteps);
    cwt->add_option("--wavelet-order", order);
    cwt->add_option("--grid-level", grid_level);
    cwt->add_option("--trunc", trunc);
    cwt->add_option("--method", cwt_method)->check(CLI::IsMember({"direct", "fourier", "both"}));
    cwt->add_option("--conjugate", conj)->check(CLI::IsMember({"on", "off"}));
    cwt->add_option("--out", out_path);

    auto* reg = app.add_subcommand("regularity", "decay constants and fitted exponents");
    double delta = 1.0;
    int reg_smin = 3, reg_smax = 10, reg_tsteps = 257;
    std::string report_path = "report.json";
    reg->add_option("problem", problem_path)->required();
    reg->add_option("--delta", delta);
    reg->add_option("--scale-min-exp", reg_smin);
    reg->add_option("--scale-max-exp", reg_smax);
    reg->add_option("--t-steps", reg_tsteps);
    reg->add_option("--wavelet-order", order);
    reg->add_option("--grid-level", grid_level);
    reg->add_option("--report", report_path);

    auto* verify = app.add_subcommand("verify-all", "run the full verification battery");
    verify->add_option("--report", report_path);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::cerr << (e.get_exit_code() == 0 ? "" : "error: ") << e.what() << "\n";
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    if (verify->parsed()) {
        auto results = run_acceptance();
        bool all = true;
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name
                      << ") " << r.details << " [" << r.seconds << "s]\n";
            all = all && r.pass;
        }
        atomic_write(report_path, acceptance_json(results));
        return all ? 0 : 1;
    }

    InterpolationProblem p = load_problem(problem_path);
    require_valid(p);

    if (sample->parsed()) {
        atomic_write(out_path, grid_csv(sample_grid(p, level)));
        return 0;
    }

    if (spectrum->parsed()) {
        auto omegas = omega_grid(om_start, om_stop, om_steps, om_scale);
        SpectrumEvaluator ev(p, trunc);
        std::vector<SpectrumRow> rows;
        FifGrid g;
        if (sp_method == "quad") g = sample_grid(p, grid_level);
        for (double w : omegas) {
            SpectrumRow row{w, {}, 0.0};
            if (sp_method == "series") {
                auto sv = ev.ft_series(w);
                row.value = sv.value;
                row.tail_bound = sv.tail_bound;
            } else if (sp_method == "brute") {
                row.value = ev.ft_series_bruteforce(w, std::min(trunc, 6));
            } else if (sp_method == "linear") {
                row.value = ev.ft_linear(w);
                row.tail_bound = ev.tail_bound(trunc);
            } else {
                row.value = ft_quadrature(g, w);
            }
            rows.push_back(row);
        }
        atomic_write(out_path, spectrum_csv(rows));
        return 0;
    }

    if (cwt->parsed()) {
        CauchyWavelet w{order};
        Conjugation cj = (conj == "on") ? Conjugation::on : Conjugation::off;
        auto scales = dyadic_scales(smin, smax);
        auto ts = uniform_translations(tsteps);
        FifGrid g;
        std::unique_ptr<SpectrumEvaluator> ev;
        if (cwt_method != "fourier") g = sample_grid(p, grid_level);
        if (cwt_method != "direct") ev = std::make_unique<SpectrumEvaluator>(p, trunc);
        if (cwt_method == "both") {
            auto d = scalogram(&g, nullptr, w, scales, ts, CwtMethod::direct, cj);
            auto f = scalogram(nullptr, ev.get(), w, scales, ts, CwtMethod::fourier, cj);
            atomic_write(out_path + ".direct.csv", scalogram_csv(d));
            atomic_write(out_path + ".fourier.csv", scalogram_csv(f));
        } else {
            auto sg = (cwt_method == "direct")
                          ? scalogram(&g, nullptr, w, scales, ts, CwtMethod::direct, cj)
                          : scalogram(nullptr, ev.get(), w, scales, ts, CwtMethod::fourier, cj);
            atomic_write(out_path, scalogram_csv(sg));
        }
        return 0;
    }

    // regularity
    CauchyWavelet w{order};
    RegularityReport rep = constants(p, delta);
    FifGrid g = sample_grid(p, grid_level);
    auto sg = scalogram(&g, nullptr, w, dyadic_scales(reg_smin, reg_smax),
                        uniform_translations(reg_tsteps), CwtMethod::direct);
    rep.per_scale_max = per_scale_max(sg);
    auto window = rep.per_scale_max;
    if (window.size() > 6) window.erase(window.begin(), window.end() - 6);
    FitResult fit = fit_decay_exponent(window);
    rep.fitted_exponent = fit.slope;
    rep.fit_residual = fit.residual;
    ReportProvenance prov{problem_hash(p), reg_smin, reg_smax, order};
    atomic_write(report_path, regularity_report_json(rep, prov));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    try {
        return run_parsed(args);
    } catch (const AccuracyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace fif
