#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "padicts/fbm.hpp"
#include "padicts/padic.hpp"
#include "padicts/series.hpp"
#include "padicts/vladimirov.hpp"
#include "padicts/wavelets.hpp"
#include "io.hpp"

namespace {

using namespace padicts;
using cli::csv_error;
using cli::io_error;
using nlohmann::json;

// exit codes: 0 ok, 2 bad parameters, 3 bad input, 4 computation, 5 I/O
struct usage_error {
    std::string message;
};

void require_prime(std::uint32_t p) {
    if (!is_prime(p)) throw usage_error{"p must be prime"};
}

json finite_or_string(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "infinity" : "-infinity";
}

struct DistanceArgs {
    std::uint32_t p = 2;
    std::string pairs;
    std::string output;
};

void run_distance(const DistanceArgs& args) {
    require_prime(args.p);
    std::string table = "m,n,norm\n";
    std::size_t start = 0;
    const std::string& s = args.pairs;
    while (start < s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        const std::string pair = s.substr(start, end - start);
        const std::size_t colon = pair.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == pair.size())
            throw usage_error{"--pairs must look like m:n,m:n,..."};
        char* tail = nullptr;
        const std::uint64_t m = std::strtoull(pair.c_str(), &tail, 10);
        if (tail != pair.c_str() + colon) throw usage_error{"bad pair '" + pair + "'"};
        const std::uint64_t n = std::strtoull(pair.c_str() + colon + 1, &tail, 10);
        if (tail != pair.c_str() + pair.size()) throw usage_error{"bad pair '" + pair + "'"};

        const NormValue d = index_distance(m, n, args.p);
        table += std::to_string(m) + "," + std::to_string(n) + "," +
                 (d.is_zero() ? std::string("zero") : std::to_string(d.exponent())) + "\n";
        start = end + 1;
    }
    if (args.output.empty()) {
        std::cout << table;
    } else {
        cli::write_file(args.output, table);
        json params;
        params["p"] = args.p;
        params["pairs"] = args.pairs;
        cli::write_manifest(args.output, cli::make_manifest("distance", params, std::nullopt));
    }
}

struct DerivativeArgs {
    std::string input;
    std::uint32_t p = 2;
    double alpha = 1.0;
    std::string mode = "finite";
    std::string pad = "truncate";
    std::string output;
};

std::vector<std::complex<double>> apply_pad_policy(std::vector<std::complex<double>> samples,
                                                   std::uint32_t p, const std::string& policy) {
    if (is_power_of(samples.size(), p)) return samples;
    if (policy == "truncate") {
        std::uint64_t n = 1;
        while (n * p <= samples.size()) n *= p;
        samples.resize(n);
        return samples;
    }
    std::uint64_t n = 1;
    while (n < samples.size()) n *= p;
    if (policy == "repeat-last") {
        samples.resize(n, samples.back());
        return samples;
    }
    // policy == "mean"
    std::complex<double> mean{0.0, 0.0};
    for (const auto& v : samples) mean += v;
    mean /= static_cast<double>(samples.size());
    samples.resize(n, mean);
    return samples;
}

void run_derivative(const DerivativeArgs& args) {
    require_prime(args.p);
    if (!(args.alpha > 0.0)) throw usage_error{"alpha must be positive"};

    const std::string bytes = cli::read_file(args.input);
    const std::string digest = cli::digest_string(bytes);
    const auto raw = cli::parse_series_csv(bytes);
    auto samples = apply_pad_policy(raw, args.p, args.pad);

    SampledSeries series;
    series.prime = args.p;
    series.samples = samples;
    OperatorConfig cfg;
    cfg.prime = args.p;
    cfg.alpha = args.alpha;
    cfg.mode = args.mode == "extended" ? OperatorMode::zero_extended
                                       : OperatorMode::finite_section;
    cfg.length = samples.size();
    const auto out = apply_direct(series, cfg);

    cli::write_file(args.output, cli::series_csv(out.samples));
    json params;
    params["p"] = args.p;
    params["alpha"] = args.alpha;
    params["mode"] = args.mode;
    params["pad"] = args.pad;
    params["input_length"] = raw.size();
    params["processed_length"] = samples.size();
    cli::write_manifest(args.output, cli::make_manifest("derivative", params, digest));
}

struct SimulateArgs {
    std::uint32_t p = 2;
    double alpha = 1.0;
    std::uint32_t J = 5;
    std::uint32_t level = 0;
    std::uint64_t realizations = 1;
    std::uint64_t seed = 0;
    bool real_part = false;
    std::string output;
};

SimulationConfig to_config(const SimulateArgs& args) {
    SimulationConfig cfg;
    cfg.prime = args.p;
    cfg.alpha = args.alpha;
    cfg.J = args.J;
    cfg.level = args.level;
    cfg.realizations = args.realizations;
    cfg.seed = args.seed;
    cfg.output = args.real_part ? OutputMode::real_part : OutputMode::complex_valued;
    return cfg;
}

json simulate_params(const SimulateArgs& args) {
    json params;
    params["p"] = args.p;
    params["alpha"] = args.alpha;
    params["J"] = args.J;
    params["level"] = args.level;
    params["realizations"] = args.realizations;
    params["seed"] = args.seed;
    params["output_mode"] = args.real_part ? "real-part" : "complex";
    return params;
}

void validate_simulation(const SimulateArgs& args) {
    require_prime(args.p);
    if (!(args.alpha > 0.0)) throw usage_error{"alpha must be positive"};
    if (args.J < args.level + 1) throw usage_error{"J must be at least level + 1"};
    if (args.realizations < 1) throw usage_error{"need at least one realization"};
}

void run_simulate(const SimulateArgs& args) {
    validate_simulation(args);
    const auto batch = simulate(to_config(args));
    std::vector<std::vector<std::complex<double>>> rows;
    rows.reserve(batch.series.size());
    for (const auto& s : batch.series) rows.push_back(s.samples);
    cli::write_file(args.output, cli::batch_csv(rows));
    cli::write_manifest(args.output,
                        cli::make_manifest("simulate", simulate_params(args), std::nullopt));
}

struct VerifyArgs {
    SimulateArgs sim;
    std::string variant = "paper";
    std::string output;
};

json score_json(const VariantScore& s) {
    json out;
    out["max_abs_z"] = finite_or_string(s.max_abs_z);
    out["total_squared_z"] = finite_or_string(s.total_squared_z);
    out["frac_within_2"] = s.frac_within_2;
    out["frac_within_5"] = s.frac_within_5;
    return out;
}

void run_verify(const VerifyArgs& args) {
    validate_simulation(args.sim);
    if (args.sim.realizations < 2) throw usage_error{"verification needs at least 2 realizations"};

    const auto batch = simulate(to_config(args.sim));
    const auto empirical = estimate(batch);
    CovarianceModel model;
    model.prime = args.sim.p;
    model.alpha = args.sim.alpha;
    model.level = args.sim.level;
    model.variant = args.variant == "alternative" ? CovarianceVariant::alternative
                                                  : CovarianceVariant::paper;
    const auto report = verify(model, empirical);

    json out;
    out["max_abs_z"] = finite_or_string(report.max_abs_z);
    out["frac_within_2"] = report.frac_within_2;
    out["frac_within_5"] = report.frac_within_5;
    out["model_variant"] = args.variant;
    if (report.paper_score && report.alternative_score) {
        out["variant_scores"]["paper"] = score_json(*report.paper_score);
        out["variant_scores"]["alternative"] = score_json(*report.alternative_score);
        out["winner"] = to_string(*report.winner);
    }
    json params = simulate_params(args.sim);
    params["variant"] = args.variant;
    out["manifest"] = cli::make_manifest("verify", params, std::nullopt);
    cli::write_file(args.output, out.dump(2) + "\n");
}

struct CovarianceArgs {
    std::uint32_t p = 2;
    double alpha = 1.0;
    std::uint32_t J = 5;
    std::uint32_t level = 0;
    std::string variant = "paper";
    std::string output;
};

void run_covariance(const CovarianceArgs& args) {
    require_prime(args.p);
    if (!(args.alpha > 0.0)) throw usage_error{"alpha must be positive"};
    if (args.J < args.level + 1) throw usage_error{"J must be at least level + 1"};

    CovarianceModel model;
    model.prime = args.p;
    model.alpha = args.alpha;
    model.level = args.level;
    model.variant = args.variant == "alternative" ? CovarianceVariant::alternative
                                                  : CovarianceVariant::paper;

    const auto mat = model_covariance_matrix(model, args.J);
    std::string matrix_table = "x,y,value\n";
    for (Eigen::Index x = 0; x < mat.rows(); ++x)
        for (Eigen::Index y = 0; y < mat.cols(); ++y)
            matrix_table += std::to_string(x) + "," + std::to_string(y) + "," +
                            cli::format_double(mat(x, y)) + "\n";
    cli::write_file(args.output + ".matrix.csv", matrix_table);

    // staircase table over real lags: the variogram is constant on runs of
    // lags sharing one ultrametric norm
    std::string vario_table = "lag,norm_exponent,variogram\n";
    const std::uint64_t n = power_of(args.p, args.J - args.level);
    for (std::uint64_t h = 1; h < n; ++h) {
        const int e = UltrametricIndex(args.p, h).norm().exponent() +
                      static_cast<int>(args.level);
        vario_table += std::to_string(h) + "," + std::to_string(e) + "," +
                       cli::format_double(variogram(NormValue::power(e), model)) + "\n";
    }
    cli::write_file(args.output + ".variogram.csv", vario_table);

    json params;
    params["p"] = args.p;
    params["alpha"] = args.alpha;
    params["J"] = args.J;
    params["level"] = args.level;
    params["variant"] = args.variant;
    cli::write_manifest(args.output, cli::make_manifest("covariance", params, std::nullopt));
}

struct TransformArgs {
    std::string input;
    std::uint32_t p = 2;
    std::uint32_t level = 0;
    bool inverse_mode = false;
    std::string pad = "truncate";
    std::string output;
};

void run_transform(const TransformArgs& args) {
    require_prime(args.p);
    const std::string bytes = cli::read_file(args.input);
    const std::string digest = cli::digest_string(bytes);

    json params;
    params["p"] = args.p;
    params["level"] = args.level;
    params["direction"] = args.inverse_mode ? "inverse" : "forward";
    if (!args.inverse_mode) params["pad"] = args.pad;

    if (!args.inverse_mode) {
        SampledSeries series;
        series.prime = args.p;
        series.level = args.level;
        series.samples = apply_pad_policy(cli::parse_series_csv(bytes), args.p, args.pad);
        const auto coeffs = forward(series);
        std::vector<cli::CoefficientRow> rows;
        rows.push_back({0, 0, 0, coeffs.mean()});
        coeffs.for_each([&](const WaveletIndex& w, std::complex<double> c) {
            rows.push_back({w.k, w.j, w.ball, c});
        });
        cli::write_file(args.output, cli::coefficients_csv(rows));
    } else {
        const auto rows = cli::parse_coefficients_csv(bytes);
        std::uint32_t J = args.level;
        bool have_mean = false;
        for (const auto& r : rows) {
            if (r.k == 0 && r.j == 0) {
                have_mean = true;
            } else {
                J = std::max(J, r.j);
            }
        }
        if (!have_mean) throw csv_error{1, "missing the mean row (k = 0, j = 0)"};
        WaveletCoefficients coeffs(args.p, J, args.level);
        std::size_t detail_rows = 0;
        for (const auto& r : rows) {
            if (r.k == 0 && r.j == 0) {
                coeffs.set_mean(r.value);
            } else {
                coeffs.set_detail({r.k, r.j, r.ball}, r.value);
                ++detail_rows;
            }
        }
        if (detail_rows != coeffs.detail_count())
            throw csv_error{1, "coefficient table is incomplete for the window"};
        cli::write_file(args.output, cli::series_csv(inverse(coeffs).samples));
    }
    cli::write_manifest(args.output, cli::make_manifest("transform", params, digest));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ultrametric (p-adic) analysis of time series: wavelet transforms, "
                 "fractional derivatives, covariance models and their Monte Carlo checks"};
    app.require_subcommand(1);

    DistanceArgs dist;
    auto* dist_cmd = app.add_subcommand("distance", "Ultrametric distances between indices");
    dist_cmd->add_option("--p", dist.p, "prime base")->required();
    dist_cmd->add_option("--pairs", dist.pairs, "comma-separated m:n pairs")->required();
    dist_cmd->add_option("--output", dist.output, "output CSV (stdout when omitted)");

    DerivativeArgs der;
    auto* der_cmd = app.add_subcommand("derivative", "Fractional derivative of a CSV series");
    der_cmd->add_option("--input", der.input)->required();
    der_cmd->add_option("--p", der.p)->required();
    der_cmd->add_option("--alpha", der.alpha)->required();
    der_cmd->add_option("--mode", der.mode)->check(CLI::IsMember({"finite", "extended"}));
    der_cmd->add_option("--pad", der.pad)
        ->check(CLI::IsMember({"truncate", "repeat-last", "mean"}));
    der_cmd->add_option("--output", der.output)->required();

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Sample fractional Brownian realizations");
    sim_cmd->add_option("--p", sim.p)->required();
    sim_cmd->add_option("--alpha", sim.alpha)->required();
    sim_cmd->add_option("--J", sim.J)->required();
    sim_cmd->add_option("--level", sim.level);
    sim_cmd->add_option("--realizations,--M", sim.realizations)->required();
    sim_cmd->add_option("--seed", sim.seed)->required();
    sim_cmd->add_flag("--real-part", sim.real_part, "emit Re F only (covariance halves)");
    sim_cmd->add_option("--output", sim.output)->required();

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Monte Carlo check of the covariance model");
    ver_cmd->add_option("--p", ver.sim.p)->required();
    ver_cmd->add_option("--alpha", ver.sim.alpha)->required();
    ver_cmd->add_option("--J", ver.sim.J)->required();
    ver_cmd->add_option("--level", ver.sim.level);
    ver_cmd->add_option("--realizations,--M", ver.sim.realizations)->required();
    ver_cmd->add_option("--seed", ver.sim.seed)->required();
    ver_cmd->add_option("--variant", ver.variant)
        ->check(CLI::IsMember({"paper", "alternative"}));
    ver_cmd->add_option("--output", ver.output)->required();

    CovarianceArgs cov;
    auto* cov_cmd = app.add_subcommand("covariance", "Model covariance matrix and variogram");
    cov_cmd->add_option("--p", cov.p)->required();
    cov_cmd->add_option("--alpha", cov.alpha)->required();
    cov_cmd->add_option("--J", cov.J)->required();
    cov_cmd->add_option("--level", cov.level);
    cov_cmd->add_option("--variant", cov.variant)
        ->check(CLI::IsMember({"paper", "alternative"}));
    cov_cmd->add_option("--output", cov.output, "output prefix")->required();

    TransformArgs tr;
    auto* tr_cmd = app.add_subcommand("transform", "Wavelet analysis/synthesis of a series");
    tr_cmd->add_option("--input", tr.input)->required();
    tr_cmd->add_option("--p", tr.p)->required();
    tr_cmd->add_option("--level", tr.level);
    tr_cmd->add_flag("--inverse", tr.inverse_mode, "coefficients in, series out");
    tr_cmd->add_option("--pad", tr.pad, "length policy for forward analysis")
        ->check(CLI::IsMember({"truncate", "repeat-last", "mean"}));
    tr_cmd->add_option("--output", tr.output)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*dist_cmd) run_distance(dist);
        if (*der_cmd) run_derivative(der);
        if (*sim_cmd) run_simulate(sim);
        if (*ver_cmd) run_verify(ver);
        if (*cov_cmd) run_covariance(cov);
        if (*tr_cmd) run_transform(tr);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.message << "\n";
        return 2;
    } catch (const csv_error& e) {
        std::cerr << "input error at line " << e.line << ": " << e.message << "\n";
        return 3;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.message << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
