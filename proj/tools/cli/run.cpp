#include "run.hpp"

#include "qgspec/qgspec.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

namespace qgspec::cli {

namespace {

struct Options {
    RunConfig cfg;
    std::optional<double> d; // defaults depend on kind
    std::vector<double> ratios{0.1, 0.2, 0.3, 0.4, std::numbers::phi - 1.0, 0.7, 0.8, 0.9};
    int n = 4;
    std::optional<double> k;
    bool limit = false;
    int asym_n = 50;
    double k_min = 0.1;
    int samples = 50;
    int theta_grid = 4;
    std::string side = "positive";
    std::string method = "scan";
};

LatticeSpec make_spec(const Options& o) {
    const LatticeKind kind = parse_lattice_kind(o.cfg.kind);
    switch (kind) {
    case LatticeKind::equilateral_kagome:
        if (o.d && *o.d != 2.0 * o.cfg.c) throw InvalidArgument("equilateral lattices need d = 2c");
        return LatticeSpec::equilateral(o.cfg.c, o.cfg.ell);
    case LatticeKind::triangular: return LatticeSpec::triangular(o.d.value_or(o.cfg.d), o.cfg.ell);
    case LatticeKind::kagome: break;
    }
    return LatticeSpec::kagome(o.cfg.c, o.d.value_or(o.cfg.d), o.cfg.ell);
}

void add_spec_options(CLI::App* app, Options& o) {
    app->add_option("--kind", o.cfg.kind, "kagome, equilateral or triangular")->capture_default_str();
    app->add_option("--c", o.cfg.c, "edge length c")->capture_default_str();
    app->add_option("--d", o.d, "cell period d (default 3; 2c for equilateral)");
    app->add_option("--ell", o.cfg.ell, "coupling length scale")->capture_default_str();
}

void add_output_options(CLI::App* app, Options& o) {
    app->add_option("--out", o.cfg.out, "output file (default stdout)");
    app->add_option("--format", o.cfg.format, "csv or json")
        ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"csv", OutputFormat::csv},
                                                                                {"json", OutputFormat::json}}));
    app->add_option("--seed", o.cfg.seed, "reserved");
    app->add_option("--threads", o.cfg.threads, "worker threads (default QG_THREADS or all cores)");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open '" + cfg.out + "' for writing");
    f << text;
    f.close();
    if (!f) throw InvalidArgument("failed writing '" + cfg.out + "'");
}

std::string pick(const RunConfig& cfg, std::string csv, std::string json) {
    return cfg.format == OutputFormat::csv ? std::move(csv) : std::move(json);
}

void warn(const BandStructure& bs, std::ostream& err) {
    for (const auto& w : bs.warnings) err << "warning: " << w << '\n';
}

std::string cmd_bands(const Options& o, std::ostream& err) {
    const LatticeSpec spec = make_spec(o);
    const BandStructure bs = scan_bands(spec, Side::positive, o.cfg.k_max, o.cfg.resolution);
    warn(bs, err);
    return pick(o.cfg, bands_csv({bs}), bands_json({bs}));
}

std::string cmd_negative(const Options& o, std::ostream& err) {
    const LatticeSpec spec = make_spec(o);
    const BandStructure bs = scan_negative_bands(spec, o.cfg.kappa_max, o.cfg.resolution);
    warn(bs, err);
    return pick(o.cfg, bands_csv({bs}), bands_json({bs}));
}

std::string cmd_flatbands(const Options& o) {
    const auto fb = flat_bands(make_spec(o), o.cfg.k_max);
    return pick(o.cfg, flat_bands_csv(fb), flat_bands_json(fb));
}

std::string cmd_probability(const Options& o) {
    const LatticeSpec spec = make_spec(o);
    ProbabilityEstimate e;
    if (o.method == "scan") e = finite_scan_probability(spec, o.cfg.K_energy, o.cfg.resolution);
    else if (o.method == "closed-form") e = closed_form_probability(spec);
    else if (o.method == "torus") e = torus_probability(spec, o.cfg.grid_n);
    else throw InvalidArgument("unknown method '" + o.method + "'");
    return pick(o.cfg, probability_csv({e}), probability_json({e}));
}

std::string cmd_torus(const Options& o) {
    const ProbabilityEstimate e = torus_probability(make_spec(o), o.cfg.grid_n);
    return pick(o.cfg, probability_csv({e}), probability_json({e}));
}

std::string cmd_sweep(const Options& o) {
    LatticeSpec base = make_spec(o);
    if (base.kind == LatticeKind::triangular) throw InvalidArgument("sweep varies c/d of kagome lattices");
    const auto pts = probability_sweep(o.ratios, base, o.cfg.K_energy, o.cfg.resolution);
    return pick(o.cfg, sweep_csv(pts), sweep_json(pts));
}

std::string cmd_scattering(const Options& o) {
    if (o.limit) {
        const RealMatrix m = high_energy_limit(o.n);
        return pick(o.cfg, matrix_csv(m), matrix_json(m));
    }
    const ScatteringMatrix s = scattering_matrix(o.n, o.cfg.ell, o.k.value_or(1.0 / o.cfg.ell));
    return pick(o.cfg, matrix_csv(s.entries), matrix_json(s.entries));
}

std::string cmd_asymptotics(const Options& o) {
    const auto rows = asymptotic_report(make_spec(o), o.asym_n);
    return pick(o.cfg, asymptotics_csv(rows), asymptotics_json(rows));
}

std::string cmd_oracle(const Options& o) {
    const LatticeSpec spec = make_spec(o);
    const Side side = parse_side(o.side);
    if (!(o.k_min > 0.0) || !(o.cfg.k_max >= o.k_min)) throw InvalidArgument("need 0 < k-min <= k-max");
    if (o.samples < 1 || o.theta_grid < 1) throw InvalidArgument("samples and theta-grid must be positive");
    std::vector<OracleRow> rows;
    for (int i = 0; i < o.samples; ++i) {
        const double x = o.samples == 1 ? o.k_min : o.k_min + (o.cfg.k_max - o.k_min) * i / (o.samples - 1);
        const std::complex<double> z = side == Side::positive ? std::complex<double>(x, 0.0) : std::complex<double>(0.0, x);
        for (int a = 0; a < o.theta_grid; ++a)
            for (int b = 0; b < o.theta_grid; ++b) {
                const Quasimomentum th{-pi + 2.0 * pi * a / o.theta_grid, -pi + 2.0 * pi * b / o.theta_grid};
                const NormalizedDet nd = normalized_secular_det(z, th, spec);
                rows.push_back({x, th.theta1, th.theta2, nd.det.real(), nd.det.imag(), nd.normalized});
            }
    }
    return pick(o.cfg, oracle_csv(rows), oracle_json(rows));
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Spectra of kagome and triangular quantum-graph lattices with circulant vertex coupling", "qgspec"};
    app.require_subcommand(1);

    auto* bands = app.add_subcommand("bands", "positive band structure");
    add_spec_options(bands, o);
    bands->add_option("--k-max", o.cfg.k_max, "scan range in k")->capture_default_str();
    bands->add_option("--resolution", o.cfg.resolution, "momentum step (default 2pi/(1000 d))");
    add_output_options(bands, o);

    auto* negative = app.add_subcommand("negative", "negative band structure");
    add_spec_options(negative, o);
    negative->add_option("--kappa-max", o.cfg.kappa_max, "scan range in kappa (default 10/ell)");
    negative->add_option("--resolution", o.cfg.resolution, "kappa step");
    add_output_options(negative, o);

    auto* flat = app.add_subcommand("flatbands", "flat bands and degenerate points");
    add_spec_options(flat, o);
    flat->add_option("--k-max", o.cfg.k_max, "largest k listed")->capture_default_str();
    add_output_options(flat, o);

    auto* prob = app.add_subcommand("probability", "probability of being in the spectrum");
    add_spec_options(prob, o);
    prob->add_option("--K", o.cfg.K_energy, "energy cutoff")->capture_default_str();
    prob->add_option("--resolution", o.cfg.resolution, "momentum step");
    prob->add_option("--method", o.method, "scan, closed-form or torus")->capture_default_str();
    prob->add_option("--grid", o.cfg.grid_n, "torus grid points per axis")->capture_default_str();
    add_output_options(prob, o);

    auto* torus = app.add_subcommand("torus-prob", "high-energy probability from the torus area");
    add_spec_options(torus, o);
    torus->add_option("--grid", o.cfg.grid_n, "grid points per axis")->capture_default_str();
    add_output_options(torus, o);

    auto* sweep = app.add_subcommand("sweep", "probability against c/d at fixed d");
    add_spec_options(sweep, o);
    sweep->add_option("--ratios", o.ratios, "comma-separated c/d values")->delimiter(',');
    sweep->add_option("--K", o.cfg.K_energy, "energy cutoff")->capture_default_str();
    sweep->add_option("--resolution", o.cfg.resolution, "momentum step");
    add_output_options(sweep, o);

    auto* scat = app.add_subcommand("scattering", "vertex scattering matrix");
    scat->add_option("--n", o.n, "vertex degree")->capture_default_str();
    scat->add_option("--ell", o.cfg.ell, "coupling length scale")->capture_default_str();
    scat->add_option("--k", o.k, "momentum (default 1/ell)");
    scat->add_flag("--limit", o.limit, "high-energy limit instead of S(k)");
    add_output_options(scat, o);

    auto* asym = app.add_subcommand("asymptotics", "asymptotic predictions against scans");
    add_spec_options(asym, o);
    asym->add_option("--n", o.asym_n, "index of the narrow-band pair")->capture_default_str();
    add_output_options(asym, o);

    auto* oracle = app.add_subcommand("oracle-check", "secular determinant on a momentum and theta grid");
    add_spec_options(oracle, o);
    oracle->add_option("--k-min", o.k_min, "first momentum")->capture_default_str();
    oracle->add_option("--k-max", o.cfg.k_max, "last momentum")->capture_default_str();
    oracle->add_option("--samples", o.samples, "momentum samples")->capture_default_str();
    oracle->add_option("--theta-grid", o.theta_grid, "theta points per axis")->capture_default_str();
    oracle->add_option("--side", o.side, "positive or negative")->capture_default_str();
    add_output_options(oracle, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (o.cfg.threads > 0) set_thread_count(o.cfg.threads);
        std::string text;
        if (*bands) text = cmd_bands(o, err);
        else if (*negative) text = cmd_negative(o, err);
        else if (*flat) text = cmd_flatbands(o);
        else if (*prob) text = cmd_probability(o);
        else if (*torus) text = cmd_torus(o);
        else if (*sweep) text = cmd_sweep(o);
        else if (*scat) text = cmd_scattering(o);
        else if (*asym) text = cmd_asymptotics(o);
        else text = cmd_oracle(o);
        emit(o.cfg, text, out);
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"qgspec"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qgspec::cli
