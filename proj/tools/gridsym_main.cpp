// gridsym: digitize 2-D point data onto a Betti-marked grid and test it for
// grid symmetry under commutation / cyclic-shift / kink moves, with an
// Ising-style configuration model for calibration.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridsym/errors.hpp"
#include "gridsym/serialize.hpp"
#include "gridsym/symmetry.hpp"

using namespace gridsym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitBadParams = 2;

std::vector<double> parse_doubles(const std::string& text, std::size_t expected,
                                  const std::string& what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ParameterError(what + ": bad number '" + item + "'");
        }
    if (values.size() != expected)
        throw ParameterError(what + ": expected " + std::to_string(expected) + " comma-separated values");
    return values;
}

// "x1,y1;x2,y2;..."
std::vector<Point> parse_centers(const std::string& text) {
    std::vector<Point> centers;
    std::stringstream ss(text);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        const auto xy = parse_doubles(pair, 2, "ring center");
        centers.push_back({xy[0], xy[1]});
    }
    return centers;
}

LatticeShape parse_shape(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
    } catch (const std::exception&) {
        throw ParameterError("lattice size must be N or RxC, got '" + text + "'");
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        write_text_file(path, content);
}

// Progress/summary text goes to stderr whenever the data itself is bound for
// stdout, so piped output stays clean.
std::ostream& summary_stream(const std::string& output_path) {
    return output_path.empty() ? std::cerr : std::cout;
}

struct GenerateOptions {
    std::string kind = "gaussian";
    std::size_t count = 1000;
    std::string mean = "0,0";
    std::string cov = "1,0,0,1";
    std::string shape = "1,1";
    std::string scale = "1,1";
    std::string centers = "0,0";
    double radius = 1.0;
    double noise_sigma = 0.0;
    std::string spec_json;
    std::string mirror;
    std::uint64_t seed = 0;
    std::string output;
};

int run_generate(const GenerateOptions& opt) {
    GeneratorSpec spec;
    if (!opt.spec_json.empty()) {
        spec = generator_spec_from_json(read_json_file(opt.spec_json));
    } else {
        if (opt.kind == "gaussian") {
            const auto mean = parse_doubles(opt.mean, 2, "--mean");
            const auto cov = parse_doubles(opt.cov, 4, "--cov");
            spec.kind = GaussianSpec{{mean[0], mean[1]}, {cov[0], cov[1], cov[2], cov[3]}};
        } else if (opt.kind == "gamma") {
            const auto shape = parse_doubles(opt.shape, 2, "--shape");
            const auto scale = parse_doubles(opt.scale, 2, "--scale");
            spec.kind = GammaSpec{shape[0], scale[0], shape[1], scale[1]};
        } else if (opt.kind == "ring-scene") {
            spec.kind = RingSceneSpec{parse_centers(opt.centers), opt.radius};
        } else {
            throw ParameterError("unknown --kind '" + opt.kind + "' (use --spec-json for mixtures)");
        }
        spec.count = opt.count;
        spec.noise_sigma = opt.noise_sigma;
        spec.seed = opt.seed;
    }

    PointCloud cloud;
    if (opt.mirror.empty()) {
        cloud = generate(spec);
    } else if (opt.mirror == "vertical" || opt.mirror == "horizontal") {
        cloud = mirror_scene(spec, opt.mirror == "vertical" ? MirrorAxis::vertical
                                                            : MirrorAxis::horizontal);
    } else {
        throw ParameterError("--mirror must be 'vertical' or 'horizontal'");
    }

    std::ostringstream csv;
    write_points_csv(csv, cloud);
    write_output(opt.output, csv.str());

    auto& log = summary_stream(opt.output);
    log << "generated " << cloud.points.size() << " points";
    if (!cloud.points.empty()) {
        double min_x = cloud.points[0].x, max_x = min_x;
        double min_y = cloud.points[0].y, max_y = min_y;
        for (const auto& p : cloud.points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
        log << "; bbox [" << min_x << ", " << max_x << "] x [" << min_y << ", " << max_y << "]";
    }
    log << "\n";
    return kExitOk;
}

struct DigitizeOptions {
    std::string input;
    int n = 8;
    std::optional<double> l;
    std::string origin;
    int r = 16;
    int k = 1;
    std::string output;
};

int run_digitize(const DigitizeOptions& opt) {
    std::ifstream in(opt.input);
    if (!in) throw IoError("cannot open '" + opt.input + "'");
    const PointCloud cloud = read_points_csv(in);

    GridSpec spec;
    if (opt.l.has_value()) {
        const auto origin = parse_doubles(opt.origin.empty() ? "0,0" : opt.origin, 2, "--origin");
        spec = GridSpec{opt.n, *opt.l, origin[0], origin[1]};
    } else {
        if (!opt.origin.empty())
            throw ParameterError("--origin requires --l; omit both for auto-fit");
        spec = GridSpec::auto_fit(cloud, opt.n);
    }

    const MarkedGrid grid = generate_grid_diagram(cloud, spec, opt.r, opt.k);
    write_output(opt.output, to_json(grid).dump(2) + "\n");

    auto& log = summary_stream(opt.output);
    log << "digitized " << cloud.points.size() - grid.dropped_points << " points onto " << spec.n
        << "x" << spec.n << " grid (l=" << spec.l << ", origin=(" << spec.x0 << "," << spec.y0
        << ")); marked " << grid.config.occupied_count() << " cells; dropped "
        << grid.dropped_points << " points\n";
    return kExitOk;
}

struct AnalyzeOptions {
    std::string grid_path;
    std::string seq;
    std::string seq_json;
    int block_size = 0;  // 0: whole grid
    std::string offset;
    std::string eta = "auto";
    int trials = 0;  // > 0 switches to probability estimation
    int max_exponent = 4;
    std::uint64_t seed = 0;
    std::string trace_csv;
    std::string format = "json";
    std::string output;
};

MoveSequence load_sequence(const AnalyzeOptions& opt) {
    if (!opt.seq_json.empty()) return move_sequence_from_json(read_json_file(opt.seq_json));
    if (!opt.seq.empty()) return MoveSequence::parse(opt.seq);
    throw ParameterError("provide --seq or --seq-json (or --trials for probability estimation)");
}

int resolve_eta(const std::string& text, int m, double occupancy) {
    if (text == "auto") return eta_default(m, occupancy);
    try {
        return std::stoi(text);
    } catch (const std::exception&) {
        throw ParameterError("--eta must be an integer or 'auto'");
    }
}

std::string trace_table(const SymmetryReport& report) {
    std::ostringstream csv;
    csv << "step,move,H\n";
    for (std::size_t i = 0; i < report.trace.size(); ++i)
        csv << i + 1 << "," << report.sequence.moves()[i].token() << "," << report.trace[i] << "\n";
    return csv.str();
}

int run_analyze(const AnalyzeOptions& opt) {
    const MarkedGrid grid = marked_grid_from_json(read_json_file(opt.grid_path));
    const int n = grid.spec.n;
    const int m = opt.block_size > 0 ? opt.block_size : n;

    if (opt.trials > 0) {
        const int eta = resolve_eta(opt.eta, m, grid.config.occupancy());
        const int max_exp = opt.max_exponent;
        const auto sampler = [max_exp](Rng& rng) { return sample_canonical_sequence(rng, max_exp); };
        const ProbEstimate est = estimate_prob_symmetric(grid, m, sampler, eta, opt.trials, opt.seed);
        nlohmann::json out{{"probability", est.probability},
                           {"std_error", est.std_error},
                           {"trials", est.trials},
                           {"eta", eta},
                           {"m", m}};
        write_output(opt.output, out.dump(2) + "\n");
        summary_stream(opt.output) << "Pr[H <= " << eta << "] = " << est.probability << " +/- "
                                   << est.std_error << " (" << est.trials << " trials)\n";
        return kExitOk;
    }

    const MoveSequence seq = load_sequence(opt);
    GridBlock block;
    if (!opt.offset.empty()) {
        const auto rc = parse_doubles(opt.offset, 2, "--offset");
        block = block_at(grid, static_cast<int>(rc[0]), static_cast<int>(rc[1]), m);
    } else if (m == n) {
        block = block_at(grid, 1, 1, m);
    } else {
        Rng rng = make_stream(opt.seed);
        block = sample_block(grid, m, rng);
    }

    const int eta = resolve_eta(opt.eta, m, block.config.occupancy());
    const SymmetryReport report = symmetry_test(block, seq, eta);

    if (!opt.trace_csv.empty()) write_text_file(opt.trace_csv, trace_table(report));
    if (opt.format == "csv")
        write_output(opt.output, trace_table(report));
    else
        write_output(opt.output, to_json(report).dump(2) + "\n");

    summary_stream(opt.output) << "verdict: " << (report.symmetric ? "symmetric" : "not-symmetric")
                               << " (H=" << report.final_hamming << ", eta=" << report.eta << ")\n";
    return kExitOk;
}

struct IsingOptions {
    std::string shape = "3";
    double coupling = 1.0;
    double field = 0.0;
    double tau = 1.0;
    std::string boundary = "open";
    std::string params_json;
    std::string seq = "T2";
    std::string mode = "exact";
    int sweeps = 10000;
    int burn_in = 1000;
    std::uint64_t seed = 0;
    std::string output;
};

IsingParams resolve_params(const IsingOptions& opt, const CLI::App* cmd) {
    IsingParams params;
    if (!opt.params_json.empty()) params = ising_params_from_json(read_json_file(opt.params_json));
    const bool have_file = !opt.params_json.empty();
    if (!have_file || cmd->count("--n") > 0) params.shape = parse_shape(opt.shape);
    if (!have_file || cmd->count("--J") > 0) {
        params.coupling = opt.coupling;
        if (cmd->count("--J") > 0) params.edge_couplings.reset();
    }
    if (!have_file || cmd->count("--Gamma") > 0) params.field = opt.field;
    if (!have_file || cmd->count("--tau") > 0) params.tau = opt.tau;
    if (!have_file || cmd->count("--boundary") > 0) {
        if (opt.boundary != "open" && opt.boundary != "periodic")
            throw ParameterError("--boundary must be 'open' or 'periodic'");
        params.periodic = opt.boundary == "periodic";
    }
    params.validate();
    return params;
}

int run_ising_exact(const IsingOptions& opt, const CLI::App* cmd) {
    const IsingParams params = resolve_params(opt, cmd);
    const double z = exact_partition(params);
    nlohmann::json out{{"Z", z}, {"cells", params.shape.cells()}};
    if (!opt.output.empty()) write_text_file(opt.output, out.dump(2) + "\n");
    std::cout.precision(12);
    std::cout << "Z = " << z << "\n";
    return kExitOk;
}

int run_ising_sample(const IsingOptions& opt, const CLI::App* cmd) {
    const IsingParams params = resolve_params(opt, cmd);
    MetropolisSampler sampler(params, opt.seed);
    for (int i = 0; i < opt.burn_in; ++i) sampler.sweep();

    std::ostringstream lines;
    for (int i = 0; i < opt.sweeps; ++i) {
        const SpinGrid& state = sampler.next();
        if (params.shape.square()) {
            lines << to_json(state.to_configuration()).dump() << "\n";
        } else {
            nlohmann::json cells = nlohmann::json::array();
            for (int r = 1; r <= params.shape.rows; ++r) {
                nlohmann::json row = nlohmann::json::array();
                for (int c = 1; c <= params.shape.cols; ++c) row.push_back(state.spin(r, c) > 0 ? 1 : 0);
                cells.push_back(std::move(row));
            }
            lines << nlohmann::json{{"rows", params.shape.rows},
                                    {"cols", params.shape.cols},
                                    {"cells", cells}}
                         .dump()
                  << "\n";
        }
    }
    write_output(opt.output, lines.str());
    summary_stream(opt.output) << "emitted " << opt.sweeps << " samples (acceptance "
                               << sampler.acceptance_rate() << ")\n";
    return kExitOk;
}

int run_ising_expect(const IsingOptions& opt, const CLI::App* cmd) {
    const IsingParams params = resolve_params(opt, cmd);
    const MoveSequence seq = MoveSequence::parse(opt.seq);
    nlohmann::json out{{"mode", opt.mode}, {"sequence", to_json(seq)}};
    if (opt.mode == "exact") {
        const double value = exact_expected_hamming(params, seq);
        out["expected_H"] = value;
        std::cout.precision(12);
        std::cout << "<H> = " << value << " (exact)\n";
    } else if (opt.mode == "mc") {
        const McEstimate est = mc_expected_hamming(params, seq, opt.sweeps, opt.burn_in, opt.seed);
        out["expected_H"] = est.mean;
        out["std_error"] = est.std_error;
        out["samples"] = est.samples;
        std::cout << "<H> = " << est.mean << " +/- " << est.std_error << " (" << est.samples
                  << " samples)\n";
    } else {
        throw ParameterError("--mode must be 'exact' or 'mc'");
    }
    if (!opt.output.empty()) write_text_file(opt.output, out.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-symmetry analysis of 2-D point data"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* cmd_gen = app.add_subcommand("generate", "synthesize a point cloud CSV");
    cmd_gen->add_option("--kind", gen.kind, "gaussian | gamma | ring-scene");
    cmd_gen->add_option("--count", gen.count, "number of points");
    cmd_gen->add_option("--mean", gen.mean, "gaussian mean 'x,y'");
    cmd_gen->add_option("--cov", gen.cov, "gaussian covariance 'xx,xy,yx,yy'");
    cmd_gen->add_option("--shape", gen.shape, "gamma shape 'x,y'");
    cmd_gen->add_option("--scale", gen.scale, "gamma scale 'x,y'");
    cmd_gen->add_option("--ring-centers", gen.centers, "ring centers 'x1,y1;x2,y2;...'");
    cmd_gen->add_option("--ring-radius", gen.radius, "ring radius");
    cmd_gen->add_option("--noise-sigma", gen.noise_sigma, "additive gaussian jitter");
    cmd_gen->add_option("--spec-json", gen.spec_json, "full generator spec (JSON file)");
    cmd_gen->add_option("--mirror", gen.mirror, "emit a mirrored scene: vertical | horizontal");
    cmd_gen->add_option("--seed", gen.seed, "RNG seed");
    cmd_gen->add_option("--output,-o", gen.output, "CSV path (default stdout)");

    DigitizeOptions dig;
    auto* cmd_dig = app.add_subcommand("digitize", "bin a CSV cloud into a marked grid JSON");
    cmd_dig->add_option("--input,-i", dig.input, "points CSV")->required();
    cmd_dig->add_option("--n", dig.n, "grid number")->required();
    cmd_dig->add_option("--l", dig.l, "cell side (omit with --origin for auto-fit)");
    cmd_dig->add_option("--origin", dig.origin, "grid origin 'x,y' (lower-left)");
    cmd_dig->add_option("--r", dig.r, "micro-raster resolution per cell");
    cmd_dig->add_option("--k", dig.k, "betti index for the marking: 0 or 1");
    cmd_dig->add_option("--output,-o", dig.output, "grid JSON path (default stdout)");

    AnalyzeOptions ana;
    auto* cmd_ana = app.add_subcommand("analyze", "test a marked grid for grid symmetry");
    cmd_ana->add_option("--grid,-g", ana.grid_path, "marked grid JSON")->required();
    cmd_ana->add_option("--seq", ana.seq, "move tokens, e.g. 'T2,T2,T1,T1'");
    cmd_ana->add_option("--seq-json", ana.seq_json, "move sequence JSON file");
    cmd_ana->add_option("--block-size,-m", ana.block_size, "window size (default: whole grid)");
    cmd_ana->add_option("--offset", ana.offset, "window position 'row,col' (default: seeded sample)");
    cmd_ana->add_option("--eta", ana.eta, "threshold, integer or 'auto'");
    cmd_ana->add_option("--trials", ana.trials, "Monte Carlo trials (switches to Pr[H<=eta] mode)");
    cmd_ana->add_option("--max-exp", ana.max_exponent, "sequence sampler exponent cap");
    cmd_ana->add_option("--seed", ana.seed, "RNG seed");
    cmd_ana->add_option("--trace-csv", ana.trace_csv, "also write the step,move,H table here");
    cmd_ana->add_option("--format", ana.format, "report format: json | csv");
    cmd_ana->add_option("--output,-o", ana.output, "report path (default stdout)");

    IsingOptions ising;
    auto* cmd_ising = app.add_subcommand("ising", "configuration-model calibration tools");
    cmd_ising->require_subcommand(1);
    auto add_ising_common = [&](CLI::App* sub) {
        sub->add_option("--n", ising.shape, "lattice size N or RxC");
        sub->add_option("--J", ising.coupling, "uniform coupling");
        sub->add_option("--Gamma", ising.field, "field strength");
        sub->add_option("--tau", ising.tau, "Gibbs weight parameter");
        sub->add_option("--boundary", ising.boundary, "open | periodic");
        sub->add_option("--params", ising.params_json, "parameter JSON file");
        sub->add_option("--output,-o", ising.output, "output path");
    };
    auto* cmd_exact = cmd_ising->add_subcommand("exact", "exhaustive partition function");
    add_ising_common(cmd_exact);
    auto* cmd_sample = cmd_ising->add_subcommand("sample", "Metropolis samples, one JSON per line");
    add_ising_common(cmd_sample);
    cmd_sample->add_option("--sweeps", ising.sweeps, "samples to emit");
    cmd_sample->add_option("--burn-in", ising.burn_in, "sweeps discarded first");
    cmd_sample->add_option("--seed", ising.seed, "RNG seed");
    auto* cmd_expect = cmd_ising->add_subcommand("expect", "expected move distance under the model");
    add_ising_common(cmd_expect);
    cmd_expect->add_option("--seq", ising.seq, "move tokens");
    cmd_expect->add_option("--mode", ising.mode, "exact | mc");
    cmd_expect->add_option("--sweeps", ising.sweeps, "MC samples");
    cmd_expect->add_option("--burn-in", ising.burn_in, "MC burn-in sweeps");
    cmd_expect->add_option("--seed", ising.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }

    try {
        if (cmd_gen->parsed()) return run_generate(gen);
        if (cmd_dig->parsed()) return run_digitize(dig);
        if (cmd_ana->parsed()) return run_analyze(ana);
        if (cmd_exact->parsed()) return run_ising_exact(ising, cmd_exact);
        if (cmd_sample->parsed()) return run_ising_sample(ising, cmd_sample);
        if (cmd_expect->parsed()) return run_ising_expect(ising, cmd_expect);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return kExitOk;
}
