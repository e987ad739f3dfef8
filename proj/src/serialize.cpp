#include "gridsym/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gridsym/errors.hpp"

namespace gridsym {

namespace {

using nlohmann::json;

json cells_to_rows(const std::vector<std::uint8_t>& cells, int n) {
    json rows = json::array();
    for (int r = 0; r < n; ++r) {
        json row = json::array();
        for (int c = 0; c < n; ++c) row.push_back(static_cast<int>(cells[static_cast<std::size_t>(r) * n + c]));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::uint8_t> rows_to_cells(const json& rows, int n, const char* what) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParameterError(std::string(what) + " must be an n-row array");
    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParameterError(std::string(what) + " rows must have n entries");
        for (const auto& v : row) {
            const int i = v.get<int>();
            if (i != 0 && i != 1) throw ParameterError(std::string(what) + " entries must be 0 or 1");
            cells.push_back(static_cast<std::uint8_t>(i));
        }
    }
    return cells;
}

}  // namespace

nlohmann::json to_json(const Configuration& config) {
    return json{{"n", config.n()}, {"cells", cells_to_rows(config.cells(), config.n())}};
}

Configuration configuration_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    return Configuration(n, rows_to_cells(j.at("cells"), n, "cells"));
}

nlohmann::json to_json(const MoveSequence& seq) {
    json out = json::array();
    for (const auto& m : seq.moves()) {
        json entry;
        switch (m.kind) {
            case Move::Kind::commute_cols: entry = {{"op", "commute_cols"}, {"i", m.index}}; break;
            case Move::Kind::commute_rows: entry = {{"op", "commute_rows"}, {"i", m.index}}; break;
            case Move::Kind::commute_all: entry = {{"op", "commute_all"}}; break;
            case Move::Kind::cyclic_cols:
                entry = {{"op", "cyclic_cols"}, {"dir", m.dir == ShiftDir::forward ? "fwd" : "bwd"}};
                break;
            case Move::Kind::cyclic_rows:
                entry = {{"op", "cyclic_rows"}, {"dir", m.dir == ShiftDir::forward ? "fwd" : "bwd"}};
                break;
            case Move::Kind::stabilize: entry = {{"op", "stabilize"}, {"col", m.col}, {"row", m.row}}; break;
            case Move::Kind::destabilize:
                entry = {{"op", "destabilize"}, {"col", m.col}, {"row", m.row}};
                break;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

MoveSequence move_sequence_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParameterError("move sequence must be a JSON array");
    std::vector<Move> moves;
    for (const auto& entry : j) {
        const std::string op = entry.at("op").get<std::string>();
        if (op == "commute_cols") moves.push_back(Move::CommuteCols(entry.at("i").get<int>()));
        else if (op == "commute_rows") moves.push_back(Move::CommuteRows(entry.at("i").get<int>()));
        else if (op == "commute_all") moves.push_back(Move::CommuteAll());
        else if (op == "cyclic_cols" || op == "cyclic_rows") {
            const std::string dir = entry.value("dir", "fwd");
            if (dir != "fwd" && dir != "bwd") throw ParameterError("dir must be 'fwd' or 'bwd'");
            const ShiftDir d = dir == "fwd" ? ShiftDir::forward : ShiftDir::backward;
            moves.push_back(op == "cyclic_cols" ? Move::CyclicCols(d) : Move::CyclicRows(d));
        } else if (op == "stabilize")
            moves.push_back(Move::Stabilize(entry.at("col").get<int>(), entry.at("row").get<int>()));
        else if (op == "destabilize")
            moves.push_back(Move::Destabilize(entry.at("col").get<int>(), entry.at("row").get<int>()));
        else
            throw ParameterError("unknown move op '" + op + "'");
    }
    return MoveSequence::from_moves(std::move(moves));
}

nlohmann::json to_json(const MarkedGrid& grid) {
    const int n = grid.spec.n;
    json beta0 = json::array(), beta1 = json::array();
    for (int r = 0; r < n; ++r) {
        json row0 = json::array(), row1 = json::array();
        for (int c = 0; c < n; ++c) {
            const auto& pair = grid.betti[static_cast<std::size_t>(r) * n + c];
            row0.push_back(pair.beta0);
            row1.push_back(pair.beta1);
        }
        beta0.push_back(std::move(row0));
        beta1.push_back(std::move(row1));
    }
    return json{{"n", n},
                {"l", grid.spec.l},
                {"origin", {grid.spec.x0, grid.spec.y0}},
                {"cells", cells_to_rows(grid.config.cells(), n)},
                {"betti0", beta0},
                {"betti1", beta1},
                {"dropped_points", grid.dropped_points}};
}

MarkedGrid marked_grid_from_json(const nlohmann::json& j) {
    MarkedGrid grid;
    const int n = j.at("n").get<int>();
    grid.spec.n = n;
    grid.spec.l = j.value("l", 1.0);
    if (j.contains("origin")) {
        grid.spec.x0 = j.at("origin").at(0).get<double>();
        grid.spec.y0 = j.at("origin").at(1).get<double>();
    }
    grid.spec.validate();
    grid.config = Configuration(n, rows_to_cells(j.at("cells"), n, "cells"));
    grid.dropped_points = j.value("dropped_points", 0);

    grid.betti.assign(static_cast<std::size_t>(n) * n, BettiPair{});
    auto load_betti = [&](const char* key, bool first) {
        if (!j.contains(key)) return false;
        const auto& rows = j.at(key);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                int& slot = first ? grid.betti[static_cast<std::size_t>(r) * n + c].beta0
                                  : grid.betti[static_cast<std::size_t>(r) * n + c].beta1;
                slot = rows.at(r).at(c).get<int>();
            }
        return true;
    };
    const bool have0 = load_betti("betti0", true);
    const bool have1 = load_betti("betti1", false);
    if (!have0 || !have1) {
        // Bare-configuration fixture: make the marking invariant hold trivially.
        for (int i = 0; i < n * n; ++i) {
            const int v = grid.config.cells()[i];
            if (!have0) grid.betti[i].beta0 = v;
            if (!have1) grid.betti[i].beta1 = v;
        }
    }
    return grid;
}

nlohmann::json to_json(const SymmetryReport& report) {
    return json{{"offset", {report.offset_row, report.offset_col}},
                {"m", report.m},
                {"sequence", to_json(report.sequence)},
                {"trace", report.trace},
                {"final_H", report.final_hamming},
                {"eta", report.eta},
                {"verdict", report.symmetric ? "symmetric" : "not-symmetric"}};
}

nlohmann::json to_json(const IsingParams& params) {
    json j;
    j["n"] = params.shape.square()
                 ? json(params.shape.rows)
                 : json(std::to_string(params.shape.rows) + "x" + std::to_string(params.shape.cols));
    if (params.edge_couplings) {
        json edges = json::array();
        for (const auto& [key, value] : params.edge_couplings->values)
            edges.push_back({key[0], key[1], key[2], key[3], value});
        j["J"] = {{"default", params.edge_couplings->default_value}, {"edges", edges}};
    } else {
        j["J"] = params.coupling;
    }
    j["Gamma"] = params.field;
    j["tau"] = params.tau;
    j["boundary"] = params.periodic ? "periodic" : "open";
    return j;
}

namespace {

LatticeShape shape_from_json(const json& v) {
    if (v.is_number_integer()) {
        const int n = v.get<int>();
        return {n, n};
    }
    const std::string text = v.get<std::string>();
    const auto x = text.find('x');
    if (x == std::string::npos) throw ParameterError("lattice size must be an integer or 'RxC'");
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
}

}  // namespace

IsingParams ising_params_from_json(const nlohmann::json& j) {
    IsingParams params;
    params.shape = shape_from_json(j.at("n"));
    if (j.contains("J")) {
        const auto& jj = j.at("J");
        if (jj.is_object()) {
            EdgeCouplings couplings;
            couplings.default_value = jj.value("default", 0.0);
            for (const auto& e : jj.value("edges", json::array())) {
                if (!e.is_array() || e.size() != 5)
                    throw ParameterError("edge coupling entries must be [r1,c1,r2,c2,J]");
                std::array<int, 4> key{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(),
                                       e.at(3).get<int>()};
                std::array<int, 4> swapped{key[2], key[3], key[0], key[1]};
                if (swapped < key) key = swapped;
                couplings.values[key] = e.at(4).get<double>();
            }
            params.edge_couplings = std::move(couplings);
        } else {
            params.coupling = jj.get<double>();
        }
    }
    params.field = j.value("Gamma", 0.0);
    params.tau = j.value("tau", 1.0);
    const std::string boundary = j.value("boundary", "open");
    if (boundary != "open" && boundary != "periodic")
        throw ParameterError("boundary must be 'open' or 'periodic'");
    params.periodic = boundary == "periodic";
    params.validate();
    return params;
}

namespace {

json gaussian_to_json(const GaussianSpec& g) {
    return json{{"mean", {g.mean[0], g.mean[1]}},
                {"cov", {{g.cov[0], g.cov[1]}, {g.cov[2], g.cov[3]}}}};
}

GaussianSpec gaussian_from_json(const json& j) {
    GaussianSpec g;
    g.mean = {j.at("mean").at(0).get<double>(), j.at("mean").at(1).get<double>()};
    const auto& cov = j.at("cov");
    g.cov = {cov.at(0).at(0).get<double>(), cov.at(0).at(1).get<double>(),
             cov.at(1).at(0).get<double>(), cov.at(1).at(1).get<double>()};
    return g;
}

}  // namespace

nlohmann::json to_json(const GeneratorSpec& spec) {
    json j;
    if (const auto* g = std::get_if<GaussianSpec>(&spec.kind)) {
        j = gaussian_to_json(*g);
        j["kind"] = "gaussian";
    } else if (const auto* gm = std::get_if<GammaSpec>(&spec.kind)) {
        j["kind"] = "gamma";
        j["shape"] = {gm->shape_x, gm->shape_y};
        j["scale"] = {gm->scale_x, gm->scale_y};
    } else if (const auto* mix = std::get_if<MixtureSpec>(&spec.kind)) {
        j["kind"] = "mixture";
        j["weights"] = mix->weights;
        json comps = json::array();
        for (const auto& c : mix->components) comps.push_back(gaussian_to_json(c));
        j["components"] = comps;
    } else {
        const auto& rs = std::get<RingSceneSpec>(spec.kind);
        j["kind"] = "ring-scene";
        json centers = json::array();
        for (const auto& c : rs.centers) centers.push_back({c.x, c.y});
        j["centers"] = centers;
        j["radius"] = rs.radius;
    }
    j["count"] = spec.count;
    j["noise_sigma"] = spec.noise_sigma;
    j["seed"] = spec.seed;
    return j;
}

GeneratorSpec generator_spec_from_json(const nlohmann::json& j) {
    GeneratorSpec spec;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "gaussian") {
        spec.kind = gaussian_from_json(j);
    } else if (kind == "gamma") {
        GammaSpec g;
        g.shape_x = j.at("shape").at(0).get<double>();
        g.shape_y = j.at("shape").at(1).get<double>();
        g.scale_x = j.at("scale").at(0).get<double>();
        g.scale_y = j.at("scale").at(1).get<double>();
        spec.kind = g;
    } else if (kind == "mixture") {
        MixtureSpec m;
        m.weights = j.at("weights").get<std::vector<double>>();
        for (const auto& c : j.at("components")) m.components.push_back(gaussian_from_json(c));
        spec.kind = std::move(m);
    } else if (kind == "ring-scene") {
        RingSceneSpec r;
        for (const auto& c : j.at("centers")) r.centers.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
        r.radius = j.at("radius").get<double>();
        spec.kind = std::move(r);
    } else {
        throw ParameterError("unknown generator kind '" + kind + "'");
    }
    spec.count = j.value("count", std::size_t{0});
    spec.noise_sigma = j.value("noise_sigma", 0.0);
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.validate();
    return spec;
}

void write_points_csv(std::ostream& out, const PointCloud& cloud) {
    out << "x,y\n";
    char buf[64];
    for (const auto& p : cloud.points) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.x, p.y);
        out << buf;
    }
}

PointCloud read_points_csv(std::istream& in) {
    PointCloud cloud;
    std::string line;
    bool first = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "x,y") continue;  // header optional on input
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw IoError("line " + std::to_string(line_no) + ": expected 'x,y'");
        try {
            const double x = std::stod(line.substr(0, comma));
            const double y = std::stod(line.substr(comma + 1));
            cloud.points.push_back({x, y});
        } catch (const std::exception&) {
            throw IoError("line " + std::to_string(line_no) + ": bad number");
        }
    }
    return cloud;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed writing '" + path + "'");
}

nlohmann::json read_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("'" + path + "': " + e.what());
    }
}

}  // namespace gridsym
