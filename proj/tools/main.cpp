#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plc/codes.hpp"
#include "plc/io.hpp"
#include "plc/logic.hpp"
#include "plc/loss.hpp"
#include "plc/random.hpp"

namespace {

using nlohmann::json;

struct Config {
    std::string code_source;
    std::string unitary_source;
    std::string generators;
    std::string gammas;
    std::string out;
    std::string format = "csv";
    std::string dump_code;
    double tol = plc::kDefaultTol;
    std::uint64_t seed = 0;
    int samples = 100;
    std::size_t max_elems = 10000;
    bool corrected = false;
    bool uncorrected = false;
    bool worst_case = false;
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty())
        std::fputs(text.c_str(), stdout);
    else
        plc::write_text_file(out, text);
}

plc::CodePair resolve_code(const std::string& source, double tol) {
    if (source.rfind("builtin:", 0) == 0) return plc::builtin_code(source.substr(8), tol);
    return plc::code_from_json(plc::load_json_file(source), tol);
}

plc::ModeUnitary resolve_unitary(const std::string& source, double tol) {
    if (source.rfind("builtin:", 0) == 0) return plc::builtin_unitary(source.substr(8));
    return plc::unitary_from_json(plc::load_json_file(source), tol);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) parts.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    for (const std::string& item : split_list(text)) {
        std::size_t used = 0;
        const double value = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad number: " + item);
        out.push_back(value);
    }
    return out;
}

int cmd_verify(const Config& cfg) {
    const plc::CodePair code = resolve_code(cfg.code_source, cfg.tol);
    const plc::VerificationReport report = plc::verify_code(code, cfg.tol);
    json j = plc::report_to_json(report);
    j["code"] = cfg.code_source;
    emit(cfg.out, j.dump(2) + "\n");
    if (!cfg.dump_code.empty())
        plc::write_text_file(cfg.dump_code, plc::code_to_json(code).dump(2) + "\n");
    return report.correctable ? 0 : 1;
}

int cmd_gate(const Config& cfg) {
    const plc::CodePair code = resolve_code(cfg.code_source, cfg.tol);
    const plc::ModeUnitary gamma = resolve_unitary(cfg.unitary_source, cfg.tol);
    const plc::LogicalGate gate = plc::extract_gate(code, gamma);

    // Bloch image of the (renormalized) in-code part of R|H>; null when the
    // image leaks out of the code space almost entirely.
    json bloch_h = nullptr;
    Eigen::Vector2cd image_h = gate.u.col(1);
    if (image_h.norm() > 1e-6) {
        image_h.normalize();
        const plc::BlochPoint p = plc::bloch(image_h[0], image_h[1]);
        bloch_h = json{{"x", p.x}, {"y", p.y}, {"z", p.z}};
    }

    const json j{{"code", cfg.code_source},
                 {"unitary", cfg.unitary_source},
                 {"leakage", gate.leakage},
                 {"u", plc::matrix_to_json(gate.u)},
                 {"bloch_H", std::move(bloch_h)}};
    emit(cfg.out, j.dump(2) + "\n");
    return 0;
}

int cmd_orbit(const Config& cfg) {
    const plc::CodePair code = resolve_code(cfg.code_source, cfg.tol);
    const std::vector<std::string> sources = split_list(cfg.generators);
    if (sources.empty()) throw std::invalid_argument("orbit: no generators given");
    std::vector<plc::ModeUnitary> generators;
    for (const std::string& src : sources) generators.push_back(resolve_unitary(src, cfg.tol));

    plc::GroupClosure closure;
    try {
        closure = plc::group_closure(code, generators, cfg.max_elems, cfg.tol);
    } catch (const plc::LeakyGeneratorError& e) {
        std::fprintf(stderr, "generator '%s' does not preserve the code subspace (leakage %g)\n",
                     sources[e.index].c_str(), e.leakage);
        return 1;
    }

    if (cfg.format == "json") {
        json j = plc::closure_to_json(closure);
        j["code"] = cfg.code_source;
        emit(cfg.out, j.dump(2) + "\n");
    } else {
        emit(cfg.out, plc::orbit_to_csv(closure));
    }
    std::fprintf(stderr, "group order %zu, saturated=%s\n", closure.order(),
                 closure.saturated ? "true" : "false");
    return 0;
}

int cmd_nogo(const Config& cfg) {
    const plc::CodePair code = resolve_code(cfg.code_source, cfg.tol);
    if (cfg.samples < 0) throw std::invalid_argument("nogo: samples must be >= 0");

    plc::Rng rng(cfg.seed);
    const int n = code.basis().modes();
    const std::vector<double> s_grid{0.1, 0.7, 2.0};

    double max_residual = 0.0;
    int leaky = 0;
    int phase_only = 0;
    int violations = 0;
    for (int i = 0; i < cfg.samples; ++i) {
        const plc::HermitianGenerator lambda(rng.hermitian(n));
        const plc::ObstructionReport ob = plc::obstruction_check(code, lambda);
        max_residual = std::max(max_residual, ob.projection_residual);
        if (ob.first_order_leakage >= cfg.tol) {
            ++leaky;
        } else if (plc::phase_theorem_check(code, lambda, s_grid, cfg.tol)) {
            ++phase_only;
        } else {
            ++violations;
        }
    }

    const json j{{"code", cfg.code_source},
                 {"samples", cfg.samples},
                 {"seed", cfg.seed},
                 {"rng", plc::Rng::kName},
                 {"tolerance", cfg.tol},
                 {"s_grid", s_grid},
                 {"max_projection_residual", max_residual},
                 {"tally", {{"leaky", leaky}, {"phase_only", phase_only}}},
                 {"dichotomy_violations", violations}};
    emit(cfg.out, j.dump(2) + "\n");
    return 0;
}

int cmd_fidelity(const Config& cfg) {
    const plc::CodePair code = resolve_code(cfg.code_source, cfg.tol);
    const std::vector<double> gammas = parse_doubles(cfg.gammas);

    bool corrected = cfg.corrected;
    bool uncorrected = cfg.uncorrected;
    if (!corrected && !uncorrected) corrected = true;

    std::vector<plc::FidelityCurve> curves;
    if (corrected) curves.push_back(plc::fidelity_curve(code, gammas, true, cfg.worst_case));
    if (uncorrected) curves.push_back(plc::fidelity_curve(code, gammas, false, cfg.worst_case));

    if (cfg.format == "json") {
        json out_curves = json::array();
        for (const plc::FidelityCurve& curve : curves) {
            json points = json::array();
            for (const plc::FidelityPoint& p : curve.points) {
                const plc::LogicalChannel lc =
                    plc::logical_channel(code, p.gamma, curve.corrected);
                json kraus = json::array();
                for (const Eigen::Matrix2cd& m : lc.kraus)
                    kraus.push_back(plc::matrix_to_json(m));
                points.push_back({{"gamma", p.gamma},
                                  {"one_minus_F", p.one_minus_f},
                                  {"leakage_weight", p.leakage_weight},
                                  {"kraus", std::move(kraus)}});
            }
            out_curves.push_back({{"corrected", curve.corrected}, {"points", std::move(points)}});
        }
        const json j{{"code", cfg.code_source},
                     {"figure", cfg.worst_case ? "worst_case" : "entanglement"},
                     {"curves", std::move(out_curves)}};
        emit(cfg.out, j.dump(2) + "\n");
    } else {
        const bool tag = curves.size() > 1;
        std::string text;
        for (std::size_t i = 0; i < curves.size(); ++i) {
            std::string block = plc::curve_to_csv(curves[i], tag);
            if (i > 0) block.erase(0, block.find('\n') + 1);  // keep one header
            text += block;
        }
        if (curves.empty()) text = "gamma,one_minus_F,leakage_weight\n";
        emit(cfg.out, text);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification and gate-analysis toolkit for photon-loss codes"};
    app.require_subcommand(1);
    Config cfg;

    const auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--code", cfg.code_source, "builtin:NAME or path to a code JSON file")
            ->required();
        sub->add_option("--tol", cfg.tol, "numerical tolerance (default 1e-10)");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
    };

    CLI::App* verify = app.add_subcommand("verify", "check the one-photon-loss correctability conditions");
    add_common(verify);
    verify->add_option("--dump-code", cfg.dump_code, "also write the resolved code to a JSON file");

    CLI::App* gate = app.add_subcommand("gate", "extract the induced logical gate of a network");
    add_common(gate);
    gate->add_option("--unitary", cfg.unitary_source, "builtin:NAME or path to a unitary JSON file")
        ->required();

    CLI::App* orbit = app.add_subcommand("orbit", "close the gate group and emit the Bloch orbit of |H>");
    add_common(orbit);
    orbit->add_option("--generators", cfg.generators, "comma-separated unitary sources")->required();
    orbit->add_option("--max-elems", cfg.max_elems, "closure size cap (default 10000)");
    orbit->add_option("--format", cfg.format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* nogo = app.add_subcommand("nogo", "sample Hermitian generators and tally the no-go dichotomy");
    add_common(nogo);
    nogo->add_option("--samples", cfg.samples, "number of random generators (default 100)");
    nogo->add_option("--seed", cfg.seed, "RNG seed (default 0)");

    CLI::App* fidelity = app.add_subcommand("fidelity", "infidelity versus damping strength");
    add_common(fidelity);
    fidelity->add_option("--gammas", cfg.gammas, "comma-separated loss probabilities in (0,1)");
    fidelity->add_flag("--corrected", cfg.corrected, "curve with syndrome recovery (default)");
    fidelity->add_flag("--uncorrected", cfg.uncorrected, "curve without recovery");
    fidelity->add_flag("--worst-case", cfg.worst_case,
                       "minimize pure-state fidelity over a 200-point Bloch mesh");
    fidelity->add_option("--format", cfg.format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg);
        if (gate->parsed()) return cmd_gate(cfg);
        if (orbit->parsed()) return cmd_orbit(cfg);
        if (nogo->parsed()) return cmd_nogo(cfg);
        if (fidelity->parsed()) return cmd_fidelity(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
