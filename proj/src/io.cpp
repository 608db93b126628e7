#include "plc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plc {

using nlohmann::json;

nlohmann::json state_to_json(const StateVector& state) {
    json terms = json::array();
    const FockBasis& b = state.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Complex a = state.amp()[static_cast<Eigen::Index>(i)];
        if (a == Complex(0.0, 0.0)) continue;
        terms.push_back({{"occ", b.at(i)}, {"re", a.real()}, {"im", a.imag()}});
    }
    return json{{"modes", b.modes()}, {"photons", b.photons()}, {"terms", terms}};
}

namespace {

Eigen::VectorXcd terms_to_amp(const json& terms, const FockBasis& basis) {
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const json& term : terms) {
        const Occupation occ = term.at("occ").get<Occupation>();
        if (static_cast<int>(occ.size()) != basis.modes())
            throw std::invalid_argument("state JSON: occ length does not match modes");
        amp[static_cast<Eigen::Index>(basis.index(occ))] +=
            Complex(term.at("re").get<double>(), term.value("im", 0.0));
    }
    return amp;
}

}  // namespace

StateVector state_from_json(const json& j) {
    const int modes = j.at("modes").get<int>();
    const int photons = j.at("photons").get<int>();
    auto basis = FockBasis::make(modes, photons);
    return StateVector(basis, terms_to_amp(j.at("terms"), *basis));
}

nlohmann::json code_to_json(const CodePair& code) {
    return json{{"modes", code.basis().modes()},
                {"photons", code.basis().photons()},
                {"L", state_to_json(code.L()).at("terms")},
                {"H", state_to_json(code.H()).at("terms")}};
}

CodePair code_from_json(const json& j, double tol) {
    const int modes = j.at("modes").get<int>();
    const int photons = j.at("photons").get<int>();
    auto basis = FockBasis::make(modes, photons);
    StateVector l(basis, terms_to_amp(j.at("L"), *basis));
    StateVector h(basis, terms_to_amp(j.at("H"), *basis));
    return CodePair(std::move(l), std::move(h), tol);
}

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"re", re}, {"im", im}};
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
    const json& re = j.at("re");
    const json& im = j.at("im");
    const auto rows = static_cast<Eigen::Index>(re.size());
    if (rows == 0) throw std::invalid_argument("matrix JSON: empty");
    const auto cols = static_cast<Eigen::Index>(re.at(0).size());
    if (im.size() != re.size()) throw std::invalid_argument("matrix JSON: re/im shape mismatch");
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (static_cast<Eigen::Index>(re.at(i).size()) != cols ||
            static_cast<Eigen::Index>(im.at(i).size()) != cols)
            throw std::invalid_argument("matrix JSON: ragged rows");
        for (Eigen::Index c = 0; c < cols; ++c)
            m(i, c) = Complex(re.at(i).at(c).get<double>(), im.at(i).at(c).get<double>());
    }
    return m;
}

nlohmann::json unitary_to_json(const ModeUnitary& gamma) {
    json j = matrix_to_json(gamma.mat());
    j["dim"] = gamma.dim();
    return j;
}

ModeUnitary unitary_from_json(const json& j, double tol) {
    Eigen::MatrixXcd m = matrix_from_json(j);
    if (j.contains("dim") && j.at("dim").get<Eigen::Index>() != m.rows())
        throw std::invalid_argument("unitary JSON: dim field does not match matrix shape");
    return ModeUnitary(std::move(m), tol);
}

nlohmann::json report_to_json(const VerificationReport& report) {
    json j{{"correctable", report.correctable},
           {"tolerance", report.tolerance},
           {"max_offdiag_violation", report.max_offdiag_violation},
           {"max_diag_violation", report.max_diag_violation},
           {"gram_structure_violation", report.gram_structure_violation},
           {"psd_violation", report.psd_violation}};
    if (report.g) {
        j["g"] = matrix_to_json(*report.g);
        j["g_trace"] = report.g->trace().real();
    }
    return j;
}

nlohmann::json closure_to_json(const GroupClosure& closure) {
    json gates = json::array();
    for (std::size_t i = 0; i < closure.gates.size(); ++i) {
        json g = matrix_to_json(closure.gates[i].u);
        g["leakage"] = closure.gates[i].leakage;
        g["word"] = closure.words[i];
        gates.push_back(std::move(g));
    }
    json orbit = json::array();
    for (std::size_t i = 0; i < closure.orbit.size(); ++i) {
        orbit.push_back({{"x", closure.orbit[i].x},
                         {"y", closure.orbit[i].y},
                         {"z", closure.orbit[i].z},
                         {"word", closure.orbit_words[i]}});
    }
    return json{{"saturated", closure.saturated},
                {"order", closure.order()},
                {"gates", gates},
                {"orbit", orbit}};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

std::string csv_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string orbit_to_csv(const GroupClosure& closure) {
    std::ostringstream out;
    out << "x,y,z,word\n";
    for (std::size_t i = 0; i < closure.orbit.size(); ++i) {
        out << csv_number(closure.orbit[i].x) << ',' << csv_number(closure.orbit[i].y) << ','
            << csv_number(closure.orbit[i].z) << ',' << closure.orbit_words[i] << '\n';
    }
    return out.str();
}

std::string curve_to_csv(const FidelityCurve& curve, bool tag_corrected) {
    std::ostringstream out;
    out << "gamma,one_minus_F,leakage_weight";
    if (tag_corrected) out << ",corrected";
    out << '\n';
    for (const FidelityPoint& p : curve.points) {
        out << csv_number(p.gamma) << ',' << csv_number(p.one_minus_f) << ','
            << csv_number(p.leakage_weight);
        if (tag_corrected) out << ',' << (curve.corrected ? 1 : 0);
        out << '\n';
    }
    return out.str();
}

}  // namespace plc
