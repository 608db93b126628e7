#include <doctest.h>

#include "plc/io.hpp"
#include "plc/random.hpp"

using namespace plc;
using nlohmann::json;

TEST_CASE("state JSON round-trips exactly") {
    Rng rng(51);
    auto basis = FockBasis::make(3, 3);
    Eigen::VectorXcd amp(static_cast<Eigen::Index>(basis->size()));
    for (Eigen::Index i = 0; i < amp.size(); ++i) amp[i] = Complex(rng.normal(), rng.normal());
    amp[3] = 0.0;  // exact zeros are omitted from the terms list
    const StateVector state(basis, amp);

    const json j = state_to_json(state);
    CHECK(j.at("modes") == 3);
    CHECK(j.at("photons") == 3);
    CHECK(j.at("terms").size() == basis->size() - 1);

    // through text and back, still bit-exact
    const StateVector back = state_from_json(json::parse(j.dump()));
    CHECK((back.amp() - state.amp()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("state JSON validation") {
    CHECK_THROWS(state_from_json(json::parse(R"({"modes":2,"photons":1})")));
    CHECK_THROWS(state_from_json(
        json::parse(R"({"modes":2,"photons":1,"terms":[{"occ":[1],"re":1.0,"im":0.0}]})")));
    CHECK_THROWS(state_from_json(
        json::parse(R"({"modes":2,"photons":1,"terms":[{"occ":[1,1],"re":1.0,"im":0.0}]})")));
    // "im" may be omitted
    const StateVector s = state_from_json(
        json::parse(R"({"modes":2,"photons":1,"terms":[{"occ":[1,0],"re":1.0}]})"));
    CHECK(std::abs(s.coeff({1, 0}) - 1.0) == 0.0);
}

TEST_CASE("code JSON round-trips exactly") {
    const CodePair code = builtin_code("threephoton");
    const json j = code_to_json(code);
    const CodePair back = code_from_json(json::parse(j.dump()));
    CHECK((back.L().amp() - code.L().amp()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.H().amp() - code.H().amp()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("unitary JSON round-trips and validates") {
    Rng rng(52);
    const ModeUnitary gamma(rng.haar_unitary(3));
    const json j = unitary_to_json(gamma);
    CHECK(j.at("dim") == 3);
    const ModeUnitary back = unitary_from_json(json::parse(j.dump()));
    CHECK((back.mat() - gamma.mat()).cwiseAbs().maxCoeff() == 0.0);

    json bad = j;
    bad["dim"] = 4;
    CHECK_THROWS_AS(unitary_from_json(bad), std::invalid_argument);
    json ragged = json::parse(R"({"re":[[1,0],[0]],"im":[[0,0],[0,0]]})");
    CHECK_THROWS_AS(matrix_from_json(ragged), std::invalid_argument);
}

TEST_CASE("verification report JSON carries the violations and G") {
    const json ok = report_to_json(verify_code(builtin_code("fourphoton")));
    CHECK(ok.at("correctable") == true);
    CHECK(ok.contains("g"));
    CHECK(ok.at("g_trace").get<double>() == doctest::Approx(4.0));
    CHECK(ok.at("max_offdiag_violation").get<double>() < 1e-12);

    auto basis = FockBasis::make(2, 1);
    const json bad = report_to_json(
        verify_code(CodePair(basis_state(basis, {1, 0}), basis_state(basis, {0, 1}))));
    CHECK(bad.at("correctable") == false);
    CHECK_FALSE(bad.contains("g"));
}

TEST_CASE("closure JSON and orbit CSV") {
    const GroupClosure closure =
        group_closure(builtin_code("fourphoton"),
                      {builtin_unitary("bs50"), builtin_unitary("phase2:pi/2")});
    const json j = closure_to_json(closure);
    CHECK(j.at("order") == 6);
    CHECK(j.at("saturated") == true);
    CHECK(j.at("gates").size() == 6);
    CHECK(j.at("gates")[0].at("word") == "e");
    CHECK(j.at("orbit").size() == 3);

    const std::string csv = orbit_to_csv(closure);
    CHECK(csv.rfind("x,y,z,word\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 points
}

TEST_CASE("fidelity CSV formatting") {
    const FidelityCurve curve =
        fidelity_curve(builtin_code("fourphoton"), std::vector<double>{1e-3, 1e-2}, true);
    const std::string csv = curve_to_csv(curve);
    CHECK(csv.rfind("gamma,one_minus_F,leakage_weight\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    const std::string tagged = curve_to_csv(curve, true);
    CHECK(tagged.rfind("gamma,one_minus_F,leakage_weight,corrected\n", 0) == 0);
    CHECK(tagged.find(",1\n") != std::string::npos);
}

TEST_CASE("csv numbers use 12 significant digits") {
    CHECK(csv_number(0.1) == "0.1");
    CHECK(csv_number(1.0 / 3.0) == "0.333333333333");
    CHECK(csv_number(-2.5e-13) == "-2.5e-13");
}
