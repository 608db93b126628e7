#pragma once

#include <string>

#include <json.hpp>

#include "plc/codes.hpp"
#include "plc/fock.hpp"
#include "plc/linopt.hpp"
#include "plc/logic.hpp"
#include "plc/loss.hpp"

namespace plc {

// State vectors are stored sparsely:
//   {"modes": N, "photons": n, "terms": [{"occ": [..], "re": x, "im": y}, ...]}
// omitted terms are zero. Code files wrap two term lists:
//   {"modes": N, "photons": n, "L": [terms...], "H": [terms...]}
// Mode matrices are dense: {"dim": N, "re": [[..]], "im": [[..]]}.

nlohmann::json state_to_json(const StateVector& state);
StateVector state_from_json(const nlohmann::json& j);

nlohmann::json code_to_json(const CodePair& code);
CodePair code_from_json(const nlohmann::json& j, double tol = kDefaultTol);

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);

nlohmann::json unitary_to_json(const ModeUnitary& gamma);
ModeUnitary unitary_from_json(const nlohmann::json& j, double tol = kDefaultTol);

nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json closure_to_json(const GroupClosure& closure);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Fixed-precision decimal used in CSV output (12 significant digits).
std::string csv_number(double value);

std::string orbit_to_csv(const GroupClosure& closure);
std::string curve_to_csv(const FidelityCurve& curve, bool tag_corrected = false);

}  // namespace plc
