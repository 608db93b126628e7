#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "plc/fock.hpp"
#include "plc/linopt.hpp"

namespace plc {

/// Two orthonormal logical states on one fixed-photon-number sector.
/// Construction validates the invariants (unit norms, orthogonality, shared
/// sector) and rejects bad input instead of repairing it.
class CodePair {
  public:
    CodePair(StateVector l, StateVector h, double tol = kDefaultTol);

    const StateVector& L() const { return l_; }
    const StateVector& H() const { return h_; }
    const FockBasis& basis() const { return l_.basis(); }
    const std::shared_ptr<const FockBasis>& basis_ptr() const { return l_.basis_ptr(); }
    double tolerance() const { return tol_; }

    /// P_C = |L><L| + |H><H| on the sector.
    Eigen::MatrixXcd projector() const;

  private:
    StateVector l_;
    StateVector h_;
    double tol_;
};

struct VerificationReport {
    bool correctable = false;
    std::optional<Eigen::MatrixXcd> g;  // present iff correctable
    double max_offdiag_violation = 0.0;  // max |<H| a_i^dag a_j |L>|
    double max_diag_violation = 0.0;     // max |<H| a_i^dag a_j |H> - <L| a_i^dag a_j |L>|
    double gram_structure_violation = 0.0;  // max |Gram - G (x) I_2|
    double psd_violation = 0.0;              // max(0, -lambda_min(G))
    double tolerance = kDefaultTol;
};

/// One-photon-loss correctability check: the code block of every a_i^dag a_j
/// must be a scalar G_ij times the code projector. Reports raw violation
/// magnitudes; emits G = [<L| a_i^dag a_j |L>] when both maxima pass.
VerificationReport verify_code(const CodePair& code,
                               std::optional<double> tol = std::nullopt);

/// The one-photon-loss states a_j|L>, a_j|H> on the (n-1)-photon sector,
/// ordered (mode, logical): a_0 L, a_0 H, a_1 L, a_1 H, ...
std::vector<StateVector> loss_states(const CodePair& code);

/// The code pair (R(Gamma) L, R(Gamma) H): passive networks preserve
/// code-ness, only the G matrix changes by the conjugation law.
CodePair transform_code(const CodePair& code, const ModeUnitary& gamma);

/// "fourphoton": L = (|04>+|40>)/sqrt2, H = |22>   (2 modes, 4 photons)
/// "threephoton": L = (|003>+|030>+|300>)/sqrt3, H = |111>  (3 modes, 3 photons)
CodePair builtin_code(const std::string& name, double tol = kDefaultTol);

}  // namespace plc
