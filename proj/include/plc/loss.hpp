#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "plc/codes.hpp"

namespace plc {

/// Uniform amplitude damping on every mode: per-photon loss probability
/// gamma, transmissivity 1 - gamma. One Kraus operator per loss vector k
/// (photons removed per mode), mapping the n-photon sector to n - |k|.
struct LossChannel {
    double gamma = 0.0;
    std::shared_ptr<const FockBasis> basis;
    std::vector<Occupation> loss_vectors;
    std::vector<Eigen::MatrixXcd> kraus;  // kraus[i]: targets[i].size x basis.size
    std::vector<std::shared_ptr<const FockBasis>> targets;
};

LossChannel build_channel(std::shared_ptr<const FockBasis> basis, double gamma);

/// Syndrome recovery for a correctable code with nonsingular G: the no-loss
/// branch projects onto the code, and each whitened one-loss channel mu maps
/// its error pair |e_mu,L>, |e_mu,H> back to |L>, |H>.
struct RecoveryMap {
    std::shared_ptr<const FockBasis> code_basis;   // n photons
    std::shared_ptr<const FockBasis> error_basis;  // n - 1 photons
    Eigen::MatrixXcd no_loss;                      // P_C on the n-photon sector
    std::vector<Eigen::MatrixXcd> one_loss;        // R_mu, code_basis.size x error_basis.size
    std::vector<StateVector> error_states;         // |e_mu,L>, |e_mu,H> ordered (mu, logical)
    Eigen::VectorXd channel_weights;               // eigenvalues g_mu of G
};

RecoveryMap build_recovery(const CodePair& code);

/// The induced channel on the logical qubit: loss (optionally followed by
/// recovery) sandwiched between the encode isometry and its adjoint.
/// Components leaving the code space are dropped and tracked as weight.
struct LogicalChannel {
    std::vector<Eigen::Matrix2cd> kraus;
    double leakage_weight = 0.0;  // 1 - tr(sum M^dag M)/2
};

LogicalChannel logical_channel(const CodePair& code, double gamma, bool with_recovery);

/// F_e = sum_k |tr(M_k)/2|^2; equals 1 iff the logical channel is the identity.
double entanglement_fidelity(const LogicalChannel& channel);

/// Minimum pure-state output fidelity over a deterministic Fibonacci-lattice
/// mesh on the Bloch sphere.
double worst_case_fidelity(const LogicalChannel& channel, int mesh_points = 200);

struct FidelityPoint {
    double gamma = 0.0;
    double one_minus_f = 0.0;
    double leakage_weight = 0.0;
};

struct FidelityCurve {
    std::vector<FidelityPoint> points;
    bool corrected = false;
};

/// Infidelity versus damping; gammas must lie strictly inside (0, 1).
/// With worst_case the figure of merit is the mesh-minimized pure-state
/// fidelity instead of the entanglement fidelity.
FidelityCurve fidelity_curve(const CodePair& code, std::span<const double> gammas,
                             bool with_recovery, bool worst_case = false);

}  // namespace plc
