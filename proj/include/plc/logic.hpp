#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "plc/codes.hpp"
#include "plc/linopt.hpp"

namespace plc {

/// Restriction of a lifted network to the code block, in the ordered basis
/// (|L>, |H>). Unitary exactly when leakage vanishes.
struct LogicalGate {
    Eigen::Matrix2cd u;
    double leakage = 0.0;
};

struct BlochPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct GroupClosure {
    std::vector<LogicalGate> gates;        // deduplicated modulo global phase
    std::vector<std::string> words;        // shortest generator word per gate ("e" = identity)
    std::vector<BlochPoint> orbit;         // distinct Bloch images of |H>
    std::vector<std::string> orbit_words;  // word of a gate reaching each orbit point
    bool saturated = false;

    std::size_t order() const { return gates.size(); }
};

class LeakyGeneratorError : public std::runtime_error {
  public:
    LeakyGeneratorError(std::size_t index, double leakage);
    std::size_t index;
    double leakage;
};

/// ||(I - P_C) R(Gamma) P_C||, the largest singular value of the off-block;
/// zero exactly when the network preserves the code subspace.
double leakage_norm(const CodePair& code, const ModeUnitary& gamma);

LogicalGate extract_gate(const CodePair& code, const ModeUnitary& gamma);

/// Bloch coordinates of alpha|L> + beta|H>; |L> is the north pole (0,0,1).
BlochPoint bloch(Complex alpha, Complex beta, double tol = kDefaultTol);

/// Phase-invariant gate distance 1 - |tr(U^dag V)|/2; zero iff U = e^{i t} V.
double gate_distance(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v);

/// Breadth-first closure of the logical gates induced by the generators,
/// deduplicated modulo global phase. Deterministic: generators are applied
/// left-to-right in the given order, ties in word length broken by generator
/// index. A closure that hits max_elems is returned with saturated = false.
GroupClosure group_closure(const CodePair& code, const std::vector<ModeUnitary>& generators,
                           std::size_t max_elems = 10000, double tol = 1e-8);

struct ObstructionReport {
    double lambda_scalar = 0.0;        // Tr(Lambda G^T)
    double projection_residual = 0.0;  // max |P R(Lambda) P - lambda P|
    double first_order_leakage = 0.0;  // ||(I - P) R(Lambda) P||
};

/// The no-go mechanism for one Hermitian generator: the code block of
/// R(Lambda) is always the scalar Tr(Lambda G^T); any non-trivial action
/// must therefore leak at first order.
ObstructionReport obstruction_check(const CodePair& code, const HermitianGenerator& lambda);

/// Verifies R(exp(-i s Lambda)) P_C = e^{-i s lambda} P_C entry-wise at every
/// grid point. Precondition: the generator is leak-free at first order.
bool phase_theorem_check(const CodePair& code, const HermitianGenerator& lambda,
                         std::span<const double> s_grid, double leak_tol = kDefaultTol,
                         double check_tol = 1e-9);

}  // namespace plc
