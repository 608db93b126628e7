#pragma once

#include <memory>
#include <string>

#include <Eigen/Dense>

#include "plc/fock.hpp"

namespace plc {

/// N x N unitary describing a passive linear-optics network; unitarity is
/// validated at construction (max entry of |G^dag G - I| below tol).
class ModeUnitary {
  public:
    explicit ModeUnitary(Eigen::MatrixXcd mat, double tol = kDefaultTol);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXcd& mat() const { return mat_; }

  private:
    Eigen::MatrixXcd mat_;
};

/// N x N Hermitian matrix, the infinitesimal generator of a one-parameter
/// network family Gamma_s = exp(-i s Lambda).
class HermitianGenerator {
  public:
    explicit HermitianGenerator(Eigen::MatrixXcd mat, double tol = kDefaultTol);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXcd& mat() const { return mat_; }

  private:
    Eigen::MatrixXcd mat_;
};

/// Dense operator acting within one fixed-photon-number sector.
struct FockOperator {
    std::shared_ptr<const FockBasis> basis;
    Eigen::MatrixXcd mat;
};

/// Permanent of a square matrix by Ryser's formula with Gray-code subset
/// iteration, O(2^k k). perm of the empty matrix is 1. k is capped at 20.
Complex permanent(const Eigen::MatrixXcd& a);

/// Multiphoton representation R(Gamma) on the given sector:
///   <m|R|n> = perm(Gamma[m,n]) / sqrt(prod_i m_i! prod_j n_j!)
/// where Gamma[m,n] repeats column j of Gamma n_j times (input, left to
/// right) and row i m_i times (output, top to bottom).
FockOperator lift_unitary(const ModeUnitary& gamma, std::shared_ptr<const FockBasis> basis);

/// R(Lambda) = sum_ij Lambda_ij a_i^dag a_j on the sector, assembled from the
/// ladder actions; Hermitian whenever Lambda is.
FockOperator lift_generator(const HermitianGenerator& lambda,
                            std::shared_ptr<const FockBasis> basis);

/// Independent route to R(Gamma): principal log of Gamma (phases in (-pi, pi]),
/// then exp(-i R(Lambda)) via Hermitian eigendecomposition. Agrees with
/// lift_unitary including global phase, except when Gamma has an eigenvalue
/// at -1 where the log branch is genuinely ambiguous.
FockOperator lift_unitary_via_exp(const ModeUnitary& gamma,
                                  std::shared_ptr<const FockBasis> basis);

/// exp(-i s H) for Hermitian H, by eigendecomposition.
Eigen::MatrixXcd exp_hermitian(const Eigen::MatrixXcd& h, double s);

StateVector apply(const FockOperator& op, const StateVector& psi);

/// Named network matrices: "bs50", "phase2:pi/2", "tritter3", "phase3:2pi/3",
/// and "identityN" for any N >= 1. The phase builtins accept a general angle
/// expression ("pi/2", "2pi/3", "-0.25", ...) applied to the last mode.
ModeUnitary builtin_unitary(const std::string& name);

}  // namespace plc
