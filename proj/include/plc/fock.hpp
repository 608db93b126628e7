#pragma once

#include <complex>
#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>

namespace plc {

using Complex = std::complex<double>;

// Photon count per mode. Modes are indexed from 0 throughout.
using Occupation = std::vector<int>;

inline constexpr double kDefaultTol = 1e-10;

/// All occupation vectors with a fixed total photon number over N modes,
/// ordered reverse-lexicographically (|40> before |31> before |22> ...).
/// The ordering is part of the contract: indices are stable across runs.
class FockBasis {
  public:
    static constexpr std::size_t kMaxSize = 1'000'000;

    /// C(photons + modes - 1, modes - 1). Throws std::runtime_error when the
    /// sector would exceed kMaxSize, std::invalid_argument on bad arguments.
    static std::size_t dimension(int modes, int photons);

    static std::shared_ptr<const FockBasis> make(int modes, int photons);

    int modes() const { return modes_; }
    int photons() const { return photons_; }
    std::size_t size() const { return elements_.size(); }

    const Occupation& at(std::size_t i) const;
    std::size_t index(const Occupation& occ) const;
    bool contains(const Occupation& occ) const;

  private:
    FockBasis(int modes, int photons);

    int modes_;
    int photons_;
    std::vector<Occupation> elements_;
    std::map<Occupation, std::size_t> index_;
};

/// True when both bases describe the same sector (same modes and photons);
/// the canonical ordering then makes them element-wise identical.
bool same_sector(const FockBasis& a, const FockBasis& b);

/// Complex amplitude vector over a FockBasis. Immutable basis reference,
/// value-semantic amplitudes; all operations on states are pure functions.
class StateVector {
  public:
    explicit StateVector(std::shared_ptr<const FockBasis> basis);
    StateVector(std::shared_ptr<const FockBasis> basis, Eigen::VectorXcd amp);

    const FockBasis& basis() const { return *basis_; }
    const std::shared_ptr<const FockBasis>& basis_ptr() const { return basis_; }

    const Eigen::VectorXcd& amp() const { return amp_; }
    Eigen::VectorXcd& amp() { return amp_; }

    Complex coeff(const Occupation& occ) const;
    double norm() const { return amp_.norm(); }

    StateVector normalized() const;

  private:
    std::shared_ptr<const FockBasis> basis_;
    Eigen::VectorXcd amp_;
};

/// Unit state |occ> in the given basis.
StateVector basis_state(std::shared_ptr<const FockBasis> basis, const Occupation& occ);

/// a_mode |psi>: each |..n..> maps to sqrt(n) |..n-1..>. Result lives on the
/// (modes, photons-1) basis. Throws on the vacuum sector ("no photons to
/// annihilate") and on a mode index out of range.
StateVector annihilate(const StateVector& psi, int mode);

/// a_mode^dagger |psi>: |..n..> -> sqrt(n+1) |..n+1..> on the (modes, photons+1) basis.
StateVector create(const StateVector& psi, int mode);

/// <a|b>, conjugate-linear in the first argument. Throws on sector mismatch.
Complex inner(const StateVector& a, const StateVector& b);

}  // namespace plc
