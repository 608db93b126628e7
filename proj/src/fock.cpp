#include "plc/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace plc {

std::size_t FockBasis::dimension(int modes, int photons) {
    if (modes < 1) throw std::invalid_argument("FockBasis: modes must be >= 1");
    if (photons < 0) throw std::invalid_argument("FockBasis: photons must be >= 0");
    // C(photons + modes - 1, modes - 1), bailing out as soon as kMaxSize is passed.
    unsigned long long result = 1;
    const auto n = static_cast<unsigned long long>(photons);
    for (unsigned long long i = 1; i + 1 <= static_cast<unsigned long long>(modes); ++i) {
        if (result > std::numeric_limits<unsigned long long>::max() / (n + i))
            throw std::runtime_error("FockBasis: sector dimension exceeds capacity (> 1e6 states)");
        result = result * (n + i) / i;  // exact: product of i consecutive integers over i!
        if (result > kMaxSize)
            throw std::runtime_error("FockBasis: sector dimension exceeds capacity (> 1e6 states)");
    }
    return static_cast<std::size_t>(result);
}

FockBasis::FockBasis(int modes, int photons) : modes_(modes), photons_(photons) {
    const std::size_t dim = dimension(modes, photons);
    elements_.reserve(dim);

    // Reverse-lexicographic enumeration: start with all photons in mode 0 and
    // repeatedly move one photon from the rightmost non-final occupied mode.
    Occupation occ(static_cast<std::size_t>(modes), 0);
    occ[0] = photons;
    for (;;) {
        index_.emplace(occ, elements_.size());
        elements_.push_back(occ);
        int j = -1;
        for (int i = modes - 2; i >= 0; --i) {
            if (occ[static_cast<std::size_t>(i)] > 0) {
                j = i;
                break;
            }
        }
        if (j < 0) break;
        int rest = 1;
        for (int i = j + 1; i < modes; ++i) {
            rest += occ[static_cast<std::size_t>(i)];
            occ[static_cast<std::size_t>(i)] = 0;
        }
        occ[static_cast<std::size_t>(j)] -= 1;
        occ[static_cast<std::size_t>(j) + 1] = rest;
    }
}

std::shared_ptr<const FockBasis> FockBasis::make(int modes, int photons) {
    return std::shared_ptr<const FockBasis>(new FockBasis(modes, photons));
}

const Occupation& FockBasis::at(std::size_t i) const {
    if (i >= elements_.size()) throw std::invalid_argument("FockBasis: element index out of range");
    return elements_[i];
}

std::size_t FockBasis::index(const Occupation& occ) const {
    auto it = index_.find(occ);
    if (it == index_.end())
        throw std::invalid_argument("FockBasis: occupation vector not in this basis");
    return it->second;
}

bool FockBasis::contains(const Occupation& occ) const { return index_.count(occ) > 0; }

bool same_sector(const FockBasis& a, const FockBasis& b) {
    return a.modes() == b.modes() && a.photons() == b.photons();
}

StateVector::StateVector(std::shared_ptr<const FockBasis> basis)
    : basis_(std::move(basis)),
      amp_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_->size()))) {}

StateVector::StateVector(std::shared_ptr<const FockBasis> basis, Eigen::VectorXcd amp)
    : basis_(std::move(basis)), amp_(std::move(amp)) {
    if (amp_.size() != static_cast<Eigen::Index>(basis_->size()))
        throw std::invalid_argument("StateVector: amplitude length does not match basis size");
}

Complex StateVector::coeff(const Occupation& occ) const {
    return amp_[static_cast<Eigen::Index>(basis_->index(occ))];
}

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("StateVector: cannot normalize the zero state");
    return StateVector(basis_, amp_ / n);
}

StateVector basis_state(std::shared_ptr<const FockBasis> basis, const Occupation& occ) {
    StateVector s(basis);
    s.amp()[static_cast<Eigen::Index>(basis->index(occ))] = 1.0;
    return s;
}

StateVector annihilate(const StateVector& psi, int mode) {
    const FockBasis& b = psi.basis();
    if (mode < 0 || mode >= b.modes())
        throw std::invalid_argument("annihilate: mode index out of range");
    if (b.photons() == 0) throw std::invalid_argument("annihilate: no photons to annihilate");

    auto target = FockBasis::make(b.modes(), b.photons() - 1);
    StateVector out(target);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Occupation& occ = b.at(i);
        const int n = occ[static_cast<std::size_t>(mode)];
        if (n == 0) continue;
        Occupation lowered = occ;
        lowered[static_cast<std::size_t>(mode)] = n - 1;
        out.amp()[static_cast<Eigen::Index>(target->index(lowered))] +=
            std::sqrt(static_cast<double>(n)) * psi.amp()[static_cast<Eigen::Index>(i)];
    }
    return out;
}

StateVector create(const StateVector& psi, int mode) {
    const FockBasis& b = psi.basis();
    if (mode < 0 || mode >= b.modes())
        throw std::invalid_argument("create: mode index out of range");

    auto target = FockBasis::make(b.modes(), b.photons() + 1);
    StateVector out(target);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Occupation& occ = b.at(i);
        Occupation raised = occ;
        const int n = occ[static_cast<std::size_t>(mode)];
        raised[static_cast<std::size_t>(mode)] = n + 1;
        out.amp()[static_cast<Eigen::Index>(target->index(raised))] +=
            std::sqrt(static_cast<double>(n + 1)) * psi.amp()[static_cast<Eigen::Index>(i)];
    }
    return out;
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (!same_sector(a.basis(), b.basis()))
        throw std::invalid_argument("inner: states live on different bases");
    return a.amp().dot(b.amp());  // Eigen dot conjugates the first argument
}

}  // namespace plc
