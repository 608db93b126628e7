#include "plc/codes.hpp"

#include <cmath>
#include <stdexcept>

namespace plc {

CodePair::CodePair(StateVector l, StateVector h, double tol)
    : l_(std::move(l)), h_(std::move(h)), tol_(tol) {
    if (tol_ <= 0.0) throw std::invalid_argument("CodePair: tolerance must be positive");

    std::string failures;
    if (!same_sector(l_.basis(), h_.basis())) {
        failures += " states live on different sectors;";
    } else {
        if (std::abs(l_.norm() - 1.0) > tol_) failures += " |L| != 1;";
        if (std::abs(h_.norm() - 1.0) > tol_) failures += " |H| != 1;";
        if (std::abs(inner(l_, h_)) > tol_) failures += " <L|H> != 0;";
    }
    if (!failures.empty())
        throw std::invalid_argument("CodePair invariant violated:" + failures);
}

Eigen::MatrixXcd CodePair::projector() const {
    return l_.amp() * l_.amp().adjoint() + h_.amp() * h_.amp().adjoint();
}

std::vector<StateVector> loss_states(const CodePair& code) {
    std::vector<StateVector> out;
    out.reserve(2 * static_cast<std::size_t>(code.basis().modes()));
    for (int j = 0; j < code.basis().modes(); ++j) {
        out.push_back(annihilate(code.L(), j));
        out.push_back(annihilate(code.H(), j));
    }
    return out;
}

VerificationReport verify_code(const CodePair& code, std::optional<double> tol) {
    VerificationReport report;
    report.tolerance = tol.value_or(code.tolerance());

    const int n_modes = code.basis().modes();
    const std::vector<StateVector> states = loss_states(code);
    const auto a_l = [&](int j) -> const StateVector& {
        return states[2 * static_cast<std::size_t>(j)];
    };
    const auto a_h = [&](int j) -> const StateVector& {
        return states[2 * static_cast<std::size_t>(j) + 1];
    };

    // <X| a_i^dag a_j |Y> = <a_i X, a_j Y>
    Eigen::MatrixXcd g_l(n_modes, n_modes);
    Eigen::MatrixXcd g_h(n_modes, n_modes);
    for (int i = 0; i < n_modes; ++i) {
        for (int j = 0; j < n_modes; ++j) {
            g_l(i, j) = inner(a_l(i), a_l(j));
            g_h(i, j) = inner(a_h(i), a_h(j));
            const double off = std::abs(inner(a_h(i), a_l(j)));
            report.max_offdiag_violation = std::max(report.max_offdiag_violation, off);
        }
    }
    report.max_diag_violation = (g_h - g_l).cwiseAbs().maxCoeff();
    report.correctable = report.max_offdiag_violation < report.tolerance &&
                         report.max_diag_violation < report.tolerance;

    // Gram of the loss states in (mode, logical) order against G (x) I_2.
    const std::size_t dim = states.size();
    double gram_violation = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const Complex gram = inner(states[r], states[c]);
            const Complex want = (r % 2 == c % 2)
                                     ? g_l(static_cast<int>(r / 2), static_cast<int>(c / 2))
                                     : Complex(0.0, 0.0);
            gram_violation = std::max(gram_violation, std::abs(gram - want));
        }
    }
    report.gram_structure_violation = gram_violation;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (g_l + g_l.adjoint()));
    report.psd_violation = std::max(0.0, -es.eigenvalues().minCoeff());

    if (report.correctable) report.g = g_l;
    return report;
}

CodePair transform_code(const CodePair& code, const ModeUnitary& gamma) {
    const FockOperator r = lift_unitary(gamma, code.basis_ptr());
    return CodePair(apply(r, code.L()), apply(r, code.H()), code.tolerance());
}

CodePair builtin_code(const std::string& name, double tol) {
    if (name == "fourphoton") {
        auto basis = FockBasis::make(2, 4);
        StateVector l(basis);
        const double r = 1.0 / std::sqrt(2.0);
        l.amp()[static_cast<Eigen::Index>(basis->index({0, 4}))] = r;
        l.amp()[static_cast<Eigen::Index>(basis->index({4, 0}))] = r;
        StateVector h = basis_state(basis, {2, 2});
        return CodePair(std::move(l), std::move(h), tol);
    }
    if (name == "threephoton") {
        auto basis = FockBasis::make(3, 3);
        StateVector l(basis);
        const double r = 1.0 / std::sqrt(3.0);
        l.amp()[static_cast<Eigen::Index>(basis->index({0, 0, 3}))] = r;
        l.amp()[static_cast<Eigen::Index>(basis->index({0, 3, 0}))] = r;
        l.amp()[static_cast<Eigen::Index>(basis->index({3, 0, 0}))] = r;
        StateVector h = basis_state(basis, {1, 1, 1});
        return CodePair(std::move(l), std::move(h), tol);
    }
    throw std::invalid_argument("unknown builtin code: " + name);
}

}  // namespace plc
