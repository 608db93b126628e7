#include "plc/loss.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plc {

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

LossChannel build_channel(std::shared_ptr<const FockBasis> basis, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("build_channel: gamma must lie in [0, 1]");

    LossChannel ch;
    ch.gamma = gamma;
    ch.basis = basis;

    const int n_modes = basis->modes();
    const int n = basis->photons();

    // Loss vectors grouped by total photons lost; each group reuses the
    // sector enumeration so the ordering is canonical.
    for (int lost = 0; lost <= n; ++lost) {
        const auto loss_basis = FockBasis::make(n_modes, lost);
        const auto target = FockBasis::make(n_modes, n - lost);
        for (std::size_t li = 0; li < loss_basis->size(); ++li) {
            const Occupation& k = loss_basis->at(li);
            Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(
                static_cast<Eigen::Index>(target->size()), static_cast<Eigen::Index>(basis->size()));
            for (std::size_t vi = 0; vi < basis->size(); ++vi) {
                const Occupation& v = basis->at(vi);
                double coeff = 1.0;
                bool feasible = true;
                for (int m = 0; m < n_modes; ++m) {
                    const int vm = v[static_cast<std::size_t>(m)];
                    const int km = k[static_cast<std::size_t>(m)];
                    if (km > vm) {
                        feasible = false;
                        break;
                    }
                    coeff *= binomial(vm, km) * std::pow(1.0 - gamma, vm - km) *
                             std::pow(gamma, km);
                }
                if (!feasible || coeff == 0.0) continue;
                Occupation w = v;
                for (int m = 0; m < n_modes; ++m) w[static_cast<std::size_t>(m)] -= k[static_cast<std::size_t>(m)];
                a(static_cast<Eigen::Index>(target->index(w)), static_cast<Eigen::Index>(vi)) =
                    std::sqrt(coeff);
            }
            ch.loss_vectors.push_back(k);
            ch.kraus.push_back(std::move(a));
            ch.targets.push_back(target);
        }
    }
    return ch;
}

RecoveryMap build_recovery(const CodePair& code) {
    const VerificationReport rep = verify_code(code);
    if (!rep.correctable)
        throw std::invalid_argument("build_recovery: code fails the correctability conditions");

    const Eigen::MatrixXcd& g = *rep.g;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
    const Eigen::VectorXd weights = es.eigenvalues();
    const Eigen::MatrixXcd u = es.eigenvectors();
    if (weights.minCoeff() <= code.tolerance() * std::max(1.0, weights.maxCoeff()))
        throw std::runtime_error("build_recovery: recovery undefined for zero-weight channel");

    const int n_modes = code.basis().modes();
    const std::vector<StateVector> states = loss_states(code);
    const auto error_basis = states.front().basis_ptr();

    RecoveryMap rec;
    rec.code_basis = code.basis_ptr();
    rec.error_basis = error_basis;
    rec.no_loss = code.projector();
    rec.channel_weights = weights;

    // Whitened error channels: |e_mu,X> = sum_j U_{j mu} a_j |X> / sqrt(g_mu)
    // form an orthonormal family by the Gram = G (x) I_2 structure.
    for (int mu = 0; mu < n_modes; ++mu) {
        const double scale = 1.0 / std::sqrt(weights[mu]);
        StateVector e_l(error_basis);
        StateVector e_h(error_basis);
        for (int j = 0; j < n_modes; ++j) {
            e_l.amp() += scale * u(j, mu) * states[2 * static_cast<std::size_t>(j)].amp();
            e_h.amp() += scale * u(j, mu) * states[2 * static_cast<std::size_t>(j) + 1].amp();
        }
        rec.one_loss.push_back(code.L().amp() * e_l.amp().adjoint() +
                               code.H().amp() * e_h.amp().adjoint());
        rec.error_states.push_back(std::move(e_l));
        rec.error_states.push_back(std::move(e_h));
    }
    return rec;
}

LogicalChannel logical_channel(const CodePair& code, double gamma, bool with_recovery) {
    const LossChannel channel = build_channel(code.basis_ptr(), gamma);

    Eigen::MatrixXcd encode(static_cast<Eigen::Index>(code.basis().size()), 2);
    encode.col(0) = code.L().amp();
    encode.col(1) = code.H().amp();

    LogicalChannel out;
    RecoveryMap rec;
    if (with_recovery) rec = build_recovery(code);

    for (std::size_t i = 0; i < channel.kraus.size(); ++i) {
        int lost = 0;
        for (int km : channel.loss_vectors[i]) lost += km;
        if (lost == 0) {
            const Eigen::MatrixXcd& a = channel.kraus[i];
            if (with_recovery)
                out.kraus.emplace_back(encode.adjoint() * rec.no_loss * a * encode);
            else
                out.kraus.emplace_back(encode.adjoint() * a * encode);
        } else if (lost == 1 && with_recovery) {
            for (const Eigen::MatrixXcd& r_mu : rec.one_loss)
                out.kraus.emplace_back(encode.adjoint() * r_mu * channel.kraus[i] * encode);
        }
        // lost >= 2 (or any loss without recovery) leaves the code space.
    }

    Eigen::Matrix2cd total = Eigen::Matrix2cd::Zero();
    for (const Eigen::Matrix2cd& m : out.kraus) total += m.adjoint() * m;
    out.leakage_weight = 1.0 - 0.5 * total.trace().real();
    return out;
}

double entanglement_fidelity(const LogicalChannel& channel) {
    double f = 0.0;
    for (const Eigen::Matrix2cd& m : channel.kraus) f += std::norm(0.5 * m.trace());
    return f;
}

double worst_case_fidelity(const LogicalChannel& channel, int mesh_points) {
    if (mesh_points < 1) throw std::invalid_argument("worst_case_fidelity: empty mesh");
    double worst = 1.0;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < mesh_points; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / mesh_points;
        const double theta = std::acos(z);
        const double phi = golden * i;
        Eigen::Vector2cd psi;
        psi << std::cos(0.5 * theta),
            std::exp(Complex(0.0, phi)) * std::sin(0.5 * theta);
        double f = 0.0;
        for (const Eigen::Matrix2cd& m : channel.kraus) f += std::norm(psi.dot(m * psi));
        worst = std::min(worst, f);
    }
    return worst;
}

FidelityCurve fidelity_curve(const CodePair& code, std::span<const double> gammas,
                             bool with_recovery, bool worst_case) {
    FidelityCurve curve;
    curve.corrected = with_recovery;
    for (const double gamma : gammas) {
        if (!(gamma > 0.0 && gamma < 1.0))
            throw std::invalid_argument("fidelity_curve: gamma must lie in (0, 1)");
        const LogicalChannel lc = logical_channel(code, gamma, with_recovery);
        const double f = worst_case ? worst_case_fidelity(lc) : entanglement_fidelity(lc);
        curve.points.push_back(
            FidelityPoint{gamma, std::max(0.0, 1.0 - f), lc.leakage_weight});
    }
    return curve;
}

}  // namespace plc
