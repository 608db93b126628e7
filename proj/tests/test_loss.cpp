#include <doctest.h>

#include <cmath>

#include "plc/loss.hpp"

using namespace plc;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double completeness_defect(const LossChannel& ch) {
    const auto d = static_cast<Eigen::Index>(ch.basis->size());
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    for (const Eigen::MatrixXcd& a : ch.kraus) sum += a.adjoint() * a;
    return max_abs(sum - Eigen::MatrixXcd::Identity(d, d));
}

int total_lost(const Occupation& k) {
    int t = 0;
    for (int v : k) t += v;
    return t;
}

// exact infidelity of the recovered (resp. bare) logical channel for any
// correctable code with nonsingular G: see the whitened-recovery algebra
double corrected_infidelity(int n, double g) {
    return 1.0 - std::pow(1.0 - g, n - 1) * (1.0 + (n - 1) * g);
}
double uncorrected_infidelity(int n, double g) { return 1.0 - std::pow(1.0 - g, n); }

CodePair singular_g_code() {
    auto basis = FockBasis::make(3, 4);
    StateVector l(basis);
    const double r = 1.0 / std::sqrt(2.0);
    l.amp()[static_cast<Eigen::Index>(basis->index({0, 4, 0}))] = r;
    l.amp()[static_cast<Eigen::Index>(basis->index({4, 0, 0}))] = r;
    return CodePair(std::move(l), basis_state(basis, {2, 2, 0}));
}

}  // namespace

TEST_CASE("channel structure at the gamma extremes") {
    auto basis = FockBasis::make(2, 4);

    const LossChannel lossless = build_channel(basis, 0.0);
    for (std::size_t i = 0; i < lossless.kraus.size(); ++i) {
        if (total_lost(lossless.loss_vectors[i]) == 0)
            CHECK(max_abs(lossless.kraus[i] - Eigen::MatrixXcd::Identity(5, 5)) == 0.0);
        else
            CHECK(max_abs(lossless.kraus[i]) == 0.0);
    }
    CHECK(completeness_defect(lossless) < 1e-15);

    const LossChannel total = build_channel(basis, 1.0);
    for (std::size_t i = 0; i < total.kraus.size(); ++i) {
        if (total_lost(total.loss_vectors[i]) < 4) CHECK(max_abs(total.kraus[i]) == 0.0);
    }
    CHECK(completeness_defect(total) < 1e-15);

    CHECK_THROWS_AS(build_channel(basis, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(build_channel(basis, 1.1), std::invalid_argument);
}

TEST_CASE("channel completeness across gammas and sectors") {
    for (const auto& [modes, photons] : {std::pair{2, 4}, std::pair{3, 3}}) {
        auto basis = FockBasis::make(modes, photons);
        for (const double gamma : {0.001, 0.01, 0.1, 0.35}) {
            CHECK(completeness_defect(build_channel(basis, gamma)) < 1e-12);
        }
    }
}

TEST_CASE("no-loss Kraus is a scalar on the fixed-photon-number sector") {
    auto basis = FockBasis::make(2, 4);
    const double gamma = 0.07;
    const LossChannel ch = build_channel(basis, gamma);
    const double scalar = std::pow(1.0 - gamma, 2.0);  // (1-gamma)^{n/2}
    CHECK(max_abs(ch.kraus[0] - scalar * Eigen::MatrixXcd::Identity(5, 5)) < 1e-15);
    CHECK(total_lost(ch.loss_vectors[0]) == 0);
}

TEST_CASE("recovery construction for the fourphoton code") {
    const CodePair code = builtin_code("fourphoton");
    const RecoveryMap rec = build_recovery(code);

    REQUIRE(rec.one_loss.size() == 2);
    REQUIRE(rec.error_states.size() == 4);
    CHECK(rec.channel_weights.minCoeff() == doctest::Approx(2.0));

    // G = 2I diagonalizes trivially: |e_0,L> = a_0|L>/sqrt2 = |30>
    CHECK(std::abs(rec.error_states[0].coeff({3, 0}) - 1.0) < 1e-12);
    CHECK(std::abs(rec.error_states[1].coeff({1, 2}) - 1.0) < 1e-12);  // a_0|22>/sqrt2

    // orthonormal family
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rec.error_states[i].norm() == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(std::abs(inner(rec.error_states[i], rec.error_states[j])) < 1e-12);
    }

    // sum R_mu^dag R_mu equals the projector onto the span of the error states
    const auto d = static_cast<Eigen::Index>(rec.error_basis->size());
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    for (const Eigen::MatrixXcd& r : rec.one_loss) sum += r.adjoint() * r;
    Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(d, d);
    for (const StateVector& e : rec.error_states)
        projector += e.amp() * e.amp().adjoint();
    CHECK(max_abs(sum - projector) < 1e-12);

    // each R_mu is a partial isometry onto the code space
    for (const Eigen::MatrixXcd& r : rec.one_loss) {
        const Eigen::MatrixXcd gram = r * r.adjoint();  // on the code sector
        CHECK(max_abs(gram - code.projector()) < 1e-12);
    }
}

TEST_CASE("recovery for the threephoton code has six unit channels") {
    const RecoveryMap rec = build_recovery(builtin_code("threephoton"));
    REQUIRE(rec.error_states.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(rec.error_states[i].norm() == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t j = i + 1; j < 6; ++j)
            CHECK(std::abs(inner(rec.error_states[i], rec.error_states[j])) < 1e-12);
    }
}

TEST_CASE("recovery error paths") {
    CHECK_THROWS_WITH_AS(build_recovery(singular_g_code()),
                         doctest::Contains("zero-weight channel"), std::runtime_error);
    CHECK_THROWS_AS(build_recovery(CodePair(basis_state(FockBasis::make(2, 1), {1, 0}),
                                            basis_state(FockBasis::make(2, 1), {0, 1}))),
                    std::invalid_argument);
}

TEST_CASE("no damping means the identity logical channel") {
    const CodePair code = builtin_code("fourphoton");

    const LogicalChannel bare = logical_channel(code, 0.0, false);
    REQUIRE(bare.kraus.size() == 1);
    CHECK(max_abs(bare.kraus[0] - Eigen::Matrix2cd::Identity()) < 1e-14);
    CHECK(bare.leakage_weight < 1e-14);

    const LogicalChannel recovered = logical_channel(code, 0.0, true);
    CHECK(entanglement_fidelity(recovered) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(recovered.leakage_weight < 1e-14);
}

TEST_CASE("without recovery the surviving Kraus is (1-gamma)^{n/2} I") {
    const CodePair code = builtin_code("fourphoton");
    const double gamma = 0.03;
    const LogicalChannel bare = logical_channel(code, gamma, false);
    REQUIRE(bare.kraus.size() == 1);
    CHECK(max_abs(bare.kraus[0] - std::pow(1.0 - gamma, 2.0) * Eigen::Matrix2cd::Identity()) <
          1e-14);
    CHECK(bare.leakage_weight == doctest::Approx(1.0 - std::pow(1.0 - gamma, 4)).epsilon(1e-12));
}

TEST_CASE("recovered channel is trace-decreasing by the >=2-loss weight only") {
    const CodePair code = builtin_code("fourphoton");
    const double gamma = 0.05;
    const LogicalChannel rec = logical_channel(code, gamma, true);
    REQUIRE(rec.kraus.size() == 1 + 4);  // no-loss plus (mu, j) pairs

    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
    for (const Eigen::Matrix2cd& m : rec.kraus) sum += m.adjoint() * m;
    const double c = 0.5 * sum.trace().real();
    CHECK(max_abs(sum - c * Eigen::Matrix2cd::Identity()) < 1e-12);
    CHECK(c <= 1.0 + 1e-12);

    const double expected_weight = 1.0 - std::pow(1.0 - gamma, 3) * (1.0 + 3.0 * gamma);
    CHECK(rec.leakage_weight == doctest::Approx(expected_weight).epsilon(1e-10));
}

TEST_CASE("fidelity curves match the closed-form expressions") {
    for (const char* name : {"fourphoton", "threephoton"}) {
        const CodePair code = builtin_code(name);
        const int n = code.basis().photons();
        const std::vector<double> gammas{1e-4, 1e-3, 1e-2, 0.1};

        const FidelityCurve corrected = fidelity_curve(code, gammas, true);
        const FidelityCurve bare = fidelity_curve(code, gammas, false);
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            CHECK(corrected.points[i].one_minus_f ==
                  doctest::Approx(corrected_infidelity(n, gammas[i])).epsilon(1e-9));
            CHECK(bare.points[i].one_minus_f ==
                  doctest::Approx(uncorrected_infidelity(n, gammas[i])).epsilon(1e-9));
        }
    }
}

TEST_CASE("log-log slopes: second order with recovery, first order without") {
    for (const char* name : {"fourphoton", "threephoton"}) {
        const CodePair code = builtin_code(name);
        const std::vector<double> gammas{1e-3, 1e-2};

        const FidelityCurve corrected = fidelity_curve(code, gammas, true);
        const double slope2 = std::log10(corrected.points[1].one_minus_f /
                                         corrected.points[0].one_minus_f);
        CHECK(slope2 == doctest::Approx(2.0).epsilon(0.05));

        const FidelityCurve bare = fidelity_curve(code, gammas, false);
        const double slope1 = std::log10(bare.points[1].one_minus_f / bare.points[0].one_minus_f);
        CHECK(slope1 == doctest::Approx(1.0).epsilon(0.05));
    }
}

TEST_CASE("suppression ratio stays bounded towards gamma -> 0") {
    const CodePair code = builtin_code("fourphoton");
    const std::vector<double> gammas{1e-4, 1e-3, 1e-2};
    const FidelityCurve curve = fidelity_curve(code, gammas, true);
    std::vector<double> ratio;
    for (const FidelityPoint& p : curve.points) ratio.push_back(p.one_minus_f / (p.gamma * p.gamma));
    CHECK(std::abs(ratio[1] / ratio[0] - 1.0) < 0.2);
    CHECK(std::abs(ratio[2] / ratio[1] - 1.0) < 0.2);
}

TEST_CASE("weight outside the no-loss and one-loss syndromes is at most C(n,2) gamma^2") {
    const CodePair code = builtin_code("fourphoton");
    for (const double gamma : {0.001, 0.01, 0.1}) {
        const LogicalChannel rec = logical_channel(code, gamma, true);
        CHECK(rec.leakage_weight <= 6.0 * gamma * gamma + 1e-12);
    }
    const CodePair three = builtin_code("threephoton");
    for (const double gamma : {0.001, 0.01, 0.1}) {
        const LogicalChannel rec = logical_channel(three, gamma, true);
        CHECK(rec.leakage_weight <= 3.0 * gamma * gamma + 1e-12);
    }
}

TEST_CASE("worst-case figure coincides with F_e when all Kraus are scalar") {
    const CodePair code = builtin_code("fourphoton");
    const LogicalChannel rec = logical_channel(code, 0.02, true);
    CHECK(worst_case_fidelity(rec) == doctest::Approx(entanglement_fidelity(rec)).epsilon(1e-12));
    CHECK_THROWS_AS(worst_case_fidelity(rec, 0), std::invalid_argument);
}

TEST_CASE("fidelity curve rejects gammas outside (0,1)") {
    const CodePair code = builtin_code("fourphoton");
    const std::vector<double> zero{0.0};
    CHECK_THROWS_AS(fidelity_curve(code, zero, true), std::invalid_argument);
    const std::vector<double> one{1.0};
    CHECK_THROWS_AS(fidelity_curve(code, one, false), std::invalid_argument);
    const FidelityCurve empty = fidelity_curve(code, std::vector<double>{}, true);
    CHECK(empty.points.empty());
}
