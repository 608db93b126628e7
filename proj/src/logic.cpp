#include "plc/logic.hpp"

#include <cmath>
#include <deque>

namespace plc {

namespace {

// Largest singular value of (I - P) R P from its action on the two code
// columns; the off-block has rank <= 2.
double off_block_norm(const CodePair& code, const Eigen::MatrixXcd& r) {
    const Eigen::MatrixXcd p = code.projector();
    const Eigen::Index d = r.rows();
    Eigen::MatrixXcd cols(d, 2);
    cols.col(0) = r * code.L().amp();
    cols.col(1) = r * code.H().amp();
    cols -= p * cols;
    return cols.jacobiSvd().singularValues()[0];
}

Eigen::Matrix2cd code_block(const CodePair& code, const Eigen::MatrixXcd& r) {
    Eigen::Matrix2cd u;
    const Eigen::VectorXcd rl = r * code.L().amp();
    const Eigen::VectorXcd rh = r * code.H().amp();
    u(0, 0) = code.L().amp().dot(rl);
    u(0, 1) = code.L().amp().dot(rh);
    u(1, 0) = code.H().amp().dot(rl);
    u(1, 1) = code.H().amp().dot(rh);
    return u;
}

}  // namespace

LeakyGeneratorError::LeakyGeneratorError(std::size_t index_, double leakage_)
    : std::runtime_error("generator " + std::to_string(index_) +
                         " does not preserve the code subspace (leakage " +
                         std::to_string(leakage_) + ")"),
      index(index_),
      leakage(leakage_) {}

double leakage_norm(const CodePair& code, const ModeUnitary& gamma) {
    const FockOperator r = lift_unitary(gamma, code.basis_ptr());
    return off_block_norm(code, r.mat);
}

LogicalGate extract_gate(const CodePair& code, const ModeUnitary& gamma) {
    const FockOperator r = lift_unitary(gamma, code.basis_ptr());
    return LogicalGate{code_block(code, r.mat), off_block_norm(code, r.mat)};
}

BlochPoint bloch(Complex alpha, Complex beta, double tol) {
    const double norm2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm2 - 1.0) > tol)
        throw std::invalid_argument("bloch: coefficients are not normalized");
    const Complex cross = std::conj(alpha) * beta;
    return BlochPoint{2.0 * cross.real(), 2.0 * cross.imag(),
                      std::norm(alpha) - std::norm(beta)};
}

double gate_distance(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v) {
    return 1.0 - 0.5 * std::abs((u.adjoint() * v).trace());
}

GroupClosure group_closure(const CodePair& code, const std::vector<ModeUnitary>& generators,
                           std::size_t max_elems, double tol) {
    if (generators.empty()) throw std::invalid_argument("group_closure: no generators");
    if (generators.size() > 26)
        throw std::invalid_argument("group_closure: at most 26 generators supported");
    const int n = code.basis().modes();
    for (const ModeUnitary& g : generators)
        if (g.dim() != n)
            throw std::invalid_argument("group_closure: generator dimension mismatch");

    std::vector<LogicalGate> generator_gates;
    generator_gates.reserve(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        generator_gates.push_back(extract_gate(code, generators[i]));
        if (!(generator_gates.back().leakage < tol))
            throw LeakyGeneratorError(i, generator_gates.back().leakage);
    }

    GroupClosure result;
    std::vector<Eigen::MatrixXcd> networks;  // N x N product per stored gate

    const auto find_duplicate = [&](const Eigen::Matrix2cd& u) -> bool {
        for (const LogicalGate& g : result.gates)
            if (gate_distance(g.u, u) < tol) return true;
        return false;
    };

    const auto store = [&](Eigen::MatrixXcd net, std::string word) {
        const ModeUnitary mu(net);
        LogicalGate gate = extract_gate(code, mu);
        result.gates.push_back(gate);
        result.words.push_back(std::move(word));
        networks.push_back(std::move(net));
    };

    store(Eigen::MatrixXcd::Identity(n, n), "e");
    result.saturated = true;

    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            const Eigen::MatrixXcd net = networks[cur] * generators[gi].mat();
            const Eigen::Matrix2cd u = result.gates[cur].u * generator_gates[gi].u;
            if (find_duplicate(u)) continue;
            if (result.gates.size() >= max_elems) {
                result.saturated = false;
                frontier.clear();
                break;
            }
            std::string word = result.words[cur] == "e" ? "" : result.words[cur];
            word.push_back(static_cast<char>('a' + gi));
            store(net, std::move(word));
            frontier.push_back(result.gates.size() - 1);
        }
    }

    // Orbit of |H>: the second column of each gate, deduplicated in R^3.
    constexpr double kOrbitDedup = 1e-6;
    for (std::size_t i = 0; i < result.gates.size(); ++i) {
        Eigen::Vector2cd psi = result.gates[i].u.col(1);
        psi.normalize();
        const BlochPoint p = bloch(psi[0], psi[1]);
        bool known = false;
        for (const BlochPoint& q : result.orbit) {
            const double dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
            if (std::sqrt(dx * dx + dy * dy + dz * dz) < kOrbitDedup) {
                known = true;
                break;
            }
        }
        if (!known) {
            result.orbit.push_back(p);
            result.orbit_words.push_back(result.words[i]);
        }
    }
    return result;
}

ObstructionReport obstruction_check(const CodePair& code, const HermitianGenerator& lambda) {
    const VerificationReport rep = verify_code(code);
    if (!rep.correctable)
        throw std::invalid_argument("obstruction_check: code fails the correctability conditions");
    if (lambda.dim() != code.basis().modes())
        throw std::invalid_argument("obstruction_check: generator dimension mismatch");

    // lambda = Tr(Lambda G^T) = sum_ij Lambda_ij G_ij, real for Hermitian inputs.
    const Complex scalar = lambda.mat().cwiseProduct(*rep.g).sum();
    if (std::abs(scalar.imag()) > 1e-12)
        throw std::logic_error("obstruction_check: Tr(Lambda G^T) has a non-real part");

    const FockOperator r = lift_generator(lambda, code.basis_ptr());
    const Eigen::MatrixXcd p = code.projector();

    ObstructionReport out;
    out.lambda_scalar = scalar.real();
    out.projection_residual = (p * r.mat * p - out.lambda_scalar * p).cwiseAbs().maxCoeff();
    out.first_order_leakage = off_block_norm(code, r.mat);
    return out;
}

bool phase_theorem_check(const CodePair& code, const HermitianGenerator& lambda,
                         std::span<const double> s_grid, double leak_tol, double check_tol) {
    const ObstructionReport ob = obstruction_check(code, lambda);
    if (!(ob.first_order_leakage < leak_tol))
        throw std::invalid_argument("phase_theorem_check: generator leaks at first order");

    const Eigen::MatrixXcd p = code.projector();
    for (const double s : s_grid) {
        const ModeUnitary gamma_s(exp_hermitian(lambda.mat(), s));
        const FockOperator r = lift_unitary(gamma_s, code.basis_ptr());
        const Complex phase = std::exp(Complex(0.0, -s * ob.lambda_scalar));
        if ((r.mat * p - phase * p).cwiseAbs().maxCoeff() >= check_tol) return false;
    }
    return true;
}

}  // namespace plc
