#include "plc/linopt.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace plc {

namespace {

double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Row/column index lists with mode i repeated occ[i] times.
std::vector<int> repeat_indices(const Occupation& occ) {
    std::vector<int> out;
    for (std::size_t i = 0; i < occ.size(); ++i)
        out.insert(out.end(), static_cast<std::size_t>(occ[i]), static_cast<int>(i));
    return out;
}

}  // namespace

ModeUnitary::ModeUnitary(Eigen::MatrixXcd mat, double tol) : mat_(std::move(mat)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
        throw std::invalid_argument("ModeUnitary: matrix must be square and non-empty");
    const Eigen::MatrixXcd defect =
        mat_.adjoint() * mat_ - Eigen::MatrixXcd::Identity(mat_.rows(), mat_.cols());
    const double dev = max_abs(defect);
    if (dev > tol)
        throw std::invalid_argument("ModeUnitary: matrix is not unitary (defect " +
                                    std::to_string(dev) + " exceeds tolerance)");
}

HermitianGenerator::HermitianGenerator(Eigen::MatrixXcd mat, double tol) : mat_(std::move(mat)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
        throw std::invalid_argument("HermitianGenerator: matrix must be square and non-empty");
    const double dev = max_abs(mat_ - mat_.adjoint());
    if (dev > tol)
        throw std::invalid_argument("HermitianGenerator: matrix is not Hermitian (defect " +
                                    std::to_string(dev) + " exceeds tolerance)");
}

Complex permanent(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("permanent: matrix must be square");
    const int k = static_cast<int>(a.rows());
    if (k == 0) return Complex(1.0, 0.0);
    if (k > 20) throw std::invalid_argument("permanent: matrix larger than 20x20");

    // Ryser: perm(A) = (-1)^k sum_{S != 0} (-1)^|S| prod_i sum_{j in S} a_ij,
    // visiting subsets in Gray-code order so each step updates one column.
    std::vector<Complex> rowsum(static_cast<std::size_t>(k), Complex(0.0, 0.0));
    Complex total(0.0, 0.0);
    std::uint32_t prev = 0;
    const std::uint32_t end = std::uint32_t{1} << k;
    for (std::uint32_t t = 1; t < end; ++t) {
        const std::uint32_t gray = t ^ (t >> 1);
        const std::uint32_t diff = gray ^ prev;
        const int j = std::countr_zero(diff);
        if (gray & diff) {
            for (int r = 0; r < k; ++r) rowsum[static_cast<std::size_t>(r)] += a(r, j);
        } else {
            for (int r = 0; r < k; ++r) rowsum[static_cast<std::size_t>(r)] -= a(r, j);
        }
        prev = gray;
        Complex prod(1.0, 0.0);
        for (int r = 0; r < k; ++r) prod *= rowsum[static_cast<std::size_t>(r)];
        if ((k - std::popcount(gray)) % 2 != 0)
            total -= prod;
        else
            total += prod;
    }
    return total;
}

FockOperator lift_unitary(const ModeUnitary& gamma, std::shared_ptr<const FockBasis> basis) {
    if (gamma.dim() != basis->modes())
        throw std::invalid_argument("lift_unitary: unitary dimension does not match basis modes");

    const std::size_t d = basis->size();
    Eigen::MatrixXcd r(d, d);

    std::vector<double> occ_norm(d);  // sqrt(prod n_i!) per basis element
    for (std::size_t i = 0; i < d; ++i) {
        double p = 1.0;
        for (int n : basis->at(i)) p *= factorial(n);
        occ_norm[i] = std::sqrt(p);
    }

    for (std::size_t col = 0; col < d; ++col) {
        const std::vector<int> cols = repeat_indices(basis->at(col));
        for (std::size_t row = 0; row < d; ++row) {
            const std::vector<int> rows = repeat_indices(basis->at(row));
            const std::size_t k = rows.size();
            Eigen::MatrixXcd sub(k, k);
            for (std::size_t ri = 0; ri < k; ++ri)
                for (std::size_t ci = 0; ci < k; ++ci)
                    sub(static_cast<Eigen::Index>(ri), static_cast<Eigen::Index>(ci)) =
                        gamma.mat()(rows[ri], cols[ci]);
            r(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                permanent(sub) / (occ_norm[row] * occ_norm[col]);
        }
    }
    return FockOperator{std::move(basis), std::move(r)};
}

FockOperator lift_generator(const HermitianGenerator& lambda,
                            std::shared_ptr<const FockBasis> basis) {
    if (lambda.dim() != basis->modes())
        throw std::invalid_argument(
            "lift_generator: generator dimension does not match basis modes");

    const std::size_t d = basis->size();
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(d, d);
    if (basis->photons() == 0) return FockOperator{std::move(basis), std::move(r)};

    const int n = basis->modes();
    for (std::size_t col = 0; col < d; ++col) {
        const StateVector unit = basis_state(basis, basis->at(col));
        for (int j = 0; j < n; ++j) {
            if (basis->at(col)[static_cast<std::size_t>(j)] == 0) continue;
            const StateVector lowered = annihilate(unit, j);
            for (int i = 0; i < n; ++i) {
                const Complex coeff = lambda.mat()(i, j);
                if (coeff == Complex(0.0, 0.0)) continue;
                const StateVector raised = create(lowered, i);
                r.col(static_cast<Eigen::Index>(col)) += coeff * raised.amp();
            }
        }
    }
    return FockOperator{std::move(basis), std::move(r)};
}

Eigen::MatrixXcd exp_hermitian(const Eigen::MatrixXcd& h, double s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("exp_hermitian: eigendecomposition failed");
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases[i] = std::exp(Complex(0.0, -s * es.eigenvalues()[i]));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

FockOperator lift_unitary_via_exp(const ModeUnitary& gamma,
                                  std::shared_ptr<const FockBasis> basis) {
    if (gamma.dim() != basis->modes())
        throw std::invalid_argument("lift_unitary: unitary dimension does not match basis modes");

    // Principal log: Gamma = V diag(e^{i phi}) V^{-1} with phi in (-pi, pi],
    // so Gamma = exp(-i Lambda) for Lambda = -V diag(phi) V^{-1}. The raw
    // similarity is Hermitized to absorb solver round-off.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(gamma.mat());
    if (es.info() != Eigen::Success)
        throw std::runtime_error("lift_unitary_via_exp: eigendecomposition failed");
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases[i] = Complex(-std::arg(es.eigenvalues()[i]), 0.0);
    const Eigen::MatrixXcd v = es.eigenvectors();
    const Eigen::MatrixXcd raw = v * phases.asDiagonal() * v.inverse();
    HermitianGenerator lambda(0.5 * (raw + raw.adjoint()));

    FockOperator lifted = lift_generator(lambda, basis);
    return FockOperator{std::move(lifted.basis), exp_hermitian(lifted.mat, 1.0)};
}

StateVector apply(const FockOperator& op, const StateVector& psi) {
    if (!same_sector(*op.basis, psi.basis()))
        throw std::invalid_argument("apply: operator and state live on different bases");
    return StateVector(psi.basis_ptr(), op.mat * psi.amp());
}

namespace {

// Angle expressions of the form "[-][coef]pi[/div]" or a plain decimal.
double parse_angle(const std::string& text) {
    std::string s = text;
    double sign = 1.0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        if (s[0] == '-') sign = -1.0;
        s.erase(0, 1);
    }
    const std::size_t pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) {
        std::size_t used = 0;
        const double value = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad angle expression: " + text);
        return sign * value;
    }
    double coef = 1.0;
    if (pi_pos > 0) coef = std::stod(s.substr(0, pi_pos));
    double div = 1.0;
    std::string tail = s.substr(pi_pos + 2);
    if (!tail.empty()) {
        if (tail[0] != '/') throw std::invalid_argument("bad angle expression: " + text);
        div = std::stod(tail.substr(1));
    }
    return sign * coef * std::numbers::pi / div;
}

}  // namespace

ModeUnitary builtin_unitary(const std::string& name) {
    if (name == "bs50") {
        Eigen::MatrixXcd m(2, 2);
        const double r = 1.0 / std::sqrt(2.0);
        m << r, r, -r, r;
        return ModeUnitary(m);
    }
    if (name == "tritter3") {
        const Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
        Eigen::MatrixXcd m(3, 3);
        const double r = 1.0 / std::sqrt(3.0);
        m << 1, 1, 1, 1, w, std::conj(w), 1, std::conj(w), w;
        return ModeUnitary(r * m);
    }
    if (name.rfind("phase2:", 0) == 0 || name.rfind("phase3:", 0) == 0) {
        const int n = name[5] - '0';
        const double theta = parse_angle(name.substr(7));
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
        m(n - 1, n - 1) = std::exp(Complex(0.0, theta));
        return ModeUnitary(m);
    }
    if (name.rfind("identity", 0) == 0) {
        const int n = std::stoi(name.substr(8));
        if (n < 1) throw std::invalid_argument("identityN needs N >= 1");
        return ModeUnitary(Eigen::MatrixXcd::Identity(n, n));
    }
    throw std::invalid_argument("unknown builtin unitary: " + name);
}

}  // namespace plc
