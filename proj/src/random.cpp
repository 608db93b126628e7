#include "plc/random.hpp"

#include <cmath>
#include <numbers>

namespace plc {

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Eigen::MatrixXcd Rng::ginibre(int n) {
    Eigen::MatrixXcd a(n, n);
    const double scale = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = scale * std::complex<double>(normal(), normal());
    return a;
}

Eigen::MatrixXcd Rng::haar_unitary(int n) {
    const Eigen::MatrixXcd a = ginibre(n);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < n; ++k) {
        const std::complex<double> d = r(k, k);
        q.col(k) *= d / std::abs(d);  // phase fix makes the distribution Haar
    }
    return q;
}

Eigen::MatrixXcd Rng::hermitian(int n) {
    const Eigen::MatrixXcd a = ginibre(n);
    return 0.5 * (a + a.adjoint());
}

}  // namespace plc
