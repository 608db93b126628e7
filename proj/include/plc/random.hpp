#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace plc {

/// Deterministic seeded generator for the randomized experiments. Uniform and
/// normal variates are derived from raw mt19937-64 words (Box-Muller) so the
/// stream does not depend on the standard library's distribution internals.
class Rng {
  public:
    static constexpr const char* kName = "mt19937-64/box-muller";

    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform();  // [0, 1)
    double normal();   // standard normal

    Eigen::MatrixXcd ginibre(int n);       // iid complex N(0, 1) entries
    Eigen::MatrixXcd haar_unitary(int n);  // QR of Ginibre with phase fix
    Eigen::MatrixXcd hermitian(int n);     // (A + A^dag)/2 of a Ginibre draw

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace plc
