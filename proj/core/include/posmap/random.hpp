#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "posmap/hermitian.hpp"

namespace posmap {

// std::mt19937_64 seeded through std::seed_seq{seed, stream}.  Uniforms use the
// top 53 bits; normals use Box-Muller.  Both transforms are implemented here
// (not via std:: distributions) so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  double uniform();  // [0, 1)
  double normal();
  Complex complex_normal();  // E|z|^2 = 1
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0;
};

Matrix random_ginibre(Index rows, Index cols, Rng& rng);
Vector haar_pure_state(Index d, Rng& rng);
// QR of a Ginibre matrix with R's diagonal phases absorbed into Q.
Matrix haar_unitary(Index d, Rng& rng);
// Flat Dirichlet weights on n points.
std::vector<double> random_simplex(size_t n, Rng& rng);
// G G^+ / Tr with G a d x rank Ginibre matrix.
HermitianMatrix random_density(Index d, Index rank, Rng& rng);
HermitianMatrix random_hermitian(Index d, Rng& rng);

}  // namespace posmap
