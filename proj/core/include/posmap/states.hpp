#pragma once

#include <cstdint>
#include <vector>

#include "posmap/hermitian.hpp"
#include "posmap/random.hpp"

namespace posmap {

// Density matrix on C^dA (x) C^dB, composite index i = iA * dB + iB.
class BipartiteState {
 public:
  BipartiteState(HermitianMatrix rho, Dims dims, double psd_tol = kPsdTol);

  const HermitianMatrix& matrix() const { return rho_; }
  Dims dims() const { return dims_; }
  Index dim() const { return rho_.dim(); }

  HermitianMatrix reduced(Subsystem keep) const { return partial_trace(rho_, dims_, keep); }
  HermitianMatrix partial_transpose(Subsystem side = Subsystem::B) const {
    return posmap::partial_transpose(rho_, dims_, side);
  }

 private:
  HermitianMatrix rho_;
  Dims dims_;
};

HermitianMatrix partial_trace(const BipartiteState& rho, Subsystem keep);
HermitianMatrix partial_transpose(const BipartiteState& rho, Subsystem side);

// Projectors onto the J^2 eigenspaces of j1 (x) j2, local basis m = j, j-1, ..., -j.
struct AngularMomentumProjectors {
  double j1 = 0;
  double j2 = 0;
  std::vector<double> total_j;  // |j1-j2| .. j1+j2
  std::vector<HermitianMatrix> projectors;
};

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>, arguments given as twice their value.
double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tJ, int tM);

AngularMomentumProjectors angular_momentum_projectors(double j1, double j2);

// p P0 + q P1/3 + r P2/5 + s P3/7 on 4 (x) 4.
BipartiteState rot_invariant_state(double p, double q, double r, double s);
// p P+ + (1-p) 1/d^2.
BipartiteState isotropic_state(Index d, double p);
// q |Psi1><Psi1| + (1-q) |Psi2><Psi2|, Psi1 = a|00> + b|11>, Psi2 = a|10> + b|01>, b = sqrt(1-a^2).
BipartiteState two_qubit_family(double a, double q);
// sum_i p_i |a_i><a_i| (x) |b_i><b_i|, Haar pure factors, flat Dirichlet weights.
BipartiteState random_separable(Index da, Index db, int terms, std::uint64_t seed);
BipartiteState random_separable(Index da, Index db, int terms, Rng& rng);
BipartiteState random_rot_invariant(Rng& rng);
BipartiteState product_state(const HermitianMatrix& a, const HermitianMatrix& b);

HermitianMatrix max_entangled_projector(Index d);

}  // namespace posmap
