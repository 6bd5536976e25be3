#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sunphase/irrep.hpp"

namespace sunphase {

// Point on the phase space M = SU(n)/U(n-1).
//   n = 2: angles = {alpha, beta},        0 <= alpha < 2pi, 0 <= beta <= pi
//   n = 3: angles = {a1, b1, a2, b2},     same ranges per pair
//   n >= 4: no chart; `defining` holds a Haar-sampled SU(n) representative.
struct CosetPoint {
  std::vector<double> angles;
  Matrix defining;  // n x n, only for n >= 4

  static CosetPoint identity(int n);
};

struct GroupElement {
  Matrix matrix;  // dim x dim unitary in the irrep
  CosetPoint params;
};

struct CosetGrid {
  int n = 0;
  std::vector<int> resolution;  // per-angle point counts; empty for Monte Carlo
  std::vector<CosetPoint> points;
  std::vector<double> weights;  // units of dOmega, sum = volume
  double volume = 0.0;
  bool monte_carlo = false;

  std::size_t size() const { return points.size(); }
};

// vol(M) under the invariant measure: 4pi (n=2), 4pi^2 (n=3),
// 2^n pi^(n-1)/(n-1)! in general.
double coset_volume(int n);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int npts, std::vector<double>& nodes, std::vector<double>& weights);

// Grid sizes adequate for symbols of band limit sigma <= lambda
// (products of two such are integrated exactly, with margin).
std::vector<int> default_grid_resolution(int n, int lambda);

// Exact product quadrature on the coset. n = 2: trapezoid in alpha x
// Gauss-Legendre in cos(beta). n = 3: trapezoid in alpha_1, alpha_2,
// Gauss-Legendre in cos(beta_1), and Gauss nodes in v = sin^2(beta_2/2)
// carrying the measure v dv (= dt/2 for t = sin^4(beta_2/2)); this makes
// the rule exact for the polynomial-in-v integrands produced by symbols.
// Throws for n >= 4 (no exact charts; use coset_grid_monte_carlo).
CosetGrid coset_grid(int n, const std::vector<int>& resolution);

// Equal-weight Haar sample, any n >= 2. Weights sum to vol(M).
CosetGrid coset_grid_monte_carlo(int n, int npoints, std::uint64_t seed);

// Lambda(Omega): coset representative in the irrep.
//   n = 2: R_12(alpha, beta, 0)
//   n = 3: R_23(a1, b1, -a1) * R_12(a2, b2, -a2)
//   n >= 4: lift of `defining` through the bosonic realization.
GroupElement coset_element(const IrrepSpace& space, const CosetPoint& p);

// Lift of a defining-irrep SU(n) element to the symmetric irrep via the
// principal logarithm (exact on the image of exp, which is all of SU(n)).
Matrix lift_defining(const IrrepSpace& space, const Matrix& u);

// Haar-distributed SU(n) element in the defining irrep.
Matrix haar_su_n(int n, std::mt19937_64& rng);

// Deterministic sampling primitives built directly on the raw generator
// (libstdc++ distributions are implementation-defined, these are not).
double uniform01(std::mt19937_64& rng);
cd complex_normal(std::mt19937_64& rng);

// Uniform-in-chart random coset point (n = 2, 3) or Haar point (n >= 4).
CosetPoint random_coset_point(int n, std::mt19937_64& rng);

// Random element of the stabilizer H = U(n-1) of the highest-weight
// projector, in the irrep. Used to probe H-invariance and covariance.
Matrix random_stabilizer_element(const IrrepSpace& space, std::mt19937_64& rng);

}  // namespace sunphase
