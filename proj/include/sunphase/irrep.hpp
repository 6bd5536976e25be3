#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

namespace sunphase {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Occupation vector [nu_1,...,nu_n] of a degree-lambda bosonic monomial.
struct Occupation {
  std::vector<int> nu;

  // Cartan weight component w_i = nu_i - nu_{i+1}, i in [0, n-2].
  int weight(int i) const { return nu[i] - nu[i + 1]; }
  bool operator==(const Occupation& o) const { return nu == o.nu; }
};

long dim_symmetric(int n, int lambda);

// All compositions of lambda into n parts, descending lexicographic.
// The first entry is the highest weight [lambda,0,...,0].
std::vector<Occupation> enumerate_basis(int n, int lambda);

enum class CartanConvention { generic, su2 };

// The symmetric irrep (lambda,0,...,0) of SU(n) realized on n-mode bosonic
// monomials of degree lambda. Immutable after construction.
class IrrepSpace {
 public:
  IrrepSpace(int n, int lambda);

  int n() const { return n_; }
  int lambda() const { return lambda_; }
  long dim() const { return static_cast<long>(basis_.size()); }
  const std::vector<Occupation>& basis() const { return basis_; }

  // Index of an occupation in the ordered basis; -1 if not present.
  long index_of(const std::vector<int>& nu) const;

  // E_ij = a_i^dag a_j in 1-based mode indices, i != j:
  //   <nu + e_i - e_j| E_ij |nu> = sqrt((nu_i + 1) * nu_j).
  Matrix generator(int i, int j) const;

  // E_ii (mode number operator).
  Matrix number_operator(int i) const;

  // Cartan element H_k = E_kk - E_{k+1,k+1}, k in [1, n-1].
  Matrix cartan(int k) const;

  // Per-state eigenvalue of the U(n-1)-invariant Cartan element,
  // n*nu_1 - lambda. The su2 convention (n = 2 only) reports S_z = m.
  RealVector h1_diagonal(CartanConvention conv = CartanConvention::generic) const;
  Matrix cartan_h1(CartanConvention conv = CartanConvention::generic) const;

  // Precomputed data for the embedded su(2) acting on modes (j,k):
  // J_z = (E_jj - E_kk)/2 (diagonal) and the eigensystem of
  // J_y = (E_jk - E_kj)/(2i).
  struct Su2Embedding {
    RealVector jz;           // diagonal of J_z
    RealVector jy_eigs;      // eigenvalues of J_y
    Matrix jy_vecs;          // unitary eigenvector matrix of J_y
  };
  const Su2Embedding& embedding(int j, int k) const;

  // R_jk(a,b,c) = exp(i a J_z) exp(i b J_y) exp(i c J_z) on modes (j,k).
  Matrix rotation(int j, int k, double a, double b, double c) const;

 private:
  int n_;
  int lambda_;
  std::vector<Occupation> basis_;
  std::map<std::vector<int>, long> index_;
  std::vector<Su2Embedding> embeddings_;  // indexed by pair (j,k), j < k
};

}  // namespace sunphase
