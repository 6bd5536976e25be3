#pragma once

#include <string>
#include <vector>

#include "sunphase/irrep.hpp"

namespace sunphase {

// Label (sigma; weight, I) of an irreducible tensor operator in the
// decomposition of lambda (x) lambda*. mult = 0 marks the H-scalar copy
// at a repeated weight.
struct TensorLabel {
  int sigma = 0;
  std::vector<int> weight;  // length n-1, eigenvalues under ad(H_k)
  int mult = 0;

  bool operator==(const TensorLabel& o) const {
    return sigma == o.sigma && weight == o.weight && mult == o.mult;
  }
};

std::string to_string(const TensorLabel& label);

// Thrown when the numerically decomposed operator space does not match the
// expected lambda (x) lambda* block structure.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Trace-orthonormal irreducible tensor operator basis of the dim^2
// operator space, built by eigendecomposition of the adjoint-action
// quadratic Casimir. Immutable after build().
class TensorFamily {
 public:
  static TensorFamily build(const IrrepSpace& space);

  const IrrepSpace& space() const { return space_; }
  int sigma_count() const { return space_.lambda() + 1; }

  // Dimension of the sigma block, i.e. of the irrep (sigma,0,...,0,sigma).
  long block_dim(int sigma) const;

  std::size_t size() const { return tensors_.size(); }
  const TensorLabel& label(std::size_t a) const { return labels_[a]; }
  const Matrix& tensor(std::size_t a) const { return tensors_[a]; }
  long find(const TensorLabel& label) const;  // -1 if absent

  // T_{sigma;0,0}: the H-invariant zero-weight member of block sigma.
  // Real diagonal in the occupation basis; entries depend only on nu_1.
  const Matrix& zero_weight_invariant(int sigma) const;

  // C~_sigma = <h.w.| T_{sigma;0,0} |h.w.>, real positive by phase fixing.
  double highest_weight_coefficient(int sigma) const;

  // max over label pairs of |Tr(T_a^dag T_b) - delta_ab|.
  double verify_trace_orthonormality() const;

  // Coefficients x_a = Tr(T_a^dag X) and the inverse resummation.
  Eigen::VectorXcd expand(const Matrix& x) const;
  Matrix synthesize(const Eigen::VectorXcd& coeff) const;

  // First tensor index of each sigma block (labels are sorted by sigma).
  std::size_t block_begin(int sigma) const { return block_begin_[sigma]; }
  std::size_t block_end(int sigma) const { return block_begin_[sigma + 1]; }

 private:
  explicit TensorFamily(IrrepSpace space) : space_(std::move(space)) {}

  IrrepSpace space_;
  std::vector<TensorLabel> labels_;
  std::vector<Matrix> tensors_;
  std::vector<std::size_t> block_begin_;
  std::vector<long> zero_weight_index_;  // per sigma
  std::vector<double> hw_coeff_;         // per sigma
};

// Wigner coupling coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
// convention via the Racah sum; half-integer arguments allowed. Returns 0
// when selection rules are violated.
double su2_cg(double j1, double m1, double j2, double m2, double jj, double mm);

}  // namespace sunphase
