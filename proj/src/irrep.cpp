#include "sunphase/irrep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sunphase {

long dim_symmetric(int n, int lambda) {
  if (n < 2) throw std::invalid_argument("dim_symmetric: n must be >= 2");
  if (lambda < 0) throw std::invalid_argument("dim_symmetric: lambda must be >= 0");
  // binomial(lambda + n - 1, n - 1), exact in integer arithmetic
  long num = 1, den = 1;
  for (int k = 1; k <= n - 1; ++k) {
    num *= lambda + k;
    den *= k;
  }
  return num / den;
}

std::vector<Occupation> enumerate_basis(int n, int lambda) {
  std::vector<Occupation> out;
  std::vector<int> nu(n, 0);
  // Recursive descent emits compositions in descending lexicographic order.
  auto rec = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == n - 1) {
      nu[mode] = remaining;
      out.push_back(Occupation{nu});
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      nu[mode] = v;
      self(self, mode + 1, remaining - v);
    }
  };
  rec(rec, 0, lambda);
  return out;
}

IrrepSpace::IrrepSpace(int n, int lambda) : n_(n), lambda_(lambda) {
  if (n < 2) throw std::invalid_argument("IrrepSpace: n must be >= 2");
  if (lambda < 0) throw std::invalid_argument("IrrepSpace: lambda must be >= 0");
  basis_ = enumerate_basis(n, lambda);
  for (long a = 0; a < static_cast<long>(basis_.size()); ++a)
    index_[basis_[a].nu] = a;

  // Eigensystems of the embedded J_y for every mode pair, used by rotation().
  embeddings_.resize(static_cast<std::size_t>(n) * n);
  const long d = dim();
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      Su2Embedding emb;
      emb.jz.resize(d);
      for (long a = 0; a < d; ++a)
        emb.jz(a) = 0.5 * (basis_[a].nu[j - 1] - basis_[a].nu[k - 1]);
      const Matrix jy = (generator(j, k) - generator(k, j)) / cd(0.0, 2.0);
      Eigen::SelfAdjointEigenSolver<Matrix> es(jy);
      if (es.info() != Eigen::Success)
        throw std::runtime_error("IrrepSpace: J_y eigendecomposition failed");
      emb.jy_eigs = es.eigenvalues();
      emb.jy_vecs = es.eigenvectors();
      embeddings_[static_cast<std::size_t>(j - 1) * n + (k - 1)] = std::move(emb);
    }
  }
}

long IrrepSpace::index_of(const std::vector<int>& nu) const {
  auto it = index_.find(nu);
  return it == index_.end() ? -1 : it->second;
}

Matrix IrrepSpace::generator(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || i == j)
    throw std::out_of_range("IrrepSpace::generator: mode index out of range");
  const long d = dim();
  Matrix e = Matrix::Zero(d, d);
  std::vector<int> target;
  for (long b = 0; b < d; ++b) {
    const auto& nu = basis_[b].nu;
    if (nu[j - 1] == 0) continue;
    target = nu;
    target[i - 1] += 1;
    target[j - 1] -= 1;
    const long a = index_of(target);
    e(a, b) = std::sqrt(static_cast<double>(nu[i - 1] + 1) * nu[j - 1]);
  }
  return e;
}

Matrix IrrepSpace::number_operator(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("IrrepSpace::number_operator");
  const long d = dim();
  Matrix e = Matrix::Zero(d, d);
  for (long a = 0; a < d; ++a) e(a, a) = basis_[a].nu[i - 1];
  return e;
}

Matrix IrrepSpace::cartan(int k) const {
  if (k < 1 || k > n_ - 1) throw std::out_of_range("IrrepSpace::cartan");
  const long d = dim();
  Matrix h = Matrix::Zero(d, d);
  for (long a = 0; a < d; ++a) h(a, a) = basis_[a].weight(k - 1);
  return h;
}

RealVector IrrepSpace::h1_diagonal(CartanConvention conv) const {
  if (conv == CartanConvention::su2 && n_ != 2)
    throw std::invalid_argument("h1_diagonal: su2 convention requires n = 2");
  const long d = dim();
  RealVector h(d);
  const double scale = conv == CartanConvention::su2 ? 0.5 : 1.0;
  for (long a = 0; a < d; ++a)
    h(a) = scale * (static_cast<double>(n_) * basis_[a].nu[0] - lambda_);
  return h;
}

Matrix IrrepSpace::cartan_h1(CartanConvention conv) const {
  return h1_diagonal(conv).cast<cd>().asDiagonal();
}

const IrrepSpace::Su2Embedding& IrrepSpace::embedding(int j, int k) const {
  if (j < 1 || k <= j || k > n_) throw std::out_of_range("IrrepSpace::embedding");
  return embeddings_[static_cast<std::size_t>(j - 1) * n_ + (k - 1)];
}

Matrix IrrepSpace::rotation(int j, int k, double a, double b, double c) const {
  const Su2Embedding& emb = embedding(j, k);
  const long d = dim();
  Eigen::VectorXcd phase_y(d);
  for (long t = 0; t < d; ++t) phase_y(t) = std::polar(1.0, b * emb.jy_eigs(t));
  // exp(i b J_y) through the cached eigensystem
  Matrix r = emb.jy_vecs * phase_y.asDiagonal() * emb.jy_vecs.adjoint();
  for (long row = 0; row < d; ++row) {
    const cd za = std::polar(1.0, a * emb.jz(row));
    for (long col = 0; col < d; ++col) r(row, col) *= za;
  }
  for (long col = 0; col < d; ++col) {
    const cd zc = std::polar(1.0, c * emb.jz(col));
    for (long row = 0; row < d; ++row) r(row, col) *= zc;
  }
  return r;
}

}  // namespace sunphase
