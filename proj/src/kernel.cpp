#include "sunphase/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sunphase/coset.hpp"

namespace sunphase {

namespace {
constexpr double kPi = std::numbers::pi;
}

ChiTable chi_table(const TensorFamily& family, CartanConvention conv) {
  const IrrepSpace& space = family.space();
  const int n = space.n();
  const int lambda = space.lambda();
  const double scale = conv == CartanConvention::su2 ? 0.5 : 1.0;
  if (conv == CartanConvention::su2 && n != 2)
    throw std::invalid_argument("chi_table: su2 convention requires n = 2");

  ChiTable chi;
  chi.exponents.resize(lambda + 1);
  for (int k = 0; k <= lambda; ++k)
    chi.exponents[k] = scale * (static_cast<double>(n) * k - lambda);
  chi.coeff = Eigen::MatrixXd::Zero(lambda + 1, lambda + 1);
  // chi_sigma = Tr[e^{i omega h1} T^dag]; T real diagonal, entries grouped
  // by nu_1.
  for (int sigma = 0; sigma <= lambda; ++sigma) {
    const Matrix& t = family.zero_weight_invariant(sigma);
    for (long a = 0; a < space.dim(); ++a) {
      const int k = space.basis()[a].nu[0];
      chi.coeff(sigma, k) += t(a, a).real();
    }
  }
  return chi;
}

cd chi_tilde(const ChiTable& chi, int sigma, double omega) {
  cd sum = 0.0;
  for (int k = 0; k < chi.coeff.cols(); ++k)
    sum += chi.coeff(sigma, k) * std::polar(1.0, omega * chi.exponents[k]);
  return sum;
}

Eigen::MatrixXd overlap_matrix(const ChiTable& chi) {
  // Exponents are distinct, so matched terms give 2pi each.
  return 2.0 * kPi * chi.coeff * chi.coeff.transpose();
}

Eigen::VectorXd analysis_coefficients(const TensorFamily& family, double s) {
  const int count = family.sigma_count();
  const double dim_lambda = static_cast<double>(family.space().dim());
  Eigen::VectorXd f(count);
  for (int sigma = 0; sigma < count; ++sigma) {
    const double c = family.highest_weight_coefficient(sigma);
    if (!(c > 0.0))
      throw std::runtime_error("analysis_coefficients: non-positive C~, phase convention broken");
    const double dims = dim_lambda * static_cast<double>(family.block_dim(sigma));
    f(sigma) = std::exp(-s * std::log(c)) / std::pow(dims, 0.5 * (s + 1.0));
  }
  return f;
}

Eigen::VectorXd c_coefficients(const Eigen::MatrixXd& g, const Eigen::VectorXd& f) {
  Eigen::LDLT<Eigen::MatrixXd> ldlt(g);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw std::runtime_error("c_coefficients: overlap matrix is not positive definite");
  return ldlt.solve(f);
}

cd f_eval(const ChiTable& chi, const Eigen::VectorXd& c, double omega) {
  cd sum = 0.0;
  for (int sigma = 0; sigma < chi.sigma_count(); ++sigma)
    sum += c(sigma) * std::conj(chi_tilde(chi, sigma, omega));
  return sum;
}

Matrix p_operator(const TensorFamily& family, double s, PRoute route) {
  const IrrepSpace& space = family.space();
  if (route == PRoute::direct) {
    const Eigen::VectorXd f = analysis_coefficients(family, s);
    Matrix p = Matrix::Zero(space.dim(), space.dim());
    for (int sigma = 0; sigma < family.sigma_count(); ++sigma)
      p += f(sigma) * family.zero_weight_invariant(sigma);
    return p;
  }
  const ChiTable chi = chi_table(family);
  const Eigen::VectorXd c = c_coefficients(overlap_matrix(chi), analysis_coefficients(family, s));
  const RealVector h1 = space.h1_diagonal();
  const int nodes = 2 * space.n() * space.lambda() + 3;
  Matrix p = Matrix::Zero(space.dim(), space.dim());
  for (int t = 0; t < nodes; ++t) {
    const double omega = 2.0 * kPi * t / nodes;
    const cd fw = f_eval(chi, c, omega) * (2.0 * kPi / nodes);
    for (long a = 0; a < space.dim(); ++a)
      p(a, a) += std::polar(1.0, omega * h1(a)) * fw;
  }
  return p;
}

Eigen::VectorXd synthesis_coefficients(const TensorFamily& family, double s) {
  const Eigen::VectorXd f_dual = analysis_coefficients(family, -s);
  const double vol = coset_volume(family.space().n());
  Eigen::VectorXd g(family.sigma_count());
  for (int sigma = 0; sigma < family.sigma_count(); ++sigma)
    g(sigma) = static_cast<double>(family.block_dim(sigma)) / (vol * f_dual(sigma));
  return g;
}

Matrix synthesis_operator(const TensorFamily& family, double s) {
  const Eigen::VectorXd g = synthesis_coefficients(family, s);
  Matrix p = Matrix::Zero(family.space().dim(), family.space().dim());
  for (int sigma = 0; sigma < family.sigma_count(); ++sigma)
    p += g(sigma) * family.zero_weight_invariant(sigma);
  return p;
}

KernelCoefficients kernel_coefficients(const TensorFamily& family, double s) {
  KernelCoefficients k;
  k.s = s;
  k.overlap = overlap_matrix(chi_table(family));
  k.analysis = analysis_coefficients(family, s);
  k.expansion = c_coefficients(k.overlap, k.analysis);
  k.synthesis = synthesis_coefficients(family, s);
  return k;
}

}  // namespace sunphase
