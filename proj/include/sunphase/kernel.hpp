#pragma once

#include "sunphase/tensor_family.hpp"

namespace sunphase {

// Finite Fourier data of the generalized characters:
// chi_sigma(omega) = sum_k coeff(sigma, k) * exp(i omega exponents[k]).
// Exponents are the h1 eigenvalues n*k - lambda, k = nu_1 = 0..lambda.
struct ChiTable {
  std::vector<double> exponents;
  Eigen::MatrixXd coeff;  // (lambda+1) sigma rows x (lambda+1) exponent cols

  int sigma_count() const { return static_cast<int>(coeff.rows()); }
};

ChiTable chi_table(const TensorFamily& family,
                   CartanConvention conv = CartanConvention::generic);

cd chi_tilde(const ChiTable& chi, int sigma, double omega);

// g_{ss'} = int_0^{2pi} chi_s chi_s'^* domega, exact from the Fourier data.
Eigen::MatrixXd overlap_matrix(const ChiTable& chi);

// Analysis coefficients F_sigma^(s) = C~_sigma^{-s} / (dim(lambda) dim_sigma)^{(s+1)/2}.
Eigen::VectorXd analysis_coefficients(const TensorFamily& family, double s);

// Solve g c = F (not inverted).
Eigen::VectorXd c_coefficients(const Eigen::MatrixXd& g, const Eigen::VectorXd& f);

// f^(s)(omega) = sum_sigma c_sigma chi_sigma(omega)^*.
cd f_eval(const ChiTable& chi, const Eigen::VectorXd& c, double omega);

enum class PRoute { direct, integral };

// P^(s), real diagonal in the occupation basis, trace 1.
//   direct:   sum_sigma F_sigma^(s) T_{sigma;0,0}
//   integral: int_0^{2pi} exp(i omega h1) f^(s)(omega) domega by trapezoid
//             on 2 n lambda + 3 nodes (exact for the finite Fourier content)
Matrix p_operator(const TensorFamily& family, double s, PRoute route);

// Synthesis coefficients G_sigma^(s) = dim_sigma / (vol(M) F_sigma^(-s)).
// The pair (P^(s) analysis, P~^(s) synthesis) is exactly mutually inverse.
Eigen::VectorXd synthesis_coefficients(const TensorFamily& family, double s);

// P~^(s) = sum_sigma G_sigma^(s) T_{sigma;0,0}.
Matrix synthesis_operator(const TensorFamily& family, double s);

struct KernelCoefficients {
  double s = 0.0;
  Eigen::VectorXd analysis;    // F^(s)
  Eigen::VectorXd expansion;   // c^(s)
  Eigen::VectorXd synthesis;   // G^(s)
  Eigen::MatrixXd overlap;     // g
};

KernelCoefficients kernel_coefficients(const TensorFamily& family, double s);

}  // namespace sunphase
