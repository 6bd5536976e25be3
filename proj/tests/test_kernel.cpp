#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sunphase/coset.hpp"
#include "sunphase/kernel.hpp"

using namespace sunphase;

namespace {
constexpr double kPi = std::numbers::pi;

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }
}  // namespace

TEST_CASE("generalized characters, SU(3) (1,0)") {
  const TensorFamily family = TensorFamily::build(IrrepSpace(3, 1));
  const ChiTable chi = chi_table(family);
  auto rng = make_rng(5);
  for (int k = 0; k < 8; ++k) {
    const double w = 2.0 * kPi * uniform01(rng);
    const cd want0 = (2.0 * std::polar(1.0, -w) + std::polar(1.0, 2.0 * w)) / std::sqrt(3.0);
    const cd want1 =
        std::sqrt(2.0 / 3.0) * (-std::polar(1.0, -w) + std::polar(1.0, 2.0 * w));
    CHECK(std::abs(chi_tilde(chi, 0, w) - want0) < 1e-13);
    CHECK(std::abs(chi_tilde(chi, 1, w) - want1) < 1e-13);
  }
}

TEST_CASE("chi at omega = 0") {
  for (int n : {2, 3}) {
    for (int lambda : {1, 2, 3}) {
      const TensorFamily family = TensorFamily::build(IrrepSpace(n, lambda));
      const ChiTable chi = chi_table(family);
      CHECK(std::abs(chi_tilde(chi, 0, 0.0) -
                     std::sqrt(static_cast<double>(family.space().dim()))) < 1e-12);
      for (int sigma = 1; sigma <= lambda; ++sigma)
        CHECK(std::abs(chi_tilde(chi, sigma, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("overlap matrix golden values") {
  const Eigen::MatrixXd g31 = overlap_matrix(chi_table(TensorFamily::build(IrrepSpace(3, 1))));
  CHECK(std::abs(g31(0, 0) - 10.0 * kPi / 3.0) < 1e-12);
  CHECK(std::abs(g31(0, 1) + 2.0 * std::sqrt(2.0) * kPi / 3.0) < 1e-12);
  CHECK(std::abs(g31(1, 0) + 2.0 * std::sqrt(2.0) * kPi / 3.0) < 1e-12);
  CHECK(std::abs(g31(1, 1) - 8.0 * kPi / 3.0) < 1e-12);

  const Eigen::MatrixXd g32 = overlap_matrix(chi_table(TensorFamily::build(IrrepSpace(3, 2))));
  Eigen::MatrixXd want(3, 3);
  want << 14.0 * kPi / 3.0, -2.0 * std::sqrt(5.0) * kPi / 3.0, 0.0,
      -2.0 * std::sqrt(5.0) * kPi / 3.0, 56.0 * kPi / 15.0, -6.0 * kPi / 5.0, 0.0,
      -6.0 * kPi / 5.0, 18.0 * kPi / 5.0;
  CHECK((g32 - want).cwiseAbs().maxCoeff() < 1e-12);

  // SU(2): g = 2 pi delta for any j
  for (int twoj : {1, 2, 3, 4}) {
    const Eigen::MatrixXd g = overlap_matrix(chi_table(TensorFamily::build(IrrepSpace(2, twoj))));
    CHECK((g - 2.0 * kPi * Eigen::MatrixXd::Identity(twoj + 1, twoj + 1)).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("overlap matrix is positive definite") {
  for (int n : {2, 3, 4}) {
    const TensorFamily family = TensorFamily::build(IrrepSpace(n, 2));
    const Eigen::MatrixXd g = overlap_matrix(chi_table(family));
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::LLT<Eigen::MatrixXd> llt(g);
    CHECK(llt.info() == Eigen::Success);
  }
}

TEST_CASE("analysis coefficients") {
  const TensorFamily f31 = TensorFamily::build(IrrepSpace(3, 1));
  for (double s : {-1.0, 0.0, 1.0, 0.37}) {
    const Eigen::VectorXd f = analysis_coefficients(f31, s);
    CHECK(std::abs(f(0) - std::pow(1.0 / std::sqrt(3.0), -s) / std::pow(3.0, 0.5 * (s + 1))) <
          1e-14);
    CHECK(std::abs(f(1) - std::pow(std::sqrt(2.0 / 3.0), -s) / std::pow(24.0, 0.5 * (s + 1))) <
          1e-14);
    CHECK(std::abs(f(0) * std::sqrt(3.0) - std::pow(3.0, -0.5 * s) *
                                               std::pow(1.0 / std::sqrt(3.0), -s)) < 1e-14);
  }
  const TensorFamily f32 = TensorFamily::build(IrrepSpace(3, 2));
  for (double s : {-1.0, 0.0, 1.0}) {
    const Eigen::VectorXd f = analysis_coefficients(f32, s);
    CHECK(std::abs(f(2) - std::pow(std::sqrt(10.0 / 3.0), s) / std::pow(162.0, 0.5 * (s + 1))) <
          1e-14);
  }
  // F_0^(s) sqrt(dim) = 1 at s = 0; the normalization property in general
  // reads F_0^(s) = dim^{-(s+1)/2} C~_0^{-s} with C~_0 = 1/sqrt(dim), so
  // F_0^(s) sqrt(dim) = 1 identically.
  for (int n : {2, 3}) {
    const TensorFamily f = TensorFamily::build(IrrepSpace(n, 2));
    for (double s : {-1.0, -0.3, 0.0, 0.8, 1.0})
      CHECK(std::abs(analysis_coefficients(f, s)(0) *
                         std::sqrt(static_cast<double>(f.space().dim())) -
                     1.0) < 1e-13);
  }
}

TEST_CASE("interpolation consistency F^(s) F^(-s)") {
  auto rng = make_rng(17);
  for (int n : {2, 3}) {
    const TensorFamily family = TensorFamily::build(IrrepSpace(n, 2));
    const double dim = static_cast<double>(family.space().dim());
    for (int k = 0; k < 20; ++k) {
      const double s = 4.0 * uniform01(rng) - 2.0;
      const Eigen::VectorXd fp = analysis_coefficients(family, s);
      const Eigen::VectorXd fm = analysis_coefficients(family, -s);
      for (int sigma = 0; sigma < family.sigma_count(); ++sigma)
        CHECK(std::abs(fp(sigma) * fm(sigma) -
                       1.0 / (dim * static_cast<double>(family.block_dim(sigma)))) < 1e-12);
    }
  }
}

TEST_CASE("expansion coefficients golden values") {
  const TensorFamily f31 = TensorFamily::build(IrrepSpace(3, 1));
  const Eigen::MatrixXd g31 = overlap_matrix(chi_table(f31));
  for (double s : {-1.0, 0.0, 1.0}) {
    const Eigen::VectorXd c = c_coefficients(g31, analysis_coefficients(f31, s));
    CHECK(std::abs(c(0) - (8.0 + std::pow(4.0, -s)) / (24.0 * std::sqrt(3.0) * kPi)) < 1e-13);
    CHECK(std::abs(c(1) - (4.0 + 5.0 * std::pow(4.0, -s)) / (24.0 * std::sqrt(6.0) * kPi)) <
          1e-13);
  }

  const TensorFamily f32 = TensorFamily::build(IrrepSpace(3, 2));
  const Eigen::MatrixXd g32 = overlap_matrix(chi_table(f32));
  const Eigen::VectorXd cm1 = c_coefficients(g32, analysis_coefficients(f32, -1.0));
  CHECK(std::abs(cm1(0) - 1.0 / (2.0 * std::sqrt(6.0) * kPi)) < 1e-13);
  CHECK(std::abs(cm1(1) - std::sqrt(2.0) / (std::sqrt(15.0) * kPi)) < 1e-13);
  CHECK(std::abs(cm1(2) - std::sqrt(3.0 / 10.0) / (2.0 * kPi)) < 1e-13);

  // SU(2) closed form c = F / 2pi
  for (int twoj : {1, 2, 3, 4, 6}) {
    const TensorFamily f = TensorFamily::build(IrrepSpace(2, twoj));
    const Eigen::MatrixXd g = overlap_matrix(chi_table(f));
    for (double s : {-1.0, 0.0, 1.0}) {
      const Eigen::VectorXd fs = analysis_coefficients(f, s);
      const Eigen::VectorXd c = c_coefficients(g, fs);
      CHECK((c - fs / (2.0 * kPi)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("f golden values, SU(3) (1,0)") {
  const TensorFamily family = TensorFamily::build(IrrepSpace(3, 1));
  const ChiTable chi = chi_table(family);
  const Eigen::MatrixXd g = overlap_matrix(chi);
  auto rng = make_rng(33);
  for (int k = 0; k < 16; ++k) {
    const double w = 2.0 * kPi * uniform01(rng);
    const cd e1 = std::polar(1.0, w), e2 = std::polar(1.0, -2.0 * w);
    const Eigen::VectorXd cm1 = c_coefficients(g, analysis_coefficients(family, -1.0));
    const Eigen::VectorXd c0 = c_coefficients(g, analysis_coefficients(family, 0.0));
    const Eigen::VectorXd cp1 = c_coefficients(g, analysis_coefficients(family, 1.0));
    CHECK(std::abs(f_eval(chi, cm1, w) - e2 / (2.0 * kPi)) < 1e-13);
    CHECK(std::abs(f_eval(chi, c0, w) - (e1 + 2.0 * e2) / (8.0 * kPi)) < 1e-13);
    CHECK(std::abs(f_eval(chi, cp1, w) - (5.0 * e1 + 6.0 * e2) / (32.0 * kPi)) < 1e-13);
  }
}

TEST_CASE("f hermiticity") {
  auto rng = make_rng(41);
  for (int n : {2, 3}) {
    const TensorFamily family = TensorFamily::build(IrrepSpace(n, 2));
    const ChiTable chi = chi_table(family);
    const Eigen::MatrixXd g = overlap_matrix(chi);
    for (double s : {-1.0, 0.0, 0.5, 1.0}) {
      const Eigen::VectorXd c = c_coefficients(g, analysis_coefficients(family, s));
      for (int k = 0; k < 8; ++k) {
        const double w = 4.0 * kPi * (uniform01(rng) - 0.5);
        CHECK(std::abs(f_eval(chi, c, -w) - std::conj(f_eval(chi, c, w))) < 1e-12);
      }
    }
  }
}

TEST_CASE("P operator golden values") {
  const TensorFamily f31 = TensorFamily::build(IrrepSpace(3, 1));
  const Matrix p0 = p_operator(f31, 0.0, PRoute::direct);
  Matrix want = Matrix::Zero(3, 3);
  want.diagonal() << 0.5, 0.25, 0.25;
  CHECK((p0 - want).norm() < 1e-13);
  CHECK(std::abs(p0.trace() - cd(1.0)) < 1e-13);
}

TEST_CASE("P boundary condition at s = -1") {
  for (int n : {2, 3, 4}) {
    for (int lambda = 0; lambda <= 3; ++lambda) {
      if (n == 4 && lambda > 2) continue;
      const TensorFamily family = TensorFamily::build(IrrepSpace(n, lambda));
      const Matrix p = p_operator(family, -1.0, PRoute::direct);
      Matrix proj = Matrix::Zero(family.space().dim(), family.space().dim());
      proj(0, 0) = 1.0;
      CHECK((p - proj).norm() < 1e-12);
    }
  }
}

TEST_CASE("P route equivalence") {
  for (int n : {2, 3}) {
    for (int lambda : {1, 2}) {
      const TensorFamily family = TensorFamily::build(IrrepSpace(n, lambda));
      for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const Matrix a = p_operator(family, s, PRoute::direct);
        const Matrix b = p_operator(family, s, PRoute::integral);
        CHECK((a - b).norm() < 1e-10);
        CHECK(std::abs(b.trace() - cd(1.0)) < 1e-12);
        CHECK(b.diagonal().imag().cwiseAbs().maxCoeff() < 1e-13);
      }
    }
  }
}

TEST_CASE("SU(2) F closed form") {
  for (int twoj : {1, 2, 3, 4, 6}) {
    const TensorFamily family = TensorFamily::build(IrrepSpace(2, twoj));
    const double j = 0.5 * twoj;
    for (double s : {-1.0, 0.0, 1.0}) {
      const Eigen::VectorXd f = analysis_coefficients(family, s);
      for (int L = 0; L <= twoj; ++L) {
        const double cg = su2_cg(j, j, j, -j, L, 0);
        const double want = std::pow(cg, -s) / std::pow((twoj + 1.0) * (2.0 * L + 1.0),
                                                        0.5 * (s + 1.0));
        CHECK(std::abs(f(L) - want) < 1e-12);
      }
    }
  }
}

TEST_CASE("synthesis coefficients") {
  // forced by reconstructing the identity: G_0 = sqrt(dim)/vol
  for (int n : {2, 3}) {
    for (int lambda : {1, 2}) {
      const TensorFamily family = TensorFamily::build(IrrepSpace(n, lambda));
      const double vol = coset_volume(n);
      const double dim = static_cast<double>(family.space().dim());
      for (double s : {-1.0, 0.0, 1.0}) {
        const Eigen::VectorXd g = synthesis_coefficients(family, s);
        CHECK(std::abs(g(0) - std::sqrt(dim) / vol) < 1e-13);
        // ratio against the paper-verbatim dual coefficients:
        // G^(-s) / F^(-s) = dim(lambda) dim_sigma^2 / vol
        const Eigen::VectorXd g_dual = synthesis_coefficients(family, -s);
        const Eigen::VectorXd f_dual = analysis_coefficients(family, -s);
        for (int sigma = 0; sigma <= lambda; ++sigma) {
          const double db = static_cast<double>(family.block_dim(sigma));
          CHECK(std::abs(g_dual(sigma) / f_dual(sigma) - dim * db * db / vol) /
                    (dim * db * db / vol) <
                1e-12);
        }
      }
    }
  }
  // spelled-out j = 1/2 values at s = 0
  const TensorFamily fj = TensorFamily::build(IrrepSpace(2, 1));
  const Eigen::VectorXd g = synthesis_coefficients(fj, 0.0);
  CHECK(std::abs(g(0) - std::sqrt(2.0) / (4.0 * kPi)) < 1e-14);
  CHECK(std::abs(g(1) - 3.0 * std::sqrt(6.0) / (4.0 * kPi)) < 1e-13);
}

TEST_CASE("kernel_coefficients bundle") {
  const TensorFamily family = TensorFamily::build(IrrepSpace(3, 1));
  const KernelCoefficients k = kernel_coefficients(family, 0.0);
  CHECK(k.s == 0.0);
  CHECK(k.analysis.size() == 2);
  CHECK(k.expansion.size() == 2);
  CHECK(k.synthesis.size() == 2);
  CHECK((k.overlap * k.expansion - k.analysis).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("su2 reporting convention halves the exponents") {
  const TensorFamily family = TensorFamily::build(IrrepSpace(2, 3));  // j = 3/2
  const ChiTable generic = chi_table(family);
  const ChiTable su2 = chi_table(family, CartanConvention::su2);
  REQUIRE(generic.exponents.size() == su2.exponents.size());
  for (std::size_t k = 0; k < su2.exponents.size(); ++k)
    CHECK(su2.exponents[k] == 0.5 * generic.exponents[k]);
  CHECK((overlap_matrix(generic) - overlap_matrix(su2)).cwiseAbs().maxCoeff() < 1e-13);
  // chi in the S_z convention matches the CG sum over e^{i omega m}
  const double j = 1.5, w = 0.8317;
  for (int L = 0; L <= 3; ++L) {
    cd want = 0.0;
    for (int twom = -3; twom <= 3; twom += 2) {
      const double m = 0.5 * twom;
      const int par = static_cast<int>(std::llround(j - m));
      want += su2_cg(j, m, j, -m, L, 0) * (par % 2 ? -1.0 : 1.0) * std::polar(1.0, w * m);
    }
    CHECK(std::abs(chi_tilde(su2, L, w) - want) < 1e-13);
  }
}
