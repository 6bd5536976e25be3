#include <doctest.h>

#include <numbers>

#include "sunphase/irrep.hpp"

using namespace sunphase;

namespace {
double comm_residual(const Matrix& a, const Matrix& b, const Matrix& expect) {
  return (a * b - b * a - expect).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("dim_symmetric") {
  CHECK(dim_symmetric(3, 1) == 3);
  CHECK(dim_symmetric(2, 5) == 6);
  CHECK(dim_symmetric(4, 2) == 10);
  CHECK(dim_symmetric(3, 2) == 6);
  CHECK(dim_symmetric(3, 0) == 1);
  for (int lambda = 0; lambda <= 4; ++lambda)
    CHECK(dim_symmetric(3, lambda) == (lambda + 1) * (lambda + 2) / 2);
}

TEST_CASE("enumerate_basis ordering") {
  const auto b31 = enumerate_basis(3, 1);
  REQUIRE(b31.size() == 3);
  CHECK(b31[0].nu == std::vector<int>{1, 0, 0});
  CHECK(b31[1].nu == std::vector<int>{0, 1, 0});
  CHECK(b31[2].nu == std::vector<int>{0, 0, 1});

  const auto b32 = enumerate_basis(3, 2);
  const std::vector<std::vector<int>> want = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                              {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  REQUIRE(b32.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) CHECK(b32[k].nu == want[k]);

  const auto b22 = enumerate_basis(2, 2);
  REQUIRE(b22.size() == 3);
  CHECK(b22[0].nu == std::vector<int>{2, 0});
  CHECK(b22[1].nu == std::vector<int>{1, 1});
  CHECK(b22[2].nu == std::vector<int>{0, 2});

  // distinct, all sum to lambda, count matches the dimension formula
  for (int n : {2, 3, 4})
    for (int lambda : {0, 1, 2, 3}) {
      const auto b = enumerate_basis(n, lambda);
      CHECK(static_cast<long>(b.size()) == dim_symmetric(n, lambda));
      for (std::size_t k = 0; k < b.size(); ++k) {
        int sum = 0;
        for (int v : b[k].nu) sum += v;
        CHECK(sum == lambda);
        if (k) CHECK(b[k - 1].nu > b[k].nu);
      }
    }
}

TEST_CASE("generator matrix elements") {
  IrrepSpace s21(2, 1);
  const Matrix e12 = s21.generator(1, 2);
  CHECK(std::abs(e12(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(e12(0, 0)) + std::abs(e12(1, 0)) + std::abs(e12(1, 1)) < 1e-15);

  IrrepSpace s31(3, 1);
  const long from = s31.index_of({0, 1, 0});
  const long to = s31.index_of({1, 0, 0});
  CHECK(std::abs(s31.generator(1, 2)(to, from) - 1.0) < 1e-15);

  IrrepSpace s32(3, 2);
  CHECK(std::abs(s32.generator(1, 2)(s32.index_of({2, 0, 0}), s32.index_of({1, 1, 0})) -
                 std::sqrt(2.0)) < 1e-15);

  CHECK((s31.generator(1, 2) - s31.generator(2, 1).adjoint()).norm() < 1e-15);
  CHECK_THROWS_AS((void)s31.generator(0, 1), std::out_of_range);
  CHECK_THROWS_AS((void)s31.generator(1, 4), std::out_of_range);
}

TEST_CASE("invariant Cartan element") {
  IrrepSpace s31(3, 1);
  const RealVector h31 = s31.h1_diagonal();
  CHECK(h31(0) == 2.0);
  CHECK(h31(1) == -1.0);
  CHECK(h31(2) == -1.0);

  IrrepSpace s32(3, 2);
  RealVector h32 = s32.h1_diagonal();
  std::vector<double> eigs(h32.data(), h32.data() + h32.size());
  std::sort(eigs.begin(), eigs.end());
  CHECK(eigs == std::vector<double>{-2, -2, -2, 1, 1, 4});

  IrrepSpace s23(2, 3);
  const RealVector generic = s23.h1_diagonal();
  const RealVector sz = s23.h1_diagonal(CartanConvention::su2);
  for (long a = 0; a < s23.dim(); ++a) {
    const double m = 0.5 * (s23.basis()[a].nu[0] - s23.basis()[a].nu[1]);
    CHECK(generic(a) == 2.0 * m);
    CHECK(sz(a) == m);
  }
  CHECK_THROWS_AS((void)s31.h1_diagonal(CartanConvention::su2), std::invalid_argument);
}

TEST_CASE("h1 ladder relation and commutation closure") {
  for (int n : {2, 3, 4}) {
    for (int lambda : {1, 2, 3}) {
      IrrepSpace space(n, lambda);
      const Matrix h1 = space.cartan_h1();
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          const Matrix e = space.generator(i, j);
          const double c = n * ((i == 1 ? 1.0 : 0.0) - (j == 1 ? 1.0 : 0.0));
          CHECK(comm_residual(h1, e, c * e) < 1e-12);

          Matrix diag = Matrix::Zero(space.dim(), space.dim());
          for (long a = 0; a < space.dim(); ++a)
            diag(a, a) = space.basis()[a].nu[i - 1] - space.basis()[a].nu[j - 1];
          CHECK(comm_residual(e, space.generator(j, i), diag) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("h1 commutes with the stabilizer algebra") {
  IrrepSpace space(3, 2);
  const Matrix h1 = space.cartan_h1();
  const Matrix zero = Matrix::Zero(space.dim(), space.dim());
  CHECK(comm_residual(h1, space.generator(2, 3), zero) < 1e-12);
  CHECK(comm_residual(h1, space.generator(3, 2), zero) < 1e-12);
}
