#include "sunphase/coset.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sunphase {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix exp_i_hermitian(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("exp_i_hermitian: eigendecomposition failed");
  Eigen::VectorXcd phases(h.rows());
  for (long k = 0; k < h.rows(); ++k) phases(k) = std::polar(1.0, es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double uniform01(std::mt19937_64& rng) {
  // [0,1) from the top 53 bits of the raw generator.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

cd complex_normal(std::mt19937_64& rng) {
  // Box-Muller; both components used as one complex normal.
  double u1 = uniform01(rng);
  while (u1 == 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
}

CosetPoint CosetPoint::identity(int n) {
  CosetPoint p;
  if (n <= 3) {
    p.angles.assign(n == 2 ? 2 : 4, 0.0);
  } else {
    p.defining = Matrix::Identity(n, n);
  }
  return p;
}

double coset_volume(int n) {
  if (n < 2) throw std::invalid_argument("coset_volume: n must be >= 2");
  double vol = std::pow(2.0, n) * std::pow(kPi, n - 1);
  for (int k = 2; k <= n - 1; ++k) vol /= k;
  return vol;  // 4pi, 4pi^2, 8pi^3/3, ...
}

void gauss_legendre(int npts, std::vector<double>& nodes, std::vector<double>& weights) {
  if (npts < 1) throw std::invalid_argument("gauss_legendre: npts must be >= 1");
  // Golub-Welsch on the Legendre Jacobi matrix.
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(npts, npts);
  for (int k = 1; k < npts; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jac(k, k - 1) = b;
    jac(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  nodes.resize(npts);
  weights.resize(npts);
  for (int k = 0; k < npts; ++k) {
    nodes[k] = es.eigenvalues()(k);
    const double v0 = es.eigenvectors()(0, k);
    weights[k] = 2.0 * v0 * v0;
  }
}

std::vector<int> default_grid_resolution(int n, int lambda) {
  if (n == 2) return {2 * lambda + 3, lambda + 2};
  if (n == 3) return {4 * lambda + 5, 2 * lambda + 3, 4 * lambda + 5, 2 * lambda + 3};
  throw std::invalid_argument("default_grid_resolution: exact grids exist for n = 2, 3 only");
}

CosetGrid coset_grid(int n, const std::vector<int>& resolution) {
  if (n != 2 && n != 3)
    throw std::invalid_argument("coset_grid: exact grids exist for n = 2, 3 only");
  const std::size_t want = n == 2 ? 2 : 4;
  if (resolution.size() != want)
    throw std::invalid_argument("coset_grid: resolution needs one count per angle");
  for (int r : resolution)
    if (r < 1) throw std::invalid_argument("coset_grid: resolution must be >= 1");

  CosetGrid grid;
  grid.n = n;
  grid.resolution = resolution;
  grid.volume = coset_volume(n);

  if (n == 2) {
    const int na = resolution[0], nb = resolution[1];
    std::vector<double> x, w;
    gauss_legendre(nb, x, w);
    grid.points.reserve(static_cast<std::size_t>(na) * nb);
    for (int a = 0; a < na; ++a) {
      const double alpha = 2.0 * kPi * a / na;
      for (int b = 0; b < nb; ++b) {
        const double beta = std::acos(x[b]);
        grid.points.push_back(CosetPoint{{alpha, beta}, {}});
        grid.weights.push_back((2.0 * kPi / na) * w[b]);
      }
    }
    return grid;
  }

  const int na1 = resolution[0], nb1 = resolution[1];
  const int na2 = resolution[2], nb2 = resolution[3];
  std::vector<double> x1, w1, xv, wv;
  gauss_legendre(nb1, x1, w1);
  gauss_legendre(nb2, xv, wv);
  // beta_2 nodes in v = sin^2(beta_2/2); measure cos(b2/2) sin^3(b2/2) db2 = v dv.
  std::vector<double> b2(nb2), wb2(nb2);
  for (int q = 0; q < nb2; ++q) {
    const double v = 0.5 * (xv[q] + 1.0);
    b2[q] = 2.0 * std::asin(std::sqrt(v));
    wb2[q] = 0.5 * wv[q] * v;
  }
  grid.points.reserve(static_cast<std::size_t>(na1) * nb1 * na2 * nb2);
  for (int a1 = 0; a1 < na1; ++a1) {
    const double alpha1 = 2.0 * kPi * a1 / na1;
    for (int q1 = 0; q1 < nb1; ++q1) {
      const double beta1 = std::acos(x1[q1]);
      for (int a2 = 0; a2 < na2; ++a2) {
        const double alpha2 = 2.0 * kPi * a2 / na2;
        for (int q2 = 0; q2 < nb2; ++q2) {
          grid.points.push_back(CosetPoint{{alpha1, beta1, alpha2, b2[q2]}, {}});
          grid.weights.push_back((2.0 * kPi / na1) * w1[q1] * (2.0 * kPi / na2) * wb2[q2]);
        }
      }
    }
  }
  return grid;
}

CosetGrid coset_grid_monte_carlo(int n, int npoints, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("coset_grid_monte_carlo: n must be >= 2");
  if (npoints < 1) throw std::invalid_argument("coset_grid_monte_carlo: npoints must be >= 1");
  CosetGrid grid;
  grid.n = n;
  grid.volume = coset_volume(n);
  grid.monte_carlo = true;
  std::mt19937_64 rng(seed);
  const double w = grid.volume / npoints;
  grid.points.reserve(npoints);
  for (int k = 0; k < npoints; ++k) {
    grid.points.push_back(random_coset_point(n, rng));
    grid.weights.push_back(w);
  }
  return grid;
}

GroupElement coset_element(const IrrepSpace& space, const CosetPoint& p) {
  const int n = space.n();
  GroupElement g;
  g.params = p;
  if (n <= 3) {
    const std::size_t want = n == 2 ? 2 : 4;
    if (p.angles.size() != want)
      throw std::invalid_argument("coset_element: wrong angle count for n");
    for (std::size_t k = 0; k < want; k += 2) {
      if (p.angles[k] < 0.0 || p.angles[k] >= 2.0 * kPi + 1e-12)
        throw std::out_of_range("coset_element: alpha out of [0, 2pi)");
      if (p.angles[k + 1] < 0.0 || p.angles[k + 1] > kPi + 1e-12)
        throw std::out_of_range("coset_element: beta out of [0, pi]");
    }
    if (n == 2) {
      g.matrix = space.rotation(1, 2, p.angles[0], p.angles[1], 0.0);
    } else {
      g.matrix = space.rotation(2, 3, p.angles[0], p.angles[1], -p.angles[0]) *
                 space.rotation(1, 2, p.angles[2], p.angles[3], -p.angles[2]);
    }
    return g;
  }
  if (p.defining.rows() != n || p.defining.cols() != n)
    throw std::invalid_argument("coset_element: defining representative has wrong size");
  g.matrix = lift_defining(space, p.defining);
  return g;
}

Matrix lift_defining(const IrrepSpace& space, const Matrix& u) {
  const int n = space.n();
  // Principal logarithm of the unitary.
  Eigen::ComplexEigenSolver<Matrix> es(u);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("lift_defining: eigendecomposition failed");
  Eigen::VectorXcd logs(n);
  for (int k = 0; k < n; ++k) logs(k) = cd(0.0, std::arg(es.eigenvalues()(k)));
  Matrix a = es.eigenvectors() * logs.asDiagonal() *
             es.eigenvectors().inverse();
  a = 0.5 * (a - a.adjoint()).eval();  // clean to anti-Hermitian

  // Lie algebra lift e_ij -> a_i^dag a_j, then exponentiate.
  const long d = space.dim();
  Matrix m = Matrix::Zero(d, d);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const cd c = a(i - 1, j - 1);
      if (std::abs(c) < 1e-300) continue;
      m += c * (i == j ? space.number_operator(i) : space.generator(i, j));
    }
  }
  return exp_i_hermitian((m / cd(0.0, 1.0)).eval());
}

Matrix haar_su_n(int n, std::mt19937_64& rng) {
  Matrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = complex_normal(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n; ++c) {
    const cd d = r(c, c);
    q.col(c) *= d / std::abs(d);
  }
  // project U(n) -> SU(n)
  const cd det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / n);
  return q;
}

CosetPoint random_coset_point(int n, std::mt19937_64& rng) {
  CosetPoint p;
  if (n == 2) {
    p.angles = {2.0 * kPi * uniform01(rng), std::acos(1.0 - 2.0 * uniform01(rng))};
  } else if (n == 3) {
    const double v = std::sqrt(uniform01(rng));  // density v dv on [0,1]
    p.angles = {2.0 * kPi * uniform01(rng), std::acos(1.0 - 2.0 * uniform01(rng)),
                2.0 * kPi * uniform01(rng), 2.0 * std::asin(std::sqrt(v))};
  } else {
    p.defining = haar_su_n(n, rng);
  }
  return p;
}

Matrix random_stabilizer_element(const IrrepSpace& space, std::mt19937_64& rng) {
  const int n = space.n();
  // Hermitian generators of the U(n-1) stabilizer of the h.w. projector:
  // h1, the Cartans H_k (k >= 2), and the off-diagonal pairs in modes >= 2.
  Matrix h = (2.0 * uniform01(rng) - 1.0) * space.cartan_h1();
  for (int k = 2; k <= n - 1; ++k)
    h += (2.0 * uniform01(rng) - 1.0) * space.cartan(k);
  for (int j = 2; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      const Matrix e = space.generator(j, k);
      const Matrix et = space.generator(k, j);
      h += (2.0 * uniform01(rng) - 1.0) * 0.5 * (e + et);
      h += (2.0 * uniform01(rng) - 1.0) * (e - et) / cd(0.0, 2.0);
    }
  }
  return exp_i_hermitian(h);
}

}  // namespace sunphase
