#include "sunphase/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sunphase {

namespace {

constexpr double kPi = std::numbers::pi;

// Fixed chunk count for parallel reductions: partial sums are combined in
// chunk order, so results do not depend on the thread count.
constexpr int kReductionChunks = 64;

double frob(const Matrix& m) { return m.norm(); }

// Tr(X Lambda P Lambda^dag) for diagonal real P.
cd point_symbol(const Matrix& x, const Matrix& lambda, const RealVector& pdiag) {
  const Matrix y = x * lambda;
  cd w = 0.0;
  for (long k = 0; k < lambda.cols(); ++k)
    w += pdiag(k) * lambda.col(k).dot(y.col(k));
  return w;
}

// Euler angles of a 2x2 SU(2) element u = e^{ia Jz} e^{ib Jy} e^{ic Jz};
// returns the coset part (a, b).
std::pair<double, double> su2_coset_angles(const Matrix& u) {
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(0, 1));
  const double beta = 2.0 * std::atan2(s, c);
  double alpha = std::arg(u(0, 0)) + std::arg(u(0, 1));
  if (alpha < 0.0) alpha += 2.0 * kPi;
  if (alpha >= 2.0 * kPi) alpha -= 2.0 * kPi;
  return {alpha, beta};
}

}  // namespace

GridAtlas build_atlas_serial(const IrrepSpace& space, const CosetGrid& grid) {
  GridAtlas atlas;
  atlas.elements.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    atlas.elements[i] = coset_element(space, grid.points[i]).matrix;
  return atlas;
}

GridAtlas build_atlas(const IrrepSpace& space, const CosetGrid& grid) {
  GridAtlas atlas;
  atlas.elements.resize(grid.size());
  const long count = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i)
    atlas.elements[static_cast<std::size_t>(i)] =
        coset_element(space, grid.points[static_cast<std::size_t>(i)]).matrix;
  return atlas;
}

Matrix kernel_at(const Matrix& p, const GroupElement& lambda) {
  if (p.rows() != p.cols() || p.rows() != lambda.matrix.rows())
    throw std::invalid_argument("kernel_at: dimension mismatch");
  return lambda.matrix * p * lambda.matrix.adjoint();
}

SymbolField symbol_field_serial(const Matrix& x, double s, const TensorFamily& family,
                                const GridAtlas& atlas, std::string source) {
  if (x.rows() != x.cols() || x.rows() != family.space().dim())
    throw std::invalid_argument("symbol_field: operator dimension mismatch");
  const RealVector pdiag = p_operator(family, s, PRoute::direct).diagonal().real();
  SymbolField field;
  field.s = s;
  field.source = std::move(source);
  field.values.resize(atlas.size());
  for (std::size_t i = 0; i < atlas.size(); ++i)
    field.values[i] = point_symbol(x, atlas.elements[i], pdiag);
  return field;
}

SymbolField symbol_field(const Matrix& x, double s, const TensorFamily& family,
                         const GridAtlas& atlas, std::string source) {
  if (x.rows() != x.cols() || x.rows() != family.space().dim())
    throw std::invalid_argument("symbol_field: operator dimension mismatch");
  const RealVector pdiag = p_operator(family, s, PRoute::direct).diagonal().real();
  SymbolField field;
  field.s = s;
  field.source = std::move(source);
  field.values.resize(atlas.size());
  const long count = static_cast<long>(atlas.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i)
    field.values[static_cast<std::size_t>(i)] =
        point_symbol(x, atlas.elements[static_cast<std::size_t>(i)], pdiag);
  return field;
}

Matrix reconstruct_serial(const SymbolField& field, const TensorFamily& family,
                          const CosetGrid& grid, const GridAtlas& atlas,
                          ReconstructionMode mode) {
  if (field.values.size() != grid.size() || grid.size() != atlas.size())
    throw std::invalid_argument("reconstruct: field/grid size mismatch");
  const long d = family.space().dim();
  const Matrix dual = mode == ReconstructionMode::consistent
                          ? synthesis_operator(family, -field.s)
                          : p_operator(family, -field.s, PRoute::direct);
  Matrix x = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Matrix& lam = atlas.elements[i];
    x += (grid.weights[i] * field.values[i]) * (lam * dual * lam.adjoint());
  }
  return x;
}

Matrix reconstruct(const SymbolField& field, const TensorFamily& family,
                   const CosetGrid& grid, const GridAtlas& atlas, ReconstructionMode mode) {
  if (field.values.size() != grid.size() || grid.size() != atlas.size())
    throw std::invalid_argument("reconstruct: field/grid size mismatch");
  const long d = family.space().dim();
  const Matrix dual = mode == ReconstructionMode::consistent
                          ? synthesis_operator(family, -field.s)
                          : p_operator(family, -field.s, PRoute::direct);
  const RealVector dual_diag = dual.diagonal().real();
  const long count = static_cast<long>(grid.size());
  std::vector<Matrix> partial(kReductionChunks, Matrix::Zero(d, d));
#pragma omp parallel for schedule(static)
  for (int chunk = 0; chunk < kReductionChunks; ++chunk) {
    const long lo = count * chunk / kReductionChunks;
    const long hi = count * (chunk + 1) / kReductionChunks;
    Matrix acc = Matrix::Zero(d, d);
    Matrix scaled(d, d);
    Eigen::VectorXcd diag(d);
    for (long i = lo; i < hi; ++i) {
      const Matrix& lam = atlas.elements[static_cast<std::size_t>(i)];
      const cd c = grid.weights[static_cast<std::size_t>(i)] *
                   field.values[static_cast<std::size_t>(i)];
      diag = c * dual_diag.cast<cd>();
      scaled.noalias() = lam * diag.asDiagonal();
      acc.noalias() += scaled * lam.adjoint();
    }
    partial[static_cast<std::size_t>(chunk)] = std::move(acc);
  }
  Matrix x = Matrix::Zero(d, d);
  for (const Matrix& m : partial) x += m;
  return x;
}

Eigen::VectorXd verbatim_distortion(const TensorFamily& family, const CosetGrid& grid,
                                    const GridAtlas& atlas, double s) {
  Eigen::VectorXd factor(family.sigma_count());
  for (int sigma = 0; sigma < family.sigma_count(); ++sigma) {
    const Matrix& t = family.zero_weight_invariant(sigma);
    const SymbolField field = symbol_field(t, s, family, atlas);
    const Matrix rec = reconstruct(field, family, grid, atlas, ReconstructionMode::paper_verbatim);
    const cd overlap = (t.adjoint() * rec).trace();  // Tr(T^dag rec), true value 1
    factor(sigma) = 1.0 / overlap.real();
  }
  return factor;
}

AxiomReport axiom_report(const IrrepSpace& space, const TensorFamily& family, double s,
                         const CosetGrid& grid, const GridAtlas& atlas, int n_samples,
                         std::uint64_t seed, double tol_axiom, double tol_traciality) {
  AxiomReport report;
  report.s = s;
  report.samples = n_samples;
  report.normalization = {"normalization", 0.0, tol_axiom};
  report.hermiticity = {"hermiticity", 0.0, tol_axiom};
  report.covariance = {"covariance", 0.0, tol_axiom};
  report.traciality = {"dual-overlap traciality", 0.0, tol_traciality};

  std::mt19937_64 rng(seed);
  const Matrix p = p_operator(family, s, PRoute::direct);
  const long d = space.dim();
  const IrrepSpace defining(space.n(), 1);

  for (int k = 0; k < n_samples; ++k) {
    const GroupElement lam = coset_element(space, random_coset_point(space.n(), rng));
    const Matrix w = kernel_at(p, lam);
    report.normalization.deviation =
        std::max(report.normalization.deviation, std::abs(w.trace() - cd(1.0)));
    report.hermiticity.deviation =
        std::max(report.hermiticity.deviation, frob(w - w.adjoint()));

    // Covariance: move w by a second coset element, compare against the
    // kernel at the composed point. The composed group element equals
    // coset x H; the H factor is absorbed because P is H-invariant, and we
    // make that absorption explicit rather than assumed.
    const GroupElement move = coset_element(space, random_coset_point(space.n(), rng));
    const Matrix lhs = move.matrix * w * move.matrix.adjoint();
    Matrix rhs;
    if (space.n() == 2) {
      // Re-extract the coset angles of the composed element from its
      // defining-irrep counterpart.
      const Matrix u2 = coset_element(defining, move.params).matrix *
                        coset_element(defining, lam.params).matrix;
      const auto [alpha, beta] = su2_coset_angles(u2);
      rhs = kernel_at(p, coset_element(space, CosetPoint{{alpha, beta}, {}}));
    } else {
      const Matrix composed = move.matrix * lam.matrix * random_stabilizer_element(space, rng);
      rhs = composed * p * composed.adjoint();
    }
    report.covariance.deviation = std::max(report.covariance.deviation, frob(lhs - rhs));
  }

  const RealVector dual_diag = synthesis_operator(family, -s).diagonal().real();
  for (int k = 0; k < std::max(1, n_samples / 4); ++k) {
    const Matrix x = random_matrix(d, rng);
    const Matrix y = random_matrix(d, rng);
    const SymbolField wx = symbol_field(x, s, family, atlas);
    cd integral = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const cd vy = point_symbol(y, atlas.elements[i], dual_diag);
      integral += grid.weights[i] * std::conj(wx.values[i]) * vy;
    }
    const cd exact = (x.adjoint() * y).trace();
    report.traciality.deviation =
        std::max(report.traciality.deviation, std::abs(integral - exact));
  }
  return report;
}

Matrix random_matrix(long dim, std::mt19937_64& rng) {
  Matrix m(dim, dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) m(r, c) = complex_normal(rng);
  return m;
}

Matrix random_hermitian(long dim, std::mt19937_64& rng) {
  const Matrix m = random_matrix(dim, rng);
  return 0.5 * (m + m.adjoint());
}

Matrix random_density(long dim, std::mt19937_64& rng) {
  const Matrix g = random_matrix(dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

}  // namespace sunphase
