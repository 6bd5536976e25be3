#include "sunphase/tensor_family.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace sunphase {

namespace {

// ad(A) acting on vectorized (column-major) operators: I (x) A - A^T (x) I.
Matrix ad_superop(const Matrix& a) {
  const long d = a.rows();
  const long dd = d * d;
  Matrix s = Matrix::Zero(dd, dd);
  // vec index (r, c) -> c*d + r
  for (long c = 0; c < d; ++c)
    for (long r = 0; r < d; ++r)
      for (long p = 0; p < d; ++p) {
        s(c * d + r, c * d + p) += a(r, p);        // A X
        s(p * d + r, c * d + r) -= a(c, p);        // - X A
      }
  return s;
}

Eigen::VectorXcd vec_of(const Matrix& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

Matrix mat_of(const Eigen::VectorXcd& v, long d) {
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

long expected_block_dim(int n, int sigma) {
  if (sigma == 0) return 1;
  const long a = dim_symmetric(n, sigma);
  const long b = dim_symmetric(n, sigma - 1);
  return a * a - b * b;  // (sigma+1)^3 for n = 3, 2*sigma+1 for n = 2
}

// Rotate a tensor's global phase so its first maximal-modulus entry
// (row-major scan, 1e-12 relative slack) becomes real positive.
void fix_phase_by_max_entry(Matrix& t) {
  double best = 0.0;
  for (long r = 0; r < t.rows(); ++r)
    for (long c = 0; c < t.cols(); ++c) best = std::max(best, std::abs(t(r, c)));
  for (long r = 0; r < t.rows(); ++r)
    for (long c = 0; c < t.cols(); ++c) {
      if (std::abs(t(r, c)) >= best * (1.0 - 1e-12)) {
        t *= std::conj(t(r, c)) / std::abs(t(r, c));
        return;
      }
    }
}

constexpr int kMaxFact = 64;

long double lfactorial(int n) {
  static const auto table = [] {
    std::array<long double, kMaxFact> f{};
    f[0] = 1.0L;
    for (int k = 1; k < kMaxFact; ++k) f[k] = f[k - 1] * k;
    return f;
  }();
  return table.at(n);
}

}  // namespace

std::string to_string(const TensorLabel& label) {
  std::ostringstream os;
  os << "T(" << label.sigma << ";[";
  for (std::size_t k = 0; k < label.weight.size(); ++k)
    os << (k ? "," : "") << label.weight[k];
  os << "]," << label.mult << ")";
  return os.str();
}

double su2_cg(double j1, double m1, double j2, double m2, double jj, double mm) {
  for (double x : {j1, m1, j2, m2, jj, mm})
    if (std::abs(2.0 * x - std::llround(2.0 * x)) > 1e-9) return 0.0;  // not half-integer
  auto twice = [](double x) { return static_cast<long>(std::llround(2.0 * x)); };
  const long tj1 = twice(j1), tm1 = twice(m1), tj2 = twice(j2), tm2 = twice(m2);
  const long tj = twice(jj), tm = twice(mm);
  if (tj1 < 0 || tj2 < 0 || tj < 0) return 0.0;
  if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj + tm) % 2 != 0) return 0.0;
  if (tm1 + tm2 != tm) return 0.0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm) > tj) return 0.0;
  if (tj > tj1 + tj2 || tj < std::labs(tj1 - tj2)) return 0.0;
  if ((tj1 + tj2 + tj) % 2 != 0) return 0.0;

  // Everything below is integer-valued.
  const int a = static_cast<int>((tj1 + tj2 - tj) / 2);
  const int b = static_cast<int>((tj1 - tj2 + tj) / 2);
  const int c = static_cast<int>((-tj1 + tj2 + tj) / 2);
  const int per = static_cast<int>((tj1 + tj2 + tj) / 2);
  const int j1p = static_cast<int>((tj1 + tm1) / 2), j1m = static_cast<int>((tj1 - tm1) / 2);
  const int j2p = static_cast<int>((tj2 + tm2) / 2), j2m = static_cast<int>((tj2 - tm2) / 2);
  const int jp = static_cast<int>((tj + tm) / 2), jm = static_cast<int>((tj - tm) / 2);

  const long double pref =
      std::sqrt(static_cast<long double>(tj + 1) * lfactorial(a) * lfactorial(b) *
                lfactorial(c) / lfactorial(per + 1) * lfactorial(jp) * lfactorial(jm) *
                lfactorial(j1p) * lfactorial(j1m) * lfactorial(j2p) * lfactorial(j2m));

  const int k_lo = std::max({0, j2p - jp, j1m - jm});
  const int k_hi = std::min({a, j1m, j2p});
  long double sum = 0.0L;
  for (int k = k_lo; k <= k_hi; ++k) {
    const long double term = 1.0L / (lfactorial(k) * lfactorial(a - k) * lfactorial(j1m - k) *
                                     lfactorial(j2p - k) * lfactorial(jp - j2p + k) *
                                     lfactorial(jm - j1m + k));
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(pref * sum);
}

TensorFamily TensorFamily::build(const IrrepSpace& space) {
  const int n = space.n();
  const int lambda = space.lambda();
  const long d = space.dim();
  const long dd = d * d;

  // Adjoint quadratic Casimir K and the U(n-1) counterpart K_H, as
  // superoperators on the Hilbert-Schmidt space.
  Matrix casimir = Matrix::Zero(dd, dd);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      casimir += ad_superop(space.generator(i, j)) * ad_superop(space.generator(j, i));
    }
  {
    // Gram-corrected Cartan part: G_kl = Tr_def(H_k H_l) = 2 d_kl - [|k-l|=1].
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n - 1, n - 1);
    for (int k = 0; k < n - 1; ++k) {
      gram(k, k) = 2.0;
      if (k > 0) gram(k, k - 1) = gram(k - 1, k) = -1.0;
    }
    const Eigen::MatrixXd ginv = gram.ldlt().solve(Eigen::MatrixXd::Identity(n - 1, n - 1));
    std::vector<Matrix> ad_h;
    for (int k = 1; k <= n - 1; ++k) ad_h.push_back(ad_superop(space.cartan(k)));
    for (int k = 0; k < n - 1; ++k)
      for (int l = 0; l < n - 1; ++l)
        casimir += ginv(k, l) * ad_h[static_cast<std::size_t>(k)] * ad_h[static_cast<std::size_t>(l)];
  }
  Matrix casimir_h = Matrix::Zero(dd, dd);
  for (int i = 2; i <= n; ++i) {
    const Matrix ad_num = ad_superop(space.number_operator(i));
    casimir_h += ad_num * ad_num;
    for (int j = 2; j <= n; ++j) {
      if (i == j) continue;
      casimir_h += ad_superop(space.generator(i, j)) * ad_superop(space.generator(j, i));
    }
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(casimir);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("TensorFamily: Casimir eigendecomposition failed");
  const Eigen::VectorXd evals = es.eigenvalues();

  // Cluster ascending eigenvalues into sigma blocks.
  std::vector<std::pair<long, long>> blocks;  // [begin, end)
  long begin = 0;
  for (long k = 1; k <= dd; ++k) {
    if (k == dd || evals(k) - evals(k - 1) > 1e-8 * (1.0 + std::abs(evals(k)))) {
      blocks.emplace_back(begin, k);
      begin = k;
    }
  }
  if (static_cast<int>(blocks.size()) != lambda + 1) {
    std::ostringstream os;
    os << "TensorFamily: found " << blocks.size() << " Casimir blocks, expected "
       << lambda + 1 << " for (n=" << n << ", lambda=" << lambda << ")";
    throw structural_error(os.str());
  }
  for (int sigma = 0; sigma <= lambda; ++sigma) {
    const long got = blocks[sigma].second - blocks[sigma].first;
    if (got != expected_block_dim(n, sigma)) {
      std::ostringstream os;
      os << "TensorFamily: sigma=" << sigma << " block has dimension " << got
         << ", expected " << expected_block_dim(n, sigma);
      throw structural_error(os.str());
    }
  }
  if (std::abs(evals(0)) > 1e-8)
    throw structural_error("TensorFamily: scalar block eigenvalue is not 0");

  // Weight sector of each vectorized component, encoded as one integer.
  std::vector<Eigen::VectorXd> cartan_diag;  // per state, per Cartan direction
  for (int k = 1; k <= n - 1; ++k) {
    Eigen::VectorXd h(d);
    for (long a = 0; a < d; ++a) h(a) = space.basis()[a].weight(k - 1);
    cartan_diag.push_back(std::move(h));
  }
  const long base = 4L * lambda + 1;
  Eigen::VectorXd weight_code(dd);
  for (long c = 0; c < d; ++c)
    for (long r = 0; r < d; ++r) {
      long code = 0;
      for (int k = n - 2; k >= 0; --k) {
        const long w = std::lround(cartan_diag[k](r) - cartan_diag[k](c));
        code = code * base + (w + 2L * lambda);
      }
      weight_code(c * d + r) = static_cast<double>(code);
    }
  auto decode_weight = [&](long code) {
    std::vector<int> w(n - 1);
    for (int k = 0; k < n - 1; ++k) {
      w[k] = static_cast<int>(code % base - 2L * lambda);
      code /= base;
    }
    return w;
  };

  TensorFamily family(space);
  family.zero_weight_index_.assign(lambda + 1, -1);
  family.hw_coeff_.assign(lambda + 1, 0.0);
  family.block_begin_.assign(lambda + 2, 0);

  struct Entry {
    TensorLabel label;
    Eigen::VectorXcd vec;
  };

  for (int sigma = 0; sigma <= lambda; ++sigma) {
    const long m = blocks[sigma].second - blocks[sigma].first;
    const Matrix basis = es.eigenvectors().middleCols(blocks[sigma].first, m);

    // Split the block into weight sectors: the block subspace is invariant
    // under the diagonal weight-code superoperator, whose eigenvalues are
    // exact integers.
    const Matrix wrestricted =
        basis.adjoint() * (weight_code.cast<cd>().asDiagonal() * basis);
    Eigen::SelfAdjointEigenSolver<Matrix> ws(wrestricted);
    if (ws.info() != Eigen::Success)
      throw std::runtime_error("TensorFamily: weight splitting failed");
    const Matrix rotated = basis * ws.eigenvectors();

    std::vector<Entry> entries;
    long k = 0;
    while (k < m) {
      const long code = std::lround(ws.eigenvalues()(k));
      if (std::abs(ws.eigenvalues()(k) - code) > 1e-6)
        throw structural_error("TensorFamily: non-integral weight code");
      long kk = k;
      while (kk < m && std::lround(ws.eigenvalues()(kk)) == code) ++kk;
      const long mult = kk - k;
      const std::vector<int> weight = decode_weight(code);

      Matrix sector = rotated.middleCols(k, mult);
      if (mult > 1) {
        // Resolve copies of a repeated weight by the U(n-1) adjoint Casimir,
        // ascending, so the H-scalar copy (eigenvalue 0) gets index 0.
        Eigen::SelfAdjointEigenSolver<Matrix> hs(sector.adjoint() * casimir_h * sector);
        if (hs.info() != Eigen::Success)
          throw std::runtime_error("TensorFamily: multiplicity splitting failed");
        sector = sector * hs.eigenvectors();
      }
      for (long q = 0; q < mult; ++q)
        entries.push_back(Entry{TensorLabel{sigma, weight, static_cast<int>(q)}, sector.col(q)});
      k = kk;
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      if (a.label.weight != b.label.weight) return a.label.weight > b.label.weight;
      return a.label.mult < b.label.mult;
    });

    family.block_begin_[sigma] = family.tensors_.size();
    const std::vector<int> zero(n - 1, 0);
    for (auto& e : entries) {
      Matrix t = mat_of(e.vec, d);
      if (e.label.weight == zero && e.label.mult == 0) {
        // H-scalar: phase-fix by the highest-weight matrix element.
        const cd hw = t(0, 0);
        if (std::abs(hw) < 1e-12)
          throw structural_error("TensorFamily: phase fixing failed, vanishing h.w. element of " +
                                 to_string(e.label));
        t *= std::conj(hw) / std::abs(hw);
        family.zero_weight_index_[sigma] = static_cast<long>(family.tensors_.size());
        family.hw_coeff_[sigma] = t(0, 0).real();
      } else {
        fix_phase_by_max_entry(t);
      }
      family.labels_.push_back(e.label);
      family.tensors_.push_back(std::move(t));
    }
  }
  family.block_begin_[lambda + 1] = family.tensors_.size();

  for (int sigma = 0; sigma <= lambda; ++sigma)
    if (family.zero_weight_index_[sigma] < 0)
      throw structural_error("TensorFamily: missing H-invariant zero-weight tensor at sigma=" +
                             std::to_string(sigma));
  return family;
}

long TensorFamily::block_dim(int sigma) const {
  return expected_block_dim(space_.n(), sigma);
}

long TensorFamily::find(const TensorLabel& label) const {
  for (std::size_t a = 0; a < labels_.size(); ++a)
    if (labels_[a] == label) return static_cast<long>(a);
  return -1;
}

const Matrix& TensorFamily::zero_weight_invariant(int sigma) const {
  return tensors_[static_cast<std::size_t>(zero_weight_index_.at(sigma))];
}

double TensorFamily::highest_weight_coefficient(int sigma) const {
  return hw_coeff_.at(sigma);
}

double TensorFamily::verify_trace_orthonormality() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < tensors_.size(); ++a)
    for (std::size_t b = a; b < tensors_.size(); ++b) {
      const cd ip = vec_of(tensors_[a]).dot(vec_of(tensors_[b]));
      worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

Eigen::VectorXcd TensorFamily::expand(const Matrix& x) const {
  Eigen::VectorXcd coeff(tensors_.size());
  const Eigen::VectorXcd vx = vec_of(x);
  for (std::size_t a = 0; a < tensors_.size(); ++a)
    coeff(static_cast<long>(a)) = vec_of(tensors_[a]).dot(vx);
  return coeff;
}

Matrix TensorFamily::synthesize(const Eigen::VectorXcd& coeff) const {
  Matrix x = Matrix::Zero(space_.dim(), space_.dim());
  for (std::size_t a = 0; a < tensors_.size(); ++a)
    x += coeff(static_cast<long>(a)) * tensors_[a];
  return x;
}

}  // namespace sunphase
