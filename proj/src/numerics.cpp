#include "gustsurf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gustsurf/errors.hpp"
#include "gustsurf/kernels.hpp"

namespace gustsurf::numerics {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("matrix entries length " + std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) throw InvalidArgument("matrix entries must be finite");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

namespace {

constexpr double kRankTolerance = 1e-12;

// Column-major working copy used by the Householder routines so the
// reflector applications run on contiguous memory.
struct ColMajor {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;

  ColMajor(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double* col(std::size_t j) { return a.data() + j * rows; }
  const double* col(std::size_t j) const { return a.data() + j * rows; }
  double& at(std::size_t i, std::size_t j) { return a[j * rows + i]; }
  double at(std::size_t i, std::size_t j) const { return a[j * rows + i]; }
};

ColMajor to_col_major(const DenseMatrix& m) {
  ColMajor out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double* row = m.data() + i * m.cols();
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = row[j];
  }
  return out;
}

double max_column_norm(const ColMajor& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols; ++j) {
    best = std::max(best, std::sqrt(kernels::sum_squares(m.col(j), m.rows)));
  }
  return best;
}

// In-place Householder factorization in the JAMA layout: reflector vectors
// under the diagonal (with v_k on the diagonal), R strictly above, and the
// R diagonal returned separately. Throws RankDeficient using a cutoff
// relative to the largest column norm of the original matrix.
std::vector<double> householder_factor(ColMajor& qr) {
  const std::size_t m = qr.rows;
  const std::size_t n = qr.cols;
  const double cutoff = kRankTolerance * max_column_norm(qr);
  std::vector<double> rdiag(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double* ck = qr.col(k);
    double nrm = std::sqrt(kernels::sum_squares(ck + k, m - k));
    if (nrm <= cutoff) {
      throw RankDeficient("design matrix is rank deficient at column " + std::to_string(k));
    }
    if (ck[k] < 0.0) nrm = -nrm;
    kernels::scale(1.0 / nrm, ck + k, m - k);
    ck[k] += 1.0;
    for (std::size_t j = k + 1; j < n; ++j) {
      double* cj = qr.col(j);
      double s = -kernels::dot(ck + k, cj + k, m - k) / ck[k];
      kernels::axpy(s, ck + k, cj + k, m - k);
    }
    rdiag[k] = -nrm;
  }
  return rdiag;
}

// Applies the implicit Q^T to a vector (first stage of the LS solve).
void apply_q_transpose(const ColMajor& qr, std::vector<double>& v) {
  const std::size_t m = qr.rows;
  const std::size_t n = qr.cols;
  for (std::size_t k = 0; k < n; ++k) {
    const double* ck = qr.col(k);
    double s = -kernels::dot(ck + k, v.data() + k, m - k) / ck[k];
    kernels::axpy(s, ck + k, v.data() + k, m - k);
  }
}

void back_substitute(const ColMajor& qr, const std::vector<double>& rdiag,
                     std::vector<double>& x) {
  const std::size_t n = qr.cols;
  for (std::size_t kk = n; kk-- > 0;) {
    x[kk] /= rdiag[kk];
    for (std::size_t i = 0; i < kk; ++i) x[i] -= x[kk] * qr.at(i, kk);
  }
}

DenseMatrix r_factor(const ColMajor& qr, const std::vector<double>& rdiag) {
  const std::size_t n = qr.cols;
  DenseMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    r(i, i) = rdiag[i];
    for (std::size_t j = i + 1; j < n; ++j) r(i, j) = qr.at(i, j);
  }
  return r;
}

FactoredOlsFit least_squares(const DenseMatrix& phi, std::span<const double> y, bool want_r) {
  if (phi.rows() != y.size()) {
    throw DimensionMismatch("design has " + std::to_string(phi.rows()) + " rows but y has " +
                            std::to_string(y.size()) + " entries");
  }
  if (phi.rows() < phi.cols()) {
    throw InvalidArgument("least squares needs rows >= cols");
  }
  ColMajor qr = to_col_major(phi);
  std::vector<double> rdiag = householder_factor(qr);

  std::vector<double> work(y.begin(), y.end());
  apply_q_transpose(qr, work);
  std::vector<double> beta(work.begin(), work.begin() + phi.cols());
  back_substitute(qr, rdiag, beta);

  FactoredOlsFit fit;
  fit.residual.resize(phi.rows());
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    fit.residual[i] = y[i] - kernels::dot(phi.data() + i * phi.cols(), beta.data(), phi.cols());
  }
  fit.rss = kernels::sum_squares(fit.residual.data(), fit.residual.size());
  fit.coefficients = std::move(beta);
  if (want_r) fit.r = r_factor(qr, rdiag);
  return fit;
}

}  // namespace

QrFactors qr_decompose(const DenseMatrix& a) {
  if (a.rows() < a.cols()) throw InvalidArgument("qr_decompose needs rows >= cols");
  if (a.cols() == 0) throw InvalidArgument("qr_decompose needs at least one column");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ColMajor qr = to_col_major(a);
  std::vector<double> rdiag = householder_factor(qr);

  // Accumulate the thin Q by applying the reflectors to the identity,
  // last reflector first (JAMA's getQ).
  ColMajor q(m, n);
  for (std::size_t kk = n; kk-- > 0;) {
    double* qk = q.col(kk);
    std::fill(qk, qk + m, 0.0);
    qk[kk] = 1.0;
    for (std::size_t j = kk; j < n; ++j) {
      const double* ck = qr.col(kk);
      double* qj = q.col(j);
      double s = -kernels::dot(ck + kk, qj + kk, m - kk) / ck[kk];
      kernels::axpy(s, ck + kk, qj + kk, m - kk);
    }
  }

  QrFactors out;
  out.q = DenseMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.q(i, j) = q.at(i, j);
  }
  out.r = r_factor(qr, rdiag);
  return out;
}

OlsFit ols_solve(const DenseMatrix& phi, std::span<const double> y) {
  FactoredOlsFit fit = least_squares(phi, y, false);
  return {std::move(fit.coefficients), std::move(fit.residual), fit.rss};
}

FactoredOlsFit ols_solve_factored(const DenseMatrix& phi, std::span<const double> y) {
  return least_squares(phi, y, true);
}

std::vector<double> solve_upper(const DenseMatrix& r, std::span<const double> b) {
  const std::size_t n = r.rows();
  if (r.cols() != n || b.size() != n) throw DimensionMismatch("triangular solve shape mismatch");
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t kk = n; kk-- > 0;) {
    x[kk] /= r(kk, kk);
    for (std::size_t i = 0; i < kk; ++i) x[i] -= x[kk] * r(i, kk);
  }
  return x;
}

std::vector<double> solve_upper_transposed(const DenseMatrix& r, std::span<const double> b) {
  const std::size_t n = r.rows();
  if (r.cols() != n || b.size() != n) throw DimensionMismatch("triangular solve shape mismatch");
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < k; ++i) x[k] -= r(i, k) * x[i];
    x[k] /= r(k, k);
  }
  return x;
}

namespace {

// Regularized incomplete beta I_x(a, b) by the Lentz continued fraction.
double incomplete_beta_cf(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-15;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * incomplete_beta_cf(a, b, x) / a;
  }
  return 1.0 - front * incomplete_beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, int dof) {
  const double nu = static_cast<double>(dof);
  const double x = nu / (nu + t * t);
  const double half_tail = 0.5 * incomplete_beta(0.5 * nu, 0.5, x);
  return t >= 0.0 ? 1.0 - half_tail : half_tail;
}

}  // namespace

double student_t_quantile(double p, int dof) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("t quantile probability must lie strictly inside (0,1)");
  }
  if (dof < 1) throw DomainError("t quantile needs dof >= 1");
  if (p == 0.5) return 0.0;
  const bool upper = p > 0.5;
  const double target = upper ? p : 1.0 - p;

  double lo = 0.0;
  double hi = 1.0;
  while (student_t_cdf(hi, dof) < target && hi < 1e12) hi *= 2.0;
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (student_t_cdf(mid, dof) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double q = 0.5 * (lo + hi);
  return upper ? q : -q;
}

double ks_statistic_vs_normal(std::span<const double> sample) {
  const std::size_t n = sample.size();
  if (n < 8) {
    throw TooFewSamples("KS statistic needs at least 8 samples, got " + std::to_string(n));
  }
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());

  double mean = 0.0;
  for (double v : sorted) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : sorted) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd <= 0.0) throw InvalidArgument("KS statistic undefined for zero-variance sample");

  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = (sorted[i] - mean) / sd;
    const double cdf = 0.5 * std::erfc(-z / std::sqrt(2.0));
    const double above = static_cast<double>(i + 1) / static_cast<double>(n) - cdf;
    const double below = cdf - static_cast<double>(i) / static_cast<double>(n);
    d = std::max(d, std::max(above, below));
  }
  return d;
}

}  // namespace gustsurf::numerics
