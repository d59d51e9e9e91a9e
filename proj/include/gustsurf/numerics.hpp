#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gustsurf::numerics {

// Row-major dense matrix of finite doubles. The checked constructor and
// from_entries validate shape and finiteness; callers that fill a
// zero-initialized matrix element-wise are expected to store finite values.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<double> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

  const double* data() const noexcept { return entries_.data(); }
  double* data() noexcept { return entries_.data(); }
  const std::vector<double>& entries() const noexcept { return entries_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// Thin QR: q has orthonormal columns (rows x cols), r is upper triangular
// (cols x cols), q * r reconstructs the input.
struct QrFactors {
  DenseMatrix q;
  DenseMatrix r;
};

// Householder QR of a full-column-rank matrix with rows >= cols.
// Throws RankDeficient when a diagonal of r falls below
// 1e-12 * (largest column norm of the input).
QrFactors qr_decompose(const DenseMatrix& a);

struct OlsFit {
  std::vector<double> coefficients;
  std::vector<double> residual;
  double rss = 0.0;
};

// Least squares via Householder QR (no normal equations): coefficients
// minimize ||y - phi * beta||_2, residual = y - phi * beta.
OlsFit ols_solve(const DenseMatrix& phi, std::span<const double> y);

// ols_solve plus the cols x cols upper-triangular R factor of phi, needed
// by prediction intervals ((phi' phi)^-1 = R^-1 R^-T).
struct FactoredOlsFit {
  std::vector<double> coefficients;
  std::vector<double> residual;
  double rss = 0.0;
  DenseMatrix r;
};
FactoredOlsFit ols_solve_factored(const DenseMatrix& phi, std::span<const double> y);

// Solve r * x = b (r upper triangular) and r^T * x = b.
std::vector<double> solve_upper(const DenseMatrix& r, std::span<const double> b);
std::vector<double> solve_upper_transposed(const DenseMatrix& r, std::span<const double> b);

// Quantile of Student's t distribution: the value t with CDF(t; dof) = p.
// Inverts an incomplete-beta CDF by bisection; accurate to well below 1e-6.
// Throws DomainError for p outside (0,1) or dof < 1.
double student_t_quantile(double p, int dof);

// Kolmogorov-Smirnov distance between the empirical CDF of the sample and
// the normal CDF with plugged-in sample mean and sample standard deviation
// (Lilliefors form). Throws TooFewSamples for fewer than 8 values.
double ks_statistic_vs_normal(std::span<const double> sample);

}  // namespace gustsurf::numerics
