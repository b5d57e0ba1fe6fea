#ifndef LAIS_GAUSSIAN_HPP
#define LAIS_GAUSSIAN_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

#include "lais/core.hpp"

namespace lais {

struct NonPositiveDefinite : std::runtime_error {
  NonPositiveDefinite() : std::runtime_error("covariance matrix is not positive definite") {}
};

// Multivariate normal with cached Cholesky factor and log-normalizer.
// Validated at construction; evaluation and sampling never re-factorize.
class Gaussian {
 public:
  Gaussian(Vector mean, Matrix cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
    const Eigen::Index d = mean_.size();
    if (cov_.rows() != d || cov_.cols() != d)
      throw DimensionMismatch("Gaussian: covariance shape does not match mean");
    Eigen::LLT<Matrix> llt(cov_);
    if (llt.info() != Eigen::Success) throw NonPositiveDefinite();
    chol_l_ = llt.matrixL();
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) log_det += std::log(chol_l_(i, i));
    log_norm_ = -0.5 * static_cast<double>(d) * std::log(2.0 * M_PI) - log_det;
    diagonal_ = cov_.isDiagonal(0.0);
    if (diagonal_) {
      inv_var_ = Vector(d);
      for (Eigen::Index i = 0; i < d; ++i) inv_var_[i] = 1.0 / cov_(i, i);
    }
  }

  static Gaussian isotropic(Vector mean, double sigma) {
    const Eigen::Index d = mean.size();
    return Gaussian(std::move(mean), sigma * sigma * Matrix::Identity(d, d));
  }

  static Gaussian diagonal(Vector mean, const Vector& sigmas) {
    const Eigen::Index d = mean.size();
    Matrix cov = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) cov(i, i) = sigmas[i] * sigmas[i];
    return Gaussian(std::move(mean), std::move(cov));
  }

  double log_pdf(const Vector& x) const {
    if (x.size() != mean_.size()) throw DimensionMismatch("Gaussian::log_pdf: dimension mismatch");
    if (diagonal_) {
      // hot path: diagonal (incl. isotropic) covariances need no triangular solve
      double q = 0.0;
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double r = x[i] - mean_[i];
        q += r * r * inv_var_[i];
      }
      return log_norm_ - 0.5 * q;
    }
    Vector z = chol_l_.triangularView<Eigen::Lower>().solve(x - mean_);
    return log_norm_ - 0.5 * z.squaredNorm();
  }

  Vector sample(RngStream& rng) const {
    return mean_ + chol_l_ * rng.normal_vector(mean_.size());
  }

  const Vector& mean() const { return mean_; }
  const Matrix& cov() const { return cov_; }
  Eigen::Index dim() const { return mean_.size(); }

 private:
  Vector mean_;
  Matrix cov_;
  Matrix chol_l_;
  Vector inv_var_;
  bool diagonal_ = false;
  double log_norm_;
};

}  // namespace lais

#endif  // LAIS_GAUSSIAN_HPP
