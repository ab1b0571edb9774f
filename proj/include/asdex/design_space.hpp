#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

namespace asdex {

/// Bounded hyper-rectangle in raw coordinates. All surrogate and subspace
/// computation happens in the normalized cube [-1,1]^m; raw coordinates only
/// appear at I/O boundaries.
class DesignSpace {
 public:
  DesignSpace(Eigen::VectorXd lower, Eigen::VectorXd upper);

  int dimension() const { return static_cast<int>(lower_.size()); }
  const Eigen::VectorXd& lower() const { return lower_; }
  const Eigen::VectorXd& upper() const { return upper_; }
  Eigen::VectorXd span() const { return upper_ - lower_; }

  /// True when x lies within bounds up to `rel_tol` relative to each span.
  bool contains(const Eigen::VectorXd& x, double rel_tol = 1e-12) const;

  /// Raw -> [-1,1]. Throws DataError on out-of-bounds input.
  Eigen::VectorXd normalize(const Eigen::VectorXd& x_raw) const;

  /// [-1,1] -> raw. Throws DataError when a component leaves [-1,1].
  Eigen::VectorXd denormalize(const Eigen::VectorXd& u) const;

  /// Row-wise normalize of a k x m design matrix.
  Eigen::MatrixXd normalize_rows(const Eigen::MatrixXd& X) const;

 private:
  Eigen::VectorXd lower_;
  Eigen::VectorXd upper_;
};

/// Design matrix (raw coordinates) plus optional responses.
struct SampleSet {
  Eigen::MatrixXd X;                 // k x m
  std::optional<Eigen::VectorXd> y;  // length k when present

  int count() const { return static_cast<int>(X.rows()); }
  int dimension() const { return static_cast<int>(X.cols()); }
};

/// Throws DataError unless every row of `samples.X` lies in `space` and the
/// response length matches.
void validate_samples(const DesignSpace& space, const SampleSet& samples);

/// Plain Latin hypercube design: k rows, one point per stratum and dimension,
/// deterministic for a fixed seed. No maximin optimization.
SampleSet lhs_sample(const DesignSpace& space, int k, std::uint64_t seed);

/// i.i.d. uniform Monte Carlo design, deterministic for a fixed seed.
SampleSet uniform_sample(const DesignSpace& space, int count,
                         std::uint64_t seed);

}  // namespace asdex
