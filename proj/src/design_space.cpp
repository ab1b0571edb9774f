#include "asdex/design_space.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "asdex/errors.hpp"
#include "asdex/rng.hpp"

namespace asdex {

DesignSpace::DesignSpace(Eigen::VectorXd lower, Eigen::VectorXd upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() == 0 || lower_.size() != upper_.size()) {
    throw DataError("design space bounds must be non-empty and equal length");
  }
  for (int i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i])) {
      throw DataError("design space dimension " + std::to_string(i + 1) +
                      ": lower bound must be strictly below upper bound");
    }
  }
}

bool DesignSpace::contains(const Eigen::VectorXd& x, double rel_tol) const {
  if (x.size() != lower_.size()) return false;
  for (int i = 0; i < x.size(); ++i) {
    const double slack = rel_tol * (upper_[i] - lower_[i]);
    if (x[i] < lower_[i] - slack || x[i] > upper_[i] + slack) return false;
  }
  return true;
}

Eigen::VectorXd DesignSpace::normalize(const Eigen::VectorXd& x_raw) const {
  if (x_raw.size() != lower_.size()) {
    throw DataError("normalize: point dimension " +
                    std::to_string(x_raw.size()) + " does not match space " +
                    std::to_string(lower_.size()));
  }
  if (!contains(x_raw)) {
    throw DataError("normalize: point violates design-space bounds");
  }
  Eigen::VectorXd u(x_raw.size());
  for (int i = 0; i < x_raw.size(); ++i) {
    u[i] = 2.0 * (x_raw[i] - lower_[i]) / (upper_[i] - lower_[i]) - 1.0;
    u[i] = std::min(1.0, std::max(-1.0, u[i]));
  }
  return u;
}

Eigen::VectorXd DesignSpace::denormalize(const Eigen::VectorXd& u) const {
  if (u.size() != lower_.size()) {
    throw DataError("denormalize: point dimension does not match space");
  }
  for (int i = 0; i < u.size(); ++i) {
    if (u[i] < -1.0 - 1e-12 || u[i] > 1.0 + 1e-12) {
      throw DataError("denormalize: component " + std::to_string(i + 1) +
                      " outside [-1,1]");
    }
  }
  Eigen::VectorXd x(u.size());
  for (int i = 0; i < u.size(); ++i) {
    x[i] = lower_[i] + 0.5 * (u[i] + 1.0) * (upper_[i] - lower_[i]);
  }
  return x;
}

Eigen::MatrixXd DesignSpace::normalize_rows(const Eigen::MatrixXd& X) const {
  Eigen::MatrixXd U(X.rows(), X.cols());
  for (int r = 0; r < X.rows(); ++r) {
    U.row(r) = normalize(X.row(r).transpose()).transpose();
  }
  return U;
}

void validate_samples(const DesignSpace& space, const SampleSet& samples) {
  if (samples.dimension() != space.dimension()) {
    throw DataError("sample set dimension does not match design space");
  }
  for (int r = 0; r < samples.count(); ++r) {
    if (!space.contains(samples.X.row(r).transpose())) {
      throw DataError("sample row " + std::to_string(r + 1) +
                      " violates design-space bounds");
    }
  }
  if (samples.y && samples.y->size() != samples.count()) {
    throw DataError("response length does not match design count");
  }
}

SampleSet lhs_sample(const DesignSpace& space, int k, std::uint64_t seed) {
  if (k < 1) throw DataError("lhs_sample: k must be >= 1");
  const int m = space.dimension();
  Rng rng(seed, rng_stream::sampling);

  SampleSet out;
  out.X.resize(k, m);
  std::vector<int> strata(k);
  for (int j = 0; j < m; ++j) {
    std::iota(strata.begin(), strata.end(), 0);
    rng.shuffle(strata);
    for (int i = 0; i < k; ++i) {
      // One point per stratum [s/k, (s+1)/k) on the unit interval.
      const double t = (strata[i] + rng.uniform01()) / k;
      out.X(i, j) = space.lower()[j] + t * (space.upper()[j] - space.lower()[j]);
    }
  }
  return out;
}

SampleSet uniform_sample(const DesignSpace& space, int count,
                         std::uint64_t seed) {
  if (count < 1) throw DataError("uniform_sample: count must be >= 1");
  const int m = space.dimension();
  Rng rng(seed, rng_stream::sampling);

  SampleSet out;
  out.X.resize(count, m);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < m; ++j) {
      out.X(i, j) = rng.uniform(space.lower()[j], space.upper()[j]);
    }
  }
  return out;
}

}  // namespace asdex
