#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "prox/errors.hpp"

namespace prox {

// Absolute tolerance used by default for metric validation and for the
// proximal equality d(x, y) = d(A, B). Fixture distances are >= 0.01, so
// this sits far below any gap that matters.
inline constexpr double kDefaultEpsilon = 1e-9;

enum class ViolationKind {
  kNegative,
  kNonzeroDiagonal,
  kAsymmetry,
  kZeroOffDiagonal,
  kTriangle,
};

const char* to_string(ViolationKind kind);

// One failed metric axiom with a concrete witness.
struct MetricViolation {
  ViolationKind kind;
  // (i, j, -1) for pair axioms, (i, l, j) for a triangle d(i,j) > d(i,l)+d(l,j).
  std::array<int, 3> witness;
  double magnitude;  // amount by which the axiom fails, always > 0

  std::string describe() const;
};

class MetricError : public Error {
 public:
  MetricError(const std::string& what, std::vector<MetricViolation> violations);
  const std::vector<MetricViolation>& violations() const { return violations_; }

 private:
  std::vector<MetricViolation> violations_;
};

// n points with a validated symmetric positive distance matrix.
// Immutable after construction; safe to share across threads.
class FiniteMetricSpace {
 public:
  explicit FiniteMetricSpace(const std::vector<std::vector<double>>& dist,
                             std::vector<std::string> labels = {},
                             double eps_metric = kDefaultEpsilon);

  int size() const { return n_; }
  double distance(int i, int j) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // Same point set with every distance multiplied by lambda > 0.
  FiniteMetricSpace scaled(double lambda) const;

  std::vector<std::vector<double>> matrix() const;

  friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

 private:
  int n_ = 0;
  std::vector<double> dist_;  // row-major
  std::vector<std::string> labels_;
};

// Checks the four metric axioms within eps_metric and reports every violated
// axiom with a concrete witness. Empty result means the matrix is a metric.
std::vector<MetricViolation> validate_metric(const std::vector<std::vector<double>>& matrix,
                                             double eps_metric = kDefaultEpsilon);

// All-pairs shortest-path closure of a symmetric positive matrix. Output
// satisfies every metric axiom, never exceeds the input entrywise, and is a
// fixed point of the closure itself.
FiniteMetricSpace metric_repair(const std::vector<std::vector<double>>& matrix);

// Pairwise Euclidean distances of a point cloud (all points distinct).
FiniteMetricSpace euclidean_embed(const std::vector<std::vector<double>>& points);

// Deterministic random metric: symmetric entries drawn uniformly in
// (0, scale], then closed by metric_repair so every draw is usable.
FiniteMetricSpace random_metric(std::uint64_t seed, int n, double scale);

// Restriction of the space to the given distinct points, in the given order.
FiniteMetricSpace subspace(const FiniteMetricSpace& space, const std::vector<int>& points);

}  // namespace prox
