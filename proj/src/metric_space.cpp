#include "prox/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace prox {
namespace {

int checked_square_shape(const std::vector<std::vector<double>>& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) {
      throw ShapeError("distance matrix is not square");
    }
  }
  return n;
}

double uniform_positive(std::mt19937_64& eng) {
  // 53 random bits -> [0, 1), flipped so the result lands in (0, 1].
  const double x = static_cast<double>(eng() >> 11) * 0x1.0p-53;
  return 1.0 - x;
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNegative:
      return "negative";
    case ViolationKind::kNonzeroDiagonal:
      return "nonzero-diagonal";
    case ViolationKind::kAsymmetry:
      return "asymmetry";
    case ViolationKind::kZeroOffDiagonal:
      return "zero-offdiagonal";
    case ViolationKind::kTriangle:
      return "triangle";
  }
  return "unknown";
}

std::string MetricViolation::describe() const {
  std::ostringstream out;
  out << to_string(kind) << " at (" << witness[0] << ", " << witness[1];
  if (witness[2] >= 0) {
    out << ", " << witness[2];
  }
  out << "), magnitude " << magnitude;
  return out.str();
}

MetricError::MetricError(const std::string& what, std::vector<MetricViolation> violations)
    : Error(what), violations_(std::move(violations)) {}

std::vector<MetricViolation> validate_metric(const std::vector<std::vector<double>>& matrix,
                                             double eps_metric) {
  const int n = checked_square_shape(matrix);
  std::vector<MetricViolation> out;

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (matrix[i][j] < -eps_metric) {
        out.push_back({ViolationKind::kNegative, {i, j, -1}, -matrix[i][j]});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(matrix[i][i]) > eps_metric) {
      out.push_back({ViolationKind::kNonzeroDiagonal, {i, i, -1}, std::abs(matrix[i][i])});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double diff = std::abs(matrix[i][j] - matrix[j][i]);
      if (diff > eps_metric) {
        out.push_back({ViolationKind::kAsymmetry, {i, j, -1}, diff});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Distinct points must sit strictly apart; anything below tolerance
      // collapses them.
      if (matrix[i][j] < eps_metric) {
        out.push_back({ViolationKind::kZeroOffDiagonal, {i, j, -1}, eps_metric - matrix[i][j]});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        const double excess = matrix[i][j] - (matrix[i][l] + matrix[l][j]);
        if (excess > eps_metric) {
          out.push_back({ViolationKind::kTriangle, {i, l, j}, excess});
        }
      }
    }
  }
  return out;
}

FiniteMetricSpace::FiniteMetricSpace(const std::vector<std::vector<double>>& dist,
                                     std::vector<std::string> labels, double eps_metric)
    : n_(checked_square_shape(dist)), labels_(std::move(labels)) {
  if (n_ == 0) {
    throw InvalidInputError("metric space needs at least one point");
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_) {
    throw InvalidInputError("labels size does not match point count");
  }
  auto violations = validate_metric(dist, eps_metric);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << violations.size() << " metric axiom violation(s), first: "
        << violations.front().describe();
    throw MetricError(msg.str(), std::move(violations));
  }
  dist_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : dist) {
    dist_.insert(dist_.end(), row.begin(), row.end());
  }
}

double FiniteMetricSpace::distance(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw DomainError("point index out of range");
  }
  return dist_[static_cast<std::size_t>(i) * n_ + j];
}

FiniteMetricSpace FiniteMetricSpace::scaled(double lambda) const {
  if (!(lambda > 0.0)) {
    throw DomainError("scale factor must be positive");
  }
  std::vector<std::vector<double>> m(n_, std::vector<double>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      m[i][j] = distance(i, j) * lambda;
    }
  }
  return FiniteMetricSpace(m, labels_);
}

std::vector<std::vector<double>> FiniteMetricSpace::matrix() const {
  std::vector<std::vector<double>> m(n_, std::vector<double>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      m[i][j] = dist_[static_cast<std::size_t>(i) * n_ + j];
    }
  }
  return m;
}

FiniteMetricSpace metric_repair(const std::vector<std::vector<double>>& matrix) {
  const int n = checked_square_shape(matrix);
  if (n == 0) {
    throw InvalidInputError("metric space needs at least one point");
  }
  for (int i = 0; i < n; ++i) {
    if (matrix[i][i] != 0.0) {
      throw InvalidInputError("repair input must have a zero diagonal");
    }
    for (int j = 0; j < n; ++j) {
      if (matrix[i][j] < 0.0) {
        throw InvalidInputError("repair input must be nonnegative");
      }
      if (matrix[i][j] != matrix[j][i]) {
        throw InvalidInputError("repair input must be symmetric");
      }
      if (i != j && matrix[i][j] == 0.0) {
        throw InvalidInputError("repair input must be strictly positive off the diagonal");
      }
    }
  }

  std::vector<std::vector<double>> d = matrix;
  // Floyd-Warshall, iterated to a fixed point so floating-point rounding can
  // never leave a shortcut behind. Entries only decrease, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double via = d[i][k] + d[k][j];
          if (via < d[i][j]) {
            d[i][j] = via;
            changed = true;
          }
        }
      }
    }
  }
  return FiniteMetricSpace(d);
}

FiniteMetricSpace euclidean_embed(const std::vector<std::vector<double>>& points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) {
    throw InvalidInputError("point cloud is empty");
  }
  const std::size_t dim = points[0].size();
  if (dim == 0) {
    throw ShapeError("points must have at least one coordinate");
  }
  for (const auto& p : points) {
    if (p.size() != dim) {
      throw ShapeError("points do not share one dimension");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        std::ostringstream msg;
        msg << "duplicate points at indices " << i << " and " << j;
        throw InvalidInputError(msg.str());
      }
    }
  }
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const double diff = points[i][c] - points[j][c];
        sq += diff * diff;
      }
      const double d = std::sqrt(sq);
      m[i][j] = d;
      m[j][i] = d;
    }
  }
  return FiniteMetricSpace(m);
}

FiniteMetricSpace random_metric(std::uint64_t seed, int n, double scale) {
  if (n < 2) {
    throw InvalidInputError("random_metric requires n >= 2");
  }
  if (!(scale > 0.0)) {
    throw DomainError("scale must be positive");
  }
  std::mt19937_64 eng(seed);
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = uniform_positive(eng) * scale;
      m[i][j] = v;
      m[j][i] = v;
    }
  }
  return metric_repair(m);
}

FiniteMetricSpace subspace(const FiniteMetricSpace& space, const std::vector<int>& points) {
  if (points.empty()) {
    throw InvalidInputError("subspace needs at least one point");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 0 || points[i] >= space.size()) {
      throw DomainError("subspace point index out of range");
    }
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw InvalidInputError("subspace points must be distinct");
      }
    }
  }
  const int m = static_cast<int>(points.size());
  std::vector<std::vector<double>> d(m, std::vector<double>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      d[i][j] = space.distance(points[i], points[j]);
    }
  }
  std::vector<std::string> labels;
  if (!space.labels().empty()) {
    labels.reserve(points.size());
    for (int p : points) {
      labels.push_back(space.labels()[static_cast<std::size_t>(p)]);
    }
  }
  return FiniteMetricSpace(d, std::move(labels));
}

}  // namespace prox
