#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "medoidsmr/errors.hpp"

namespace medoidsmr {

using PointId = std::int64_t;
using ClusterId = std::int32_t;
using CostValue = double;

/// How point-to-medoid discrepancies enter the objective. The total cost sums
/// squared Euclidean distances by default; the plain-distance variant is kept
/// behind this switch.
enum class CostMetric { SquaredEuclidean, Euclidean };

/// One identified spatial point. Coordinates must be finite and share one
/// dimension across a dataset.
struct Point {
  PointId id = 0;
  std::vector<double> coords;
};

/// Flat row-major container of points. Row ids are implicit and consecutive:
/// row i has id i. This is the in-memory shape every algorithm consumes.
class Dataset {
 public:
  Dataset() = default;
  Dataset(int dimension, std::vector<double> values);

  /// Builds a dataset from points whose ids must be exactly 0..n-1 (any order).
  static Dataset from_points(const std::vector<Point>& points);

  std::int64_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  int dimension() const noexcept { return dimension_; }

  std::span<const double> coords(PointId row) const {
    return {values_.data() + static_cast<std::size_t>(row) * dimension_,
            static_cast<std::size_t>(dimension_)};
  }

  /// Materializes one row as a Point (copies the coordinates).
  Point point(PointId row) const;

  /// Appends one row; the coordinate count must match the dimension.
  void append(std::span<const double> coords);

  const std::vector<double>& values() const noexcept { return values_; }

 private:
  int dimension_ = 0;
  std::int64_t count_ = 0;
  std::vector<double> values_;
};

/// A cluster center constrained to be an actual dataset point.
struct Medoid {
  ClusterId cluster_id = 0;
  Point point;
};

/// Exactly k medoids with cluster ids 0..k-1, ordered by cluster id, no two
/// sharing a point id. The constructor validates all of that.
class MedoidSet {
 public:
  MedoidSet() = default;
  explicit MedoidSet(std::vector<Medoid> medoids);

  std::int32_t k() const noexcept { return static_cast<std::int32_t>(medoids_.size()); }
  const std::vector<Medoid>& medoids() const noexcept { return medoids_; }
  const Medoid& medoid(ClusterId cluster) const { return medoids_.at(cluster); }

  /// Medoid coordinates flattened to a k*dimension row-major buffer.
  std::vector<double> flat_coords() const;
  std::vector<PointId> point_ids() const;
  int dimension() const;

 private:
  std::vector<Medoid> medoids_;
};

/// Builds a MedoidSet from dataset rows; cluster ids follow the given order.
MedoidSet make_medoid_set(const Dataset& points, std::span<const PointId> rows);

/// Per-point cluster labels, indexed by point id.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<ClusterId> labels) : labels_(std::move(labels)) {}

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(labels_.size()); }
  ClusterId label(PointId id) const { return labels_[static_cast<std::size_t>(id)]; }
  const std::vector<ClusterId>& labels() const noexcept { return labels_; }

  bool operator==(const Assignment& other) const = default;

 private:
  std::vector<ClusterId> labels_;
};

/// Euclidean (L2) distance. Throws InvalidInputError on dimension mismatch.
double distance(std::span<const double> a, std::span<const double> b);
double distance(const Point& a, const Point& b);

/// Squared Euclidean distance, the summand of the clustering objective.
double squared_distance(std::span<const double> a, std::span<const double> b);
double squared_distance(const Point& a, const Point& b);

/// Metric cost of one point-medoid pair under the configured objective.
double metric_cost(std::span<const double> a, std::span<const double> b, CostMetric metric);

/// Index of the nearest medoid row in a flat k*dim coordinate buffer.
/// Comparison is on squared distances; ties go to the smallest index.
ClusterId nearest_cluster(std::span<const double> p, std::span<const double> medoid_coords,
                          std::int32_t k, int dim);

/// Nearest medoid of a point: (cluster id, plain Euclidean distance).
/// Ties break to the smallest cluster id.
std::pair<ClusterId, double> nearest_medoid(const Point& p, const MedoidSet& medoids);
std::pair<ClusterId, double> nearest_medoid(std::span<const double> p, const MedoidSet& medoids);

/// Total cost E: the sum over clusters of metric costs between member points
/// and their medoid. Points are summed in ascending id order, so the value is
/// reproducible bit for bit. Throws InvalidInputError when any point is
/// unassigned or a label is out of range.
CostValue total_cost(const Dataset& points, const MedoidSet& medoids, const Assignment& assignment,
                     CostMetric metric = CostMetric::SquaredEuclidean);

/// Labels every point with its nearest medoid (serial reference path).
Assignment assign_nearest(const Dataset& points, const MedoidSet& medoids);

}  // namespace medoidsmr
