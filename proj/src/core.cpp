#include "medoidsmr/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace medoidsmr {

namespace {

void check_same_dimension(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InvalidInputError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
}

}  // namespace

Dataset::Dataset(int dimension, std::vector<double> values)
    : dimension_(dimension), values_(std::move(values)) {
  if (dimension_ < 1) {
    throw InvalidInputError("dataset dimension must be at least 1");
  }
  if (values_.size() % static_cast<std::size_t>(dimension_) != 0) {
    throw InvalidInputError("coordinate buffer size is not a multiple of the dimension");
  }
  count_ = static_cast<std::int64_t>(values_.size()) / dimension_;
}

Dataset Dataset::from_points(const std::vector<Point>& points) {
  if (points.empty()) {
    throw InvalidInputError("cannot build a dataset from zero points");
  }
  const int dim = static_cast<int>(points.front().coords.size());
  Dataset out(dim, {});
  out.values_.resize(points.size() * static_cast<std::size_t>(dim));
  std::vector<bool> seen(points.size(), false);
  for (const Point& p : points) {
    if (p.id < 0 || p.id >= static_cast<PointId>(points.size())) {
      throw InvalidInputError("point id " + std::to_string(p.id) + " outside 0.." +
                              std::to_string(points.size() - 1));
    }
    if (seen[static_cast<std::size_t>(p.id)]) {
      throw InvalidInputError("duplicate point id " + std::to_string(p.id));
    }
    seen[static_cast<std::size_t>(p.id)] = true;
    if (static_cast<int>(p.coords.size()) != dim) {
      throw InvalidInputError("point " + std::to_string(p.id) + " has dimension " +
                              std::to_string(p.coords.size()) + ", expected " +
                              std::to_string(dim));
    }
    std::copy(p.coords.begin(), p.coords.end(),
              out.values_.begin() + static_cast<std::size_t>(p.id) * dim);
  }
  out.count_ = static_cast<std::int64_t>(points.size());
  return out;
}

Point Dataset::point(PointId row) const {
  const auto c = coords(row);
  return Point{row, std::vector<double>(c.begin(), c.end())};
}

void Dataset::append(std::span<const double> coords) {
  if (dimension_ == 0) {
    dimension_ = static_cast<int>(coords.size());
    if (dimension_ < 1) {
      throw InvalidInputError("dataset dimension must be at least 1");
    }
  }
  if (static_cast<int>(coords.size()) != dimension_) {
    throw InvalidInputError("row dimension " + std::to_string(coords.size()) +
                            " does not match dataset dimension " + std::to_string(dimension_));
  }
  values_.insert(values_.end(), coords.begin(), coords.end());
  ++count_;
}

MedoidSet::MedoidSet(std::vector<Medoid> medoids) : medoids_(std::move(medoids)) {
  if (medoids_.empty()) {
    throw InvalidInputError("a medoid set needs at least one medoid");
  }
  const int dim = static_cast<int>(medoids_.front().point.coords.size());
  for (std::size_t i = 0; i < medoids_.size(); ++i) {
    if (medoids_[i].cluster_id != static_cast<ClusterId>(i)) {
      throw InvalidInputError("medoid cluster ids must be exactly 0..k-1 in order, got " +
                              std::to_string(medoids_[i].cluster_id) + " at position " +
                              std::to_string(i));
    }
    if (static_cast<int>(medoids_[i].point.coords.size()) != dim) {
      throw InvalidInputError("medoid dimension mismatch");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (medoids_[j].point.id == medoids_[i].point.id) {
        throw InvalidInputError("medoids " + std::to_string(j) + " and " + std::to_string(i) +
                                " share point id " + std::to_string(medoids_[i].point.id));
      }
    }
  }
}

std::vector<double> MedoidSet::flat_coords() const {
  const int dim = dimension();
  std::vector<double> flat;
  flat.reserve(medoids_.size() * static_cast<std::size_t>(dim));
  for (const Medoid& m : medoids_) {
    flat.insert(flat.end(), m.point.coords.begin(), m.point.coords.end());
  }
  return flat;
}

std::vector<PointId> MedoidSet::point_ids() const {
  std::vector<PointId> ids;
  ids.reserve(medoids_.size());
  for (const Medoid& m : medoids_) {
    ids.push_back(m.point.id);
  }
  return ids;
}

int MedoidSet::dimension() const {
  if (medoids_.empty()) {
    throw InvalidInputError("empty medoid set has no dimension");
  }
  return static_cast<int>(medoids_.front().point.coords.size());
}

MedoidSet make_medoid_set(const Dataset& points, std::span<const PointId> rows) {
  std::vector<Medoid> medoids;
  medoids.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] >= points.size()) {
      throw InvalidInputError("medoid row " + std::to_string(rows[i]) + " out of range");
    }
    medoids.push_back(Medoid{static_cast<ClusterId>(i), points.point(rows[i])});
  }
  return MedoidSet(std::move(medoids));
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  check_same_dimension(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double squared_distance(const Point& a, const Point& b) {
  return squared_distance(std::span<const double>(a.coords), std::span<const double>(b.coords));
}

double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

double distance(const Point& a, const Point& b) {
  return distance(std::span<const double>(a.coords), std::span<const double>(b.coords));
}

double metric_cost(std::span<const double> a, std::span<const double> b, CostMetric metric) {
  const double sq = squared_distance(a, b);
  return metric == CostMetric::SquaredEuclidean ? sq : std::sqrt(sq);
}

ClusterId nearest_cluster(std::span<const double> p, std::span<const double> medoid_coords,
                          std::int32_t k, int dim) {
  if (k < 1) {
    throw InvalidInputError("nearest_cluster needs at least one medoid");
  }
  ClusterId best = 0;
  double best_sq = std::numeric_limits<double>::infinity();
  for (ClusterId c = 0; c < k; ++c) {
    const std::span<const double> m(medoid_coords.data() + static_cast<std::size_t>(c) * dim,
                                    static_cast<std::size_t>(dim));
    const double sq = squared_distance(p, m);
    if (sq < best_sq) {
      best_sq = sq;
      best = c;
    }
  }
  return best;
}

std::pair<ClusterId, double> nearest_medoid(std::span<const double> p, const MedoidSet& medoids) {
  const std::vector<double> flat = medoids.flat_coords();
  const ClusterId best = nearest_cluster(p, flat, medoids.k(), medoids.dimension());
  return {best, distance(p, std::span<const double>(medoids.medoid(best).point.coords))};
}

std::pair<ClusterId, double> nearest_medoid(const Point& p, const MedoidSet& medoids) {
  return nearest_medoid(std::span<const double>(p.coords), medoids);
}

CostValue total_cost(const Dataset& points, const MedoidSet& medoids, const Assignment& assignment,
                     CostMetric metric) {
  if (assignment.size() != points.size()) {
    throw InvalidInputError("assignment covers " + std::to_string(assignment.size()) +
                            " points, dataset has " + std::to_string(points.size()));
  }
  const std::vector<double> flat = medoids.flat_coords();
  const int dim = points.dimension();
  const std::int32_t k = medoids.k();
  double sum = 0.0;
  for (PointId i = 0; i < points.size(); ++i) {
    const ClusterId c = assignment.label(i);
    if (c < 0 || c >= k) {
      throw InvalidInputError("point " + std::to_string(i) + " has invalid cluster label " +
                              std::to_string(c));
    }
    const std::span<const double> m(flat.data() + static_cast<std::size_t>(c) * dim,
                                    static_cast<std::size_t>(dim));
    sum += metric_cost(points.coords(i), m, metric);
  }
  return sum;
}

Assignment assign_nearest(const Dataset& points, const MedoidSet& medoids) {
  const std::vector<double> flat = medoids.flat_coords();
  const int dim = points.dimension();
  std::vector<ClusterId> labels(static_cast<std::size_t>(points.size()));
  for (PointId i = 0; i < points.size(); ++i) {
    labels[static_cast<std::size_t>(i)] = nearest_cluster(points.coords(i), flat, medoids.k(), dim);
  }
  return Assignment(std::move(labels));
}

}  // namespace medoidsmr
