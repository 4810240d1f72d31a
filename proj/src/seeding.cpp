#include "medoidsmr/seeding.hpp"

#include <limits>
#include <string>
#include <utility>

namespace medoidsmr {

namespace {

double weight_of(double dist, SeedingWeight weight) {
  return weight == SeedingWeight::Distance ? dist : dist * dist;
}

/// Folds a newly chosen medoid into the cache: every point keeps the minimum
/// of its old nearest distance and the distance to the new medoid.
void absorb_medoid(const Dataset& points, SeedingState& state, PointId medoid) {
  const auto m = points.coords(medoid);
  double sum = 0.0;
  for (PointId i = 0; i < points.size(); ++i) {
    const double d = distance(points.coords(i), m);
    double& cached = state.nearest_distance[static_cast<std::size_t>(i)];
    if (d < cached) {
      cached = d;
    }
    sum += weight_of(cached, state.weight);
  }
  state.weight_sum = sum;
  state.chosen.push_back(medoid);
}

}  // namespace

SeedingState seed_with_first(const Dataset& points, PointId first, SeedingWeight weight) {
  if (points.empty()) {
    throw InvalidInputError("cannot seed medoids from an empty dataset");
  }
  if (first < 0 || first >= points.size()) {
    throw InvalidInputError("first medoid row " + std::to_string(first) + " out of range");
  }
  SeedingState state;
  state.weight = weight;
  state.nearest_distance.assign(static_cast<std::size_t>(points.size()),
                                std::numeric_limits<double>::infinity());
  absorb_medoid(points, state, first);
  return state;
}

SeedingState seed_first_medoid(const Dataset& points, Rng& rng, SeedingWeight weight) {
  if (points.empty()) {
    throw InvalidInputError("cannot seed medoids from an empty dataset");
  }
  const PointId first =
      static_cast<PointId>(rng.next_index(static_cast<std::uint64_t>(points.size())));
  return seed_with_first(points, first, weight);
}

PointId select_by_cumulative_weight(const Dataset& points, const SeedingState& state, double r) {
  double cumulative = 0.0;
  PointId last_positive = -1;
  for (PointId i = 0; i < points.size(); ++i) {
    const double w = weight_of(state.nearest_distance[static_cast<std::size_t>(i)], state.weight);
    if (w > 0.0) {
      if (r < cumulative + w) {
        return i;
      }
      last_positive = i;
    }
    cumulative += w;
  }
  if (last_positive >= 0) {
    return last_positive;  // r landed on the top boundary through rounding
  }
  throw DegenerateDatasetError("all sampling weights are zero");
}

SeedingState seed_next_medoid(const Dataset& points, SeedingState state, Rng& rng) {
  if (state.weight_sum <= 0.0) {
    throw DegenerateDatasetError("no positive-weight point left to choose as a medoid");
  }
  const double r = rng.next_double() * state.weight_sum;
  const PointId next = select_by_cumulative_weight(points, state, r);
  absorb_medoid(points, state, next);
  return state;
}

MedoidSet initialize_medoids(const Dataset& points, std::int32_t k, Rng& rng,
                             SeedingWeight weight) {
  if (k < 1) {
    throw InvalidInputError("k must be at least 1");
  }
  if (points.empty()) {
    throw InvalidInputError("cannot seed medoids from an empty dataset");
  }
  if (static_cast<std::int64_t>(k) > points.size()) {
    throw DegenerateDatasetError("k = " + std::to_string(k) + " exceeds dataset size " +
                                 std::to_string(points.size()));
  }
  SeedingState state = seed_first_medoid(points, rng, weight);
  while (static_cast<std::int32_t>(state.chosen.size()) < k) {
    if (state.weight_sum <= 0.0) {
      throw DegenerateDatasetError("dataset has fewer than k = " + std::to_string(k) +
                                   " distinct coordinate points");
    }
    state = seed_next_medoid(points, std::move(state), rng);
  }
  return make_medoid_set(points, state.chosen);
}

}  // namespace medoidsmr
