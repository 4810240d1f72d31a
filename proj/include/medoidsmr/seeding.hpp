#pragma once

#include <cstdint>
#include <vector>

#include "medoidsmr/core.hpp"
#include "medoidsmr/rng.hpp"

namespace medoidsmr {

/// Sampling weight per point when drawing the next medoid. Distance (the
/// paper's D(p)) is the default; SquaredDistance is the k-means++ variant.
enum class SeedingWeight { Distance, SquaredDistance };

/// State of an in-progress seeding run: the medoids chosen so far (selection
/// order becomes cluster id order), each point's distance to its nearest
/// chosen medoid, and the total sampling weight.
struct SeedingState {
  std::vector<PointId> chosen;
  std::vector<double> nearest_distance;
  double weight_sum = 0.0;
  SeedingWeight weight = SeedingWeight::Distance;
};

/// Seeds the state with a given first medoid and fills the distance cache.
SeedingState seed_with_first(const Dataset& points, PointId first, SeedingWeight weight);

/// Chooses the first medoid uniformly at random among all points.
/// Throws InvalidInputError on an empty dataset.
SeedingState seed_first_medoid(const Dataset& points, Rng& rng,
                               SeedingWeight weight = SeedingWeight::Distance);

/// Pure selection walk: scans points in ascending id order and returns the
/// first one whose half-open cumulative weight interval [c, c + w) contains r.
/// Zero-weight points have empty intervals and can never be selected; an r at
/// or above the total (possible through rounding) falls back to the last
/// positive-weight point.
PointId select_by_cumulative_weight(const Dataset& points, const SeedingState& state, double r);

/// Draws r uniform in [0, weight_sum) and adds the selected point as the next
/// medoid, updating the distance cache and the weight sum.
/// Throws DegenerateDatasetError when weight_sum is zero.
SeedingState seed_next_medoid(const Dataset& points, SeedingState state, Rng& rng);

/// Full weighted-probability initialization: a uniform first medoid, then
/// k - 1 draws weighted by each point's distance to its nearest chosen
/// medoid. Deterministic given the seed. Throws InvalidInputError for k < 1
/// and DegenerateDatasetError when the dataset has fewer distinct coordinate
/// points than k.
MedoidSet initialize_medoids(const Dataset& points, std::int32_t k, Rng& rng,
                             SeedingWeight weight = SeedingWeight::Distance);

}  // namespace medoidsmr
