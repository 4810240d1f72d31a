#include "medoidsmr/engine.hpp"

namespace medoidsmr {

std::vector<InputSplit> make_splits(std::int64_t row_count, std::int32_t num_splits) {
  if (row_count < 0) {
    throw InvalidInputError("row_count must be non-negative");
  }
  if (num_splits < 1) {
    throw InvalidInputError("num_splits must be at least 1");
  }
  // The first (row_count mod num_splits) splits get one extra row.
  const std::int64_t base = row_count / num_splits;
  const std::int64_t extra = row_count % num_splits;
  std::vector<InputSplit> splits;
  splits.reserve(static_cast<std::size_t>(num_splits));
  std::int64_t begin = 0;
  for (std::int32_t s = 0; s < num_splits; ++s) {
    const std::int64_t size = base + (s < extra ? 1 : 0);
    splits.push_back(InputSplit{s, begin, begin + size});
    begin += size;
  }
  return splits;
}

}  // namespace medoidsmr
