#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "medoidsmr/core.hpp"

namespace medoidsmr {

/// Row-keyed point table, the local-file analogue of the paper's input store:
/// consecutive integer row ids and range scans are the only capabilities the
/// algorithm uses. Immutable once built.
struct RowStore {
  std::string path;  // empty for stores generated in memory
  Dataset rows;

  std::int64_t row_count() const noexcept { return rows.size(); }
  int dimension() const noexcept { return rows.dimension(); }
};

/// Parses a CSV of points. Each line is either `x1,...,xd` (ids follow line
/// order) or `id,x1,...,xd`; the two forms must not be mixed. Explicit ids
/// must be a permutation of 0..n-1; rows are stored in id order.
/// Errors: ParseError (malformed token, with line number), SchemaError
/// (inconsistent width, bad ids), ValidationError (non-finite coordinate).
RowStore ingest_csv(const std::filesystem::path& path, int dimension);

/// Writes `id,x1,...,xd` lines with shortest round-trip formatting, so
/// ingest_csv(write_csv(store)) reproduces the store bit for bit.
void write_csv(const RowStore& store, const std::filesystem::path& path);

/// Rows lo..hi-1 in id order. Throws InvalidInputError out of range.
std::vector<Point> read_range(const RowStore& store, std::int64_t lo, std::int64_t hi);

/// Synthetic spatial data: n_centers centers drawn uniformly in
/// [0, center_box]^dimension, points sampled from isotropic Gaussians around
/// round-robin-assigned centers.
struct BlobSpec {
  std::int64_t n_points = 0;
  std::int32_t n_centers = 1;
  double center_box = 1000.0;
  double stddev = 25.0;
  std::uint64_t seed = 0;
  int dimension = 2;
};

/// Seed-deterministic blob generation. Throws InvalidInputError on a spec
/// violating n_points >= n_centers >= 1, stddev > 0 or dimension >= 1.
RowStore generate_blobs(const BlobSpec& spec);

/// Shortest decimal form of a double that parses back to the same bits.
std::string format_double(double value);

/// Strict double parser used by every reader (no locale, full-token match).
double parse_double(std::string_view token, std::size_t line_number);

}  // namespace medoidsmr
