#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "medoidsmr/errors.hpp"

namespace medoidsmr {

/// A contiguous, half-open range of row ids processed by one map task.
struct InputSplit {
  std::int32_t split_id = 0;
  std::int64_t begin = 0;
  std::int64_t end = 0;

  std::int64_t size() const noexcept { return end - begin; }
};

/// Cuts [0, row_count) into num_splits contiguous ranges whose sizes differ
/// by at most one. Deterministic.
std::vector<InputSplit> make_splits(std::int64_t row_count, std::int32_t num_splits);

/// The (key, value) unit flowing through map, shuffle and reduce.
template <typename Key, typename Value>
struct KeyedRecord {
  Key key;
  Value value;

  bool operator==(const KeyedRecord&) const = default;
};

/// Execution knobs. num_workers is the desk-scale analogue of a cluster's
/// node count; results never depend on it. num_splits of zero means one
/// split per worker. max_iterations caps iterative drivers built on run_job.
struct JobConfig {
  std::int32_t num_workers = 1;
  std::int32_t num_splits = 0;
  std::int32_t max_iterations = 100;

  std::int32_t resolved_splits() const { return num_splits > 0 ? num_splits : num_workers; }
};

struct JobMetrics {
  double map_ms = 0.0;
  double shuffle_ms = 0.0;
  double reduce_ms = 0.0;
  double total_ms = 0.0;
};

/// A map function, a reduce function, the deterministic ordering of values
/// inside a reduce group, and the read-only snapshot every task may consult.
/// Both functions must be pure with respect to the shared context.
template <typename Row, typename Key, typename Value, typename Out, typename Context>
struct JobDefinition {
  using MapRecord = KeyedRecord<Key, Value>;
  using OutRecord = KeyedRecord<Key, Out>;

  std::function<void(const Row&, const Context&, std::vector<MapRecord>&)> map_fn;
  std::function<void(const Key&, const std::vector<Value>&, const Context&,
                     std::vector<OutRecord>&)>
      reduce_fn;
  std::function<bool(const Value&, const Value&)> value_less;
  const Context* shared_context = nullptr;
};

template <typename Key, typename Out>
struct JobResult {
  std::map<Key, std::vector<KeyedRecord<Key, Out>>> outputs;
  JobMetrics metrics;
};

namespace detail {

/// Physical thread count for a phase: the configured worker count, clamped by
/// the task count and by MEDOIDSMR_THREADS when set.
inline std::int32_t resolve_physical_workers(std::int32_t num_workers, std::int64_t num_tasks) {
  std::int64_t n = std::max<std::int64_t>(1, std::min<std::int64_t>(num_workers, num_tasks));
  if (const char* cap_text = std::getenv("MEDOIDSMR_THREADS")) {
    const long cap = std::strtol(cap_text, nullptr, 10);
    if (cap >= 1) {
      n = std::min<std::int64_t>(n, cap);
    }
  }
  return static_cast<std::int32_t>(n);
}

/// Runs body(0..num_tasks-1) on a pool of at most num_workers threads.
/// Exceptions are captured per task; the one with the smallest task index is
/// reported through on_error(index, message) after all threads join.
inline void run_tasks(std::int64_t num_tasks, std::int32_t num_workers,
                      const std::function<void(std::int64_t)>& body,
                      const std::function<void(std::int64_t, const std::string&)>& on_error) {
  if (num_tasks <= 0) {
    return;
  }
  const std::int32_t physical = resolve_physical_workers(num_workers, num_tasks);
  std::vector<std::string> errors(static_cast<std::size_t>(num_tasks));
  std::vector<char> failed(static_cast<std::size_t>(num_tasks), 0);

  auto run_one = [&](std::int64_t task) {
    try {
      body(task);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(task)] = e.what();
      failed[static_cast<std::size_t>(task)] = 1;
    } catch (...) {
      errors[static_cast<std::size_t>(task)] = "unknown error";
      failed[static_cast<std::size_t>(task)] = 1;
    }
  };

  if (physical <= 1) {
    for (std::int64_t t = 0; t < num_tasks; ++t) {
      run_one(t);
    }
  } else {
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::int64_t t = next.fetch_add(1, std::memory_order_relaxed);
        if (t >= num_tasks) {
          return;
        }
        run_one(t);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(physical));
    for (std::int32_t i = 0; i < physical; ++i) {
      pool.emplace_back(worker);
    }
    for (std::thread& th : pool) {
      th.join();
    }
  }

  for (std::int64_t t = 0; t < num_tasks; ++t) {
    if (failed[static_cast<std::size_t>(t)]) {
      on_error(t, errors[static_cast<std::size_t>(t)]);
    }
  }
}

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

template <typename Key>
std::string describe_key(const Key& key) {
  if constexpr (std::is_arithmetic_v<Key>) {
    return std::to_string(key);
  } else if constexpr (std::is_convertible_v<Key, std::string>) {
    return std::string(key);
  } else {
    return "<key>";
  }
}

}  // namespace detail

/// Groups records by key and sorts each group's values with the supplied
/// deterministic ordering. Key iteration order is ascending. Values that
/// compare equal keep their input order, so the result is identical for any
/// input that is a reordering of whole sorted runs.
template <typename Key, typename Value>
std::map<Key, std::vector<Value>> shuffle(
    std::vector<KeyedRecord<Key, Value>> records,
    const std::function<bool(const Value&, const Value&)>& value_less) {
  std::map<Key, std::vector<Value>> groups;
  for (KeyedRecord<Key, Value>& rec : records) {
    groups[rec.key].push_back(std::move(rec.value));
  }
  for (auto& [key, values] : groups) {
    if (!std::is_sorted(values.begin(), values.end(), value_less)) {
      std::stable_sort(values.begin(), values.end(), value_less);
    }
  }
  return groups;
}

/// Runs one map-shuffle-reduce job over the given rows.
///
/// Semantics: apply map_fn to every row, group all emitted records by key,
/// sort each group's values with value_less, apply reduce_fn per key. Map
/// tasks run concurrently over splits and reduce tasks concurrently over
/// keys, with a completion barrier in between; per-split outputs are merged
/// in split order, so the result is bit-identical for any worker count and
/// any task completion order. Task failures surface as JobError naming the
/// offending split or key.
template <typename Row, typename Key, typename Value, typename Out, typename Context>
JobResult<Key, Out> run_job(std::span<const Row> rows, const std::vector<InputSplit>& splits,
                            const JobDefinition<Row, Key, Value, Out, Context>& job,
                            const JobConfig& config) {
  if (!job.map_fn || !job.reduce_fn || !job.value_less) {
    throw InvalidInputError("job definition is missing map_fn, reduce_fn or value_less");
  }
  if (job.shared_context == nullptr) {
    throw InvalidInputError("job definition has no shared context snapshot");
  }
  if (config.num_workers < 1) {
    throw InvalidInputError("num_workers must be at least 1");
  }
  // Splits must partition the row range.
  std::int64_t expected_begin = 0;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (splits[i].begin != expected_begin || splits[i].end < splits[i].begin) {
      throw InvalidInputError("splits do not form a contiguous partition");
    }
    expected_begin = splits[i].end;
  }
  if (expected_begin != static_cast<std::int64_t>(rows.size())) {
    throw InvalidInputError("splits cover " + std::to_string(expected_begin) + " rows, input has " +
                            std::to_string(rows.size()));
  }

  const Context& context = *job.shared_context;
  JobResult<Key, Out> result;
  const auto job_start = std::chrono::steady_clock::now();

  // Map phase.
  auto map_start = std::chrono::steady_clock::now();
  std::vector<std::vector<KeyedRecord<Key, Value>>> split_outputs(splits.size());
  detail::run_tasks(
      static_cast<std::int64_t>(splits.size()), config.num_workers,
      [&](std::int64_t s) {
        const InputSplit& split = splits[static_cast<std::size_t>(s)];
        auto& out = split_outputs[static_cast<std::size_t>(s)];
        out.reserve(static_cast<std::size_t>(split.size()));
        for (std::int64_t r = split.begin; r < split.end; ++r) {
          job.map_fn(rows[static_cast<std::size_t>(r)], context, out);
        }
      },
      [&](std::int64_t s, const std::string& message) {
        throw JobError("map task failed on split " +
                       std::to_string(splits[static_cast<std::size_t>(s)].split_id) + ": " +
                       message);
      });
  result.metrics.map_ms = detail::elapsed_ms(map_start);

  // Shuffle: merge per-split outputs in split order, then group by key.
  auto shuffle_start = std::chrono::steady_clock::now();
  std::size_t total_records = 0;
  for (const auto& out : split_outputs) {
    total_records += out.size();
  }
  std::vector<KeyedRecord<Key, Value>> merged;
  merged.reserve(total_records);
  for (auto& out : split_outputs) {
    for (KeyedRecord<Key, Value>& rec : out) {
      merged.push_back(std::move(rec));
    }
    out.clear();
    out.shrink_to_fit();
  }
  std::map<Key, std::vector<Value>> groups = shuffle<Key, Value>(std::move(merged), job.value_less);
  result.metrics.shuffle_ms = detail::elapsed_ms(shuffle_start);

  // Reduce phase: one task per key, merged back in ascending key order.
  auto reduce_start = std::chrono::steady_clock::now();
  std::vector<const Key*> keys;
  std::vector<const std::vector<Value>*> group_values;
  keys.reserve(groups.size());
  group_values.reserve(groups.size());
  for (const auto& [key, values] : groups) {
    keys.push_back(&key);
    group_values.push_back(&values);
  }
  std::vector<std::vector<KeyedRecord<Key, Out>>> reduce_outputs(keys.size());
  detail::run_tasks(
      static_cast<std::int64_t>(keys.size()), config.num_workers,
      [&](std::int64_t i) {
        job.reduce_fn(*keys[static_cast<std::size_t>(i)],
                      *group_values[static_cast<std::size_t>(i)], context,
                      reduce_outputs[static_cast<std::size_t>(i)]);
      },
      [&](std::int64_t i, const std::string& message) {
        throw JobError("reduce task failed on key " +
                       detail::describe_key(*keys[static_cast<std::size_t>(i)]) + ": " + message);
      });
  for (std::size_t i = 0; i < keys.size(); ++i) {
    result.outputs.emplace(*keys[i], std::move(reduce_outputs[i]));
  }
  result.metrics.reduce_ms = detail::elapsed_ms(reduce_start);
  result.metrics.total_ms = detail::elapsed_ms(job_start);
  return result;
}

}  // namespace medoidsmr
