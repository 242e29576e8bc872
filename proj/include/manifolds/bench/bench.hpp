#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace manifolds::bench {

inline const std::vector<std::string>& manifold_ids() {
  static const std::vector<std::string> ids = {"euclidean3", "so3", "spd3", "spd3_power_128x128",
                                               "sphere2"};
  return ids;
}

inline const std::vector<std::string>& op_ids() {
  static const std::vector<std::string> ids = {"distance", "retract", "inverse_retract"};
  return ids;
}

struct BenchConfig {
  std::vector<std::string> manifolds = manifold_ids();
  std::vector<std::string> ops = op_ids();
  double min_seconds = 1.0;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct BenchRecord {
  std::string manifold;
  std::string op;
  std::int64_t reps = 0;
  double total_seconds = 0.0;
  double per_op_us = 0.0;

  bool operator==(const BenchRecord&) const = default;
};

/// Largest exponent N tried for 10^N repetitions.
inline constexpr int kMaxRepetitionExponent = 9;

/// Opaque to the optimizer: the value is treated as read and all memory as
/// possibly modified.
template <class T>
inline void do_not_optimize(T const& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}

/// Wall time in seconds of `reps` calls body(i), i = 0..reps-1.
template <class Body>
double time_loop(std::int64_t reps, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t i = 0; i < reps; ++i) body(i);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

/// Runs body 10^N times for N = 1, 2, ... until one timed loop lasts at least
/// min_seconds. Each timed loop is preceded by an identical untimed warm-up
/// loop. Throws when 10^kMaxRepetitionExponent repetitions are not enough.
template <class Body>
BenchRecord measure(const std::string& manifold, const std::string& op, double min_seconds, Body&& body) {
  std::int64_t reps = 1;
  for (int n = 1; n <= kMaxRepetitionExponent; ++n) {
    reps *= 10;
    time_loop(reps, body);
    const double seconds = time_loop(reps, body);
    if (seconds >= min_seconds) return {manifold, op, reps, seconds, seconds * 1e6 / static_cast<double>(reps)};
  }
  throw std::runtime_error("min_seconds not reached within 10^" + std::to_string(kMaxRepetitionExponent) +
                           " repetitions of " + manifold + "/" + op);
}

/// Checks ids, min_seconds > 0 and threads == 1; throws std::invalid_argument.
void validate(const BenchConfig& cfg);

/// One record per selected (manifold, op) pair, in manifold-major order of the
/// selection. Inputs are drawn from a generator seeded by (seed, manifold,
/// op), so they depend only on those three values.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

/// Sum of all input entries for a (manifold, op, seed) triple; equal
/// fingerprints indicate identical generated inputs.
double input_fingerprint(const std::string& manifold, const std::string& op, std::uint64_t seed);

/// Header `manifold,op,reps,total_seconds,per_op_us`, one row per record,
/// shortest round-trip decimal formatting, newline terminated.
std::string emit_csv(const std::vector<BenchRecord>& records);

/// Inverse of emit_csv; throws std::invalid_argument on malformed input.
std::vector<BenchRecord> parse_csv(std::string_view text);

/// Splits a comma-separated list, dropping empty entries.
std::vector<std::string> split_list(std::string_view text);

}  // namespace manifolds::bench
