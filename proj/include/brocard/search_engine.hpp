#pragma once

#include "brocard/factorial_engine.hpp"
#include "brocard/natural.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

namespace brocard {

struct SearchConfig {
  std::uint64_t max_n = 100;
  std::size_t pool_size = kDefaultPoolSize;
  std::optional<std::filesystem::path> checkpoint_path;
  std::uint64_t checkpoint_interval = 100'000;
  std::uint64_t exact_verify_ceiling = kDefaultExactCeiling;
  std::size_t worker_count = 1;
  /// Continue from checkpoint_path instead of starting at n = 2.
  bool resume = false;
  /// Stop (and checkpoint) once the cursor reaches this n, leaving the rest
  /// of the range for a later resume.
  std::optional<std::uint64_t> stop_at;
};

enum class SurvivorVerdict { kSolution, kNonSolution, kUnresolved };

/// An n that passed the residue filter and how exact arithmetic settled it.
struct SurvivorRecord {
  std::uint64_t n = 0;
  SurvivorVerdict verdict = SurvivorVerdict::kUnresolved;
  std::optional<Natural> m;

  friend bool operator==(const SurvivorRecord&, const SurvivorRecord&) = default;
};

struct SearchSummary {
  std::uint64_t from_n = 2;
  std::uint64_t to_n = 1;  // last n scanned; from_n > to_n when nothing was
  bool completed = false;  // cursor reached max_n
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> rejections_by_prime;  // aligned with primes
  std::vector<SurvivorRecord> survivors;           // every filter pass, n order
  std::uint64_t survivors_exact_checked = 0;       // == survivors.size()
  std::uint64_t unresolved = 0;
  double wall_time_seconds = 0.0;

  std::uint64_t scanned() const { return to_n >= from_n ? to_n - from_n + 1 : 0; }
  std::vector<std::pair<std::uint64_t, Natural>> solutions() const;
};

/// Called once per survivor, in increasing n, as soon as it is settled.
using SurvivorSink = std::function<void(const SurvivorRecord&)>;

/// Scans n = 2..max_n (or from a checkpoint): advance residues, reject by
/// quadratic residue symbols, settle survivors exactly. Output does not
/// depend on worker_count.
///
/// Throws CheckpointError when resuming from a checkpoint built for another
/// scan, StorageError on checkpoint I/O failures.
SearchSummary run(const SearchConfig& config, const SurvivorSink& sink = {});

}  // namespace brocard
