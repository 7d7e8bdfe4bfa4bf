#include "brocard/search_engine.hpp"

#include "brocard/checkpoint.hpp"
#include "brocard/conditions.hpp"
#include "brocard/errors.hpp"
#include "brocard/exact_arith.hpp"
#include "brocard/qr_filter.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <string>
#include <thread>

namespace brocard {

namespace {

using json = nlohmann::json;

// Upper bound on one scan segment; checkpoints land on segment ends.
constexpr std::uint64_t kMaxSegment = std::uint64_t{1} << 20;
// Below this many n per worker, extra threads cost more than they save.
constexpr std::uint64_t kMinPerWorker = 4096;

struct SegmentResult {
  std::vector<std::uint64_t> rejections;
  std::vector<std::uint64_t> survivors;
};

// Scans n in [lo, hi] starting from residues of (lo-1)!, leaving hi! in
// `residues`.
void scan_range(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& residues,
                const std::vector<std::uint64_t>& primes, SegmentResult& out) {
  const std::size_t count = primes.size();
  out.rejections.assign(count, 0);
  for (std::uint64_t n = lo; n <= hi; ++n) {
    for (std::size_t i = 0; i < count; ++i) residues[i] = mulmod(residues[i], n, primes[i]);
    const std::size_t idx = first_rejector(residues, primes);
    if (idx < count) {
      ++out.rejections[idx];
    } else {
      out.survivors.push_back(n);
    }
  }
}

// Processes [lo, hi] with up to `workers` threads. Each worker owns a
// contiguous sub-range; its starting residues come from a prefix product
// of the earlier sub-ranges, so the result is identical for any worker
// count.
SegmentResult scan_segment(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& residues,
                           const std::vector<std::uint64_t>& primes, std::size_t workers) {
  const std::uint64_t length = hi - lo + 1;
  workers = static_cast<std::size_t>(
      std::clamp<std::uint64_t>(length / kMinPerWorker, 1, std::max<std::size_t>(workers, 1)));
  if (workers == 1) {
    SegmentResult result;
    scan_range(lo, hi, residues, primes, result);
    return result;
  }

  std::vector<std::uint64_t> bounds(workers + 1);
  for (std::size_t w = 0; w <= workers; ++w) bounds[w] = lo + length * w / workers;

  // Range products of sub-ranges 0..workers-2 (the last is never needed).
  std::vector<std::vector<std::uint64_t>> products(workers - 1,
                                                   std::vector<std::uint64_t>(primes.size()));
  {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w + 1 < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = 0; i < primes.size(); ++i) {
          products[w][i] = range_product_mod(bounds[w], bounds[w + 1] - 1, primes[i]);
        }
      });
    }
    for (auto& t : threads) t.join();
  }

  std::vector<std::vector<std::uint64_t>> starts(workers, residues);
  for (std::size_t w = 1; w < workers; ++w) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      starts[w][i] = mulmod(starts[w - 1][i], products[w - 1][i], primes[i]);
    }
  }

  std::vector<SegmentResult> partial(workers);
  {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        scan_range(bounds[w], bounds[w + 1] - 1, starts[w], primes, partial[w]);
      });
    }
    for (auto& t : threads) t.join();
  }

  SegmentResult merged;
  merged.rejections.assign(primes.size(), 0);
  for (const SegmentResult& part : partial) {
    for (std::size_t i = 0; i < primes.size(); ++i) merged.rejections[i] += part.rejections[i];
    merged.survivors.insert(merged.survivors.end(), part.survivors.begin(), part.survivors.end());
  }
  residues = std::move(starts.back());
  return merged;
}

SurvivorRecord settle(std::uint64_t n, std::uint64_t ceiling) {
  SurvivorRecord record{n, SurvivorVerdict::kUnresolved, std::nullopt};
  if (n > ceiling) return record;
  const VerifyReport report = verify(n, ceiling);
  record.verdict = report.is_solution ? SurvivorVerdict::kSolution : SurvivorVerdict::kNonSolution;
  record.m = report.m;
  return record;
}

const char* verdict_name(SurvivorVerdict v) {
  switch (v) {
    case SurvivorVerdict::kSolution: return "solution";
    case SurvivorVerdict::kNonSolution: return "survivor";
    case SurvivorVerdict::kUnresolved: return "unresolved";
  }
  return "unresolved";
}

SurvivorVerdict verdict_from_name(const std::string& name) {
  if (name == "solution") return SurvivorVerdict::kSolution;
  if (name == "survivor") return SurvivorVerdict::kNonSolution;
  if (name == "unresolved") return SurvivorVerdict::kUnresolved;
  throw CheckpointError(CheckpointError::Kind::kFormat, "unknown survivor verdict '" + name + "'");
}

// Running totals live next to the checkpoint so a resumed scan reports the
// whole range, not just the part after the restart.
std::filesystem::path tally_path(const std::filesystem::path& checkpoint) {
  std::filesystem::path p = checkpoint;
  p += ".tally";
  return p;
}

void save_tally(const std::filesystem::path& path, std::uint64_t n, const SearchSummary& s) {
  json j;
  j["n"] = n;
  j["from_n"] = s.from_n;
  j["rejections"] = s.rejections_by_prime;
  j["unresolved"] = s.unresolved;
  j["survivors"] = json::array();
  for (const SurvivorRecord& r : s.survivors) {
    json entry{{"n", r.n}, {"verdict", verdict_name(r.verdict)}};
    if (r.m) entry["m"] = r.m->to_string();
    j["survivors"].push_back(std::move(entry));
  }
  write_file_atomically(path, j.dump() + '\n');
}

void restore_tally(const std::filesystem::path& path, std::uint64_t n, SearchSummary& s) {
  json j;
  try {
    j = json::parse(read_file(path));
    if (j.at("n").get<std::uint64_t>() != n) {
      throw CheckpointError(CheckpointError::Kind::kFormat,
                            "tally file '" + path.string() + "' does not match checkpoint cursor");
    }
    s.from_n = j.at("from_n").get<std::uint64_t>();
    auto rejections = j.at("rejections").get<std::vector<std::uint64_t>>();
    if (rejections.size() != s.primes.size()) {
      throw CheckpointError(CheckpointError::Kind::kFormat,
                            "tally file '" + path.string() + "' has the wrong pool size");
    }
    s.rejections_by_prime = std::move(rejections);
    s.unresolved = j.at("unresolved").get<std::uint64_t>();
    for (const json& entry : j.at("survivors")) {
      SurvivorRecord r;
      r.n = entry.at("n").get<std::uint64_t>();
      r.verdict = verdict_from_name(entry.at("verdict").get<std::string>());
      if (entry.contains("m")) r.m = Natural::parse(entry.at("m").get<std::string>());
      s.survivors.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw CheckpointError(CheckpointError::Kind::kFormat,
                          "tally file '" + path.string() + "' is malformed: " + e.what());
  }
  s.survivors_exact_checked = s.survivors.size();
}

}  // namespace

std::vector<std::pair<std::uint64_t, Natural>> SearchSummary::solutions() const {
  std::vector<std::pair<std::uint64_t, Natural>> out;
  for (const SurvivorRecord& r : survivors) {
    if (r.verdict == SurvivorVerdict::kSolution) out.emplace_back(r.n, *r.m);
  }
  return out;
}

SearchSummary run(const SearchConfig& config, const SurvivorSink& sink) {
  const auto started = std::chrono::steady_clock::now();
  if (config.checkpoint_interval == 0) throw DomainError("checkpoint interval must be positive");
  if (config.resume && !config.checkpoint_path) {
    throw DomainError("resume requested without a checkpoint path");
  }
  const PrimePool pool = build_prime_pool(config.max_n, config.pool_size);

  SearchSummary summary;
  summary.primes = pool.primes;
  summary.rejections_by_prime.assign(pool.primes.size(), 0);

  FactorialState state = FactorialState::initial(pool);
  if (config.resume) {
    state = load_checkpoint(*config.checkpoint_path, pool);
    const auto tally = tally_path(*config.checkpoint_path);
    if (std::filesystem::exists(tally)) {
      restore_tally(tally, state.n, summary);
    } else {
      summary.from_n = std::max<std::uint64_t>(state.n + 1, 2);
    }
    for (const SurvivorRecord& r : summary.survivors) {
      if (sink) sink(r);
    }
  } else if (config.max_n >= 1) {
    state = advance(std::move(state), pool);  // n = 1; scanning starts at 2
  }

  const std::uint64_t stop =
      config.stop_at ? std::min(*config.stop_at, config.max_n) : config.max_n;

  while (state.n < stop) {
    const std::uint64_t lo = state.n + 1;
    const std::uint64_t next_mark =
        (state.n / config.checkpoint_interval + 1) * config.checkpoint_interval;
    const std::uint64_t hi = std::min({stop, next_mark, state.n + kMaxSegment});

    SegmentResult segment = scan_segment(lo, hi, state.residues, pool.primes, config.worker_count);
    state.n = hi;
    for (std::size_t i = 0; i < pool.primes.size(); ++i) {
      summary.rejections_by_prime[i] += segment.rejections[i];
    }
    for (std::uint64_t n : segment.survivors) {
      SurvivorRecord record = settle(n, config.exact_verify_ceiling);
      if (record.verdict == SurvivorVerdict::kUnresolved) ++summary.unresolved;
      ++summary.survivors_exact_checked;
      if (sink) sink(record);
      summary.survivors.push_back(std::move(record));
    }

    if (config.checkpoint_path && (hi % config.checkpoint_interval == 0 || hi == stop)) {
      save_checkpoint(state, pool, *config.checkpoint_path);
      save_tally(tally_path(*config.checkpoint_path), state.n, summary);
    }
  }

  summary.to_n = std::max<std::uint64_t>(state.n, summary.from_n - 1);
  summary.completed = state.n >= config.max_n;
  summary.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return summary;
}

}  // namespace brocard
