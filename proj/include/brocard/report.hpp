#pragma once

#include "brocard/natural.hpp"
#include "brocard/search_engine.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace brocard {

enum class ReportKind { kSolution, kSurvivor, kUnresolved, kSummary };

/// One JSON-lines record. Keys, in order: kind, n, m, rejecting_prime,
/// counters; absent fields are omitted. Numbers are written as exact
/// decimal literals.
struct ReportLine {
  ReportKind kind = ReportKind::kSummary;
  Natural n;
  std::optional<Natural> m;
  std::optional<std::uint64_t> rejecting_prime;
  std::vector<std::pair<std::string, std::uint64_t>> counters;  // summary only
};

/// Counter name carrying elapsed milliseconds. It is the only
/// nondeterministic value in a report.
inline constexpr const char* kWallTimeCounter = "wall_time_ms";

std::string to_json(const ReportLine& line);

ReportLine line_for(const SurvivorRecord& record);

/// Summary record for a finished (or stopped) scan; n is the last scanned n.
ReportLine summary_line(const SearchSummary& summary, bool include_wall_time = true);

/// Streams lines to an ostream, flushing after each one so long runs can be
/// tailed.
class ReportWriter {
 public:
  explicit ReportWriter(std::ostream& out) : out_(&out) {}
  /// Opens (truncating) a report file; throws StorageError with the path.
  explicit ReportWriter(const std::filesystem::path& path);

  void write(const ReportLine& line);

 private:
  std::ofstream file_;
  std::ostream* out_;
  std::filesystem::path path_;
};

/// Writes every line, then a zero-counter summary if the stream did not end
/// with one.
void emit_report(std::span<const ReportLine> lines, std::ostream& out);
void emit_report(std::span<const ReportLine> lines, const std::filesystem::path& path);

}  // namespace brocard
