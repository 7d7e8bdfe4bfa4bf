#include "brocard/report.hpp"

#include "brocard/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace brocard {

namespace {

const char* kind_name(ReportKind kind) {
  switch (kind) {
    case ReportKind::kSolution: return "solution";
    case ReportKind::kSurvivor: return "survivor";
    case ReportKind::kUnresolved: return "unresolved";
    case ReportKind::kSummary: return "summary";
  }
  return "summary";
}

// Counter names are produced internally ([a-z0-9_] only), so no escaping.
std::string quoted(const std::string& s) { return '"' + s + '"'; }

}  // namespace

std::string to_json(const ReportLine& line) {
  if (line.kind == ReportKind::kSolution && !line.m) {
    throw std::logic_error("solution report line without m");
  }
  std::string out = "{\"kind\":" + quoted(kind_name(line.kind)) + ",\"n\":" + line.n.to_string();
  if (line.m) out += ",\"m\":" + line.m->to_string();
  if (line.rejecting_prime) out += ",\"rejecting_prime\":" + std::to_string(*line.rejecting_prime);
  if (line.kind == ReportKind::kSummary) {
    out += ",\"counters\":{";
    for (std::size_t i = 0; i < line.counters.size(); ++i) {
      if (i) out += ',';
      out += quoted(line.counters[i].first) + ':' + std::to_string(line.counters[i].second);
    }
    out += '}';
  }
  out += '}';
  return out;
}

ReportLine line_for(const SurvivorRecord& record) {
  ReportLine line;
  line.n = Natural(record.n);
  switch (record.verdict) {
    case SurvivorVerdict::kSolution:
      line.kind = ReportKind::kSolution;
      line.m = record.m;
      break;
    case SurvivorVerdict::kNonSolution: line.kind = ReportKind::kSurvivor; break;
    case SurvivorVerdict::kUnresolved: line.kind = ReportKind::kUnresolved; break;
  }
  return line;
}

ReportLine summary_line(const SearchSummary& summary, bool include_wall_time) {
  ReportLine line;
  line.kind = ReportKind::kSummary;
  line.n = Natural(summary.to_n);
  std::uint64_t solutions = 0;
  for (const SurvivorRecord& r : summary.survivors) {
    if (r.verdict == SurvivorVerdict::kSolution) ++solutions;
  }
  auto& c = line.counters;
  c.emplace_back("from_n", summary.from_n);
  c.emplace_back("to_n", summary.to_n);
  c.emplace_back("scanned", summary.scanned());
  c.emplace_back("completed", summary.completed ? 1 : 0);
  c.emplace_back("survivors", summary.survivors_exact_checked);
  c.emplace_back("solutions", solutions);
  c.emplace_back("unresolved", summary.unresolved);
  for (std::size_t i = 0; i < summary.primes.size(); ++i) {
    c.emplace_back("rejected_by_" + std::to_string(summary.primes[i]),
                   summary.rejections_by_prime[i]);
  }
  if (include_wall_time) {
    c.emplace_back(kWallTimeCounter,
                   static_cast<std::uint64_t>(std::llround(summary.wall_time_seconds * 1000.0)));
  }
  return line;
}

ReportWriter::ReportWriter(const std::filesystem::path& path)
    : file_(path, std::ios::binary | std::ios::trunc), out_(&file_), path_(path) {
  if (!file_) throw StorageError("cannot open report '" + path.string() + "' for writing");
}

void ReportWriter::write(const ReportLine& line) {
  *out_ << to_json(line) << '\n';
  out_->flush();
  if (!*out_) {
    throw StorageError("report write failed" +
                       (path_.empty() ? std::string() : " for '" + path_.string() + "'"));
  }
}

void emit_report(std::span<const ReportLine> lines, std::ostream& out) {
  ReportWriter writer(out);
  for (const ReportLine& line : lines) writer.write(line);
  if (lines.empty() || lines.back().kind != ReportKind::kSummary) {
    ReportLine empty;
    empty.kind = ReportKind::kSummary;
    empty.counters = {{"scanned", 0}, {"survivors", 0}, {"solutions", 0}, {"unresolved", 0}};
    writer.write(empty);
  }
}

void emit_report(std::span<const ReportLine> lines, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw StorageError("cannot open report '" + path.string() + "' for writing");
  emit_report(lines, file);
}

}  // namespace brocard
