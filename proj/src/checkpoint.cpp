#include "brocard/checkpoint.hpp"

#include "brocard/errors.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

namespace brocard {

namespace {

std::uint32_t crc32_of(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  return static_cast<std::uint32_t>(crc);
}

std::string hex8(std::uint32_t value) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", value);
  return buf;
}

CheckpointError malformed(const std::string& what) {
  return CheckpointError(CheckpointError::Kind::kFormat, "malformed checkpoint: " + what);
}

std::uint64_t parse_u64(std::string_view text, const char* field) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw malformed(std::string("bad ") + field + " value '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_lines(std::string_view bytes) {
  std::vector<std::string_view> lines;
  while (!bytes.empty()) {
    const std::size_t eol = bytes.find('\n');
    if (eol == std::string_view::npos) throw malformed("last line is not LF terminated");
    lines.push_back(bytes.substr(0, eol));
    bytes.remove_prefix(eol + 1);
  }
  return lines;
}

std::string_view expect_field(std::string_view line, std::string_view key) {
  if (line.size() <= key.size() || line.substr(0, key.size()) != key ||
      line[key.size()] != '=') {
    throw malformed("expected '" + std::string(key) + "=' line, got '" + std::string(line) + "'");
  }
  return line.substr(key.size() + 1);
}

}  // namespace

std::string serialize_checkpoint(const FactorialState& state, const PrimePool& pool) {
  if (state.residues.size() != pool.primes.size()) {
    throw DomainError("serialize_checkpoint: residue count does not match the pool");
  }
  std::ostringstream body;
  body << kCheckpointHeader << '\n'
       << "max_n=" << pool.max_n << '\n'
       << "n=" << state.n << '\n'
       << "primes=" << pool.primes.size() << '\n';
  for (std::size_t i = 0; i < pool.primes.size(); ++i) {
    body << pool.primes[i] << ',' << state.residues[i] << '\n';
  }
  std::string out = body.str();
  out += "crc32=" + hex8(crc32_of(out)) + '\n';
  return out;
}

FactorialState parse_checkpoint(std::string_view bytes, const PrimePool& expected_pool) {
  const std::size_t first_eol = bytes.find('\n');
  if (first_eol == std::string_view::npos || bytes.substr(0, first_eol) != kCheckpointHeader) {
    throw CheckpointError(CheckpointError::Kind::kVersion,
                          "unsupported checkpoint version line '" +
                              std::string(bytes.substr(0, std::min(first_eol, bytes.size()))) +
                              "'");
  }

  if (bytes.empty() || bytes.back() != '\n') throw malformed("last line is not LF terminated");
  const std::size_t crc_start = bytes.rfind('\n', bytes.size() - 2) + 1;
  const std::string_view crc_line = bytes.substr(crc_start, bytes.size() - crc_start - 1);
  const std::string_view stored = expect_field(crc_line, "crc32");
  const std::string_view body = bytes.substr(0, crc_start);
  if (stored.size() != 8 || stored != hex8(crc32_of(body))) {
    throw CheckpointError(CheckpointError::Kind::kChecksum,
                          "checkpoint checksum mismatch (stored crc32=" + std::string(stored) +
                              ")");
  }

  const std::vector<std::string_view> lines = split_lines(body);
  if (lines.size() < 4) throw malformed("truncated header");
  const std::uint64_t max_n = parse_u64(expect_field(lines[1], "max_n"), "max_n");
  FactorialState state;
  state.n = parse_u64(expect_field(lines[2], "n"), "n");
  const std::uint64_t count = parse_u64(expect_field(lines[3], "primes"), "primes");
  if (lines.size() != 4 + count) throw malformed("prime count does not match body");

  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  state.residues.reserve(count);
  for (std::size_t i = 4; i < lines.size(); ++i) {
    const std::size_t comma = lines[i].find(',');
    if (comma == std::string_view::npos) throw malformed("bad prime line");
    const std::uint64_t p = parse_u64(lines[i].substr(0, comma), "prime");
    const std::uint64_t r = parse_u64(lines[i].substr(comma + 1), "residue");
    if (r == 0 || r >= p) throw malformed("residue out of range for prime " + std::to_string(p));
    primes.push_back(p);
    state.residues.push_back(r);
  }

  if (max_n != expected_pool.max_n || primes != expected_pool.primes) {
    throw CheckpointError(CheckpointError::Kind::kPoolMismatch,
                          "checkpoint was written for a different scan (max_n=" +
                              std::to_string(max_n) + ", " + std::to_string(primes.size()) +
                              " primes)");
  }
  if (state.n > max_n) throw malformed("cursor beyond max_n");
  return state;
}

void write_file_atomically(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StorageError("cannot open '" + tmp.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw StorageError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw StorageError("cannot rename '" + tmp.string() + "' to '" + path.string() +
                       "': " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot open '" + path.string() + "' for reading");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void save_checkpoint(const FactorialState& state, const PrimePool& pool,
                     const std::filesystem::path& path) {
  write_file_atomically(path, serialize_checkpoint(state, pool));
}

FactorialState load_checkpoint(const std::filesystem::path& path, const PrimePool& expected_pool) {
  return parse_checkpoint(read_file(path), expected_pool);
}

}  // namespace brocard
