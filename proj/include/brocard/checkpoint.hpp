#pragma once

#include "brocard/factorial_engine.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace brocard {

// Checkpoint file, ASCII with LF line endings:
//
//   BROCARD-CHECKPOINT v1
//   max_n=<decimal>
//   n=<decimal>
//   primes=<count>
//   <prime>,<residue>        one line per pool prime, pool order
//   crc32=<8 lowercase hex>  CRC-32 of every preceding byte

inline constexpr std::string_view kCheckpointHeader = "BROCARD-CHECKPOINT v1";

std::string serialize_checkpoint(const FactorialState& state, const PrimePool& pool);

/// Validates and decodes checkpoint bytes against the pool the caller is
/// about to scan with. Throws CheckpointError (version, checksum, pool
/// mismatch or malformed body).
FactorialState parse_checkpoint(std::string_view bytes, const PrimePool& expected_pool);

/// Writes to a sibling temp file and renames it over `path`.
void save_checkpoint(const FactorialState& state, const PrimePool& pool,
                     const std::filesystem::path& path);

FactorialState load_checkpoint(const std::filesystem::path& path, const PrimePool& expected_pool);

/// Atomic whole-file write shared by checkpoint and tally files.
void write_file_atomically(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

}  // namespace brocard
