#pragma once

#include "brocard/conditions.hpp"
#include "brocard/epsilon_lab.hpp"
#include "brocard/natural.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace brocard {

/// Worked values for n = 1..11 as they circulate in the literature: two
/// independently printed lists of k = floor(sqrt(n!)), the decimal eps, and
/// eps^2/(2(1-eps)). Some entries are misprinted; the table command
/// recomputes everything and flags the disagreements.
struct ReferenceRow {
  std::uint64_t n;
  std::uint64_t k_criterion_list;  // list accompanying the k(k+2) = n! criterion
  std::uint64_t k_epsilon_list;    // list accompanying the eps examples
  const char* epsilon;
  const char* ratio;
};

std::span<const ReferenceRow> reference_rows();

/// Does a truncated computation agree with a printed decimal to within one
/// unit in the printed value's last digit?
bool matches_printed(const ScaledDecimal& computed_truncated, const std::string& printed);

/// Decimal string -> ScaledDecimal with as many fractional digits as written.
ScaledDecimal parse_decimal(const std::string& printed);

struct ReferenceComparison {
  const ReferenceRow* row = nullptr;
  ScaledDecimal epsilon_at_printed_digits;
  bool epsilon_matches = false;
  std::optional<ScaledDecimal> ratio_at_printed_digits;
  bool ratio_matches = false;
  std::vector<std::string> flags;  // one entry per misprint found
};

struct TableRow {
  VerifyReport report;
  ScaledDecimal epsilon;
  std::optional<ScaledDecimal> ratio;  // undefined for n < 2
  std::optional<ReferenceComparison> reference;
};

TableRow table_row(std::uint64_t n, std::size_t digits, const PrecisionLimits& limits = {});

std::vector<TableRow> example_table(std::uint64_t from, std::uint64_t to, std::size_t digits,
                                    const PrecisionLimits& limits = {});

}  // namespace brocard
