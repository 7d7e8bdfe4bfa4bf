#include "brocard/example_table.hpp"

#include "brocard/errors.hpp"

#include <array>

namespace brocard {

namespace {

constexpr std::array<ReferenceRow, 11> kReferenceRows{{
    {1, 1, 1, "0", "0"},
    {2, 1, 1, "0.414213562", "0.146446609"},
    {3, 2, 2, "0.449489743", "0.183503419"},
    {4, 4, 4, "0.898979486", "4"},
    {5, 10, 10, "0.95445115", "10"},
    {6, 26, 26, "0.83281573", "2.07430412"},
    {7, 70, 70, "0.9929573972", "70"},
    {8, 26, 200, "0.7984064", "1.581033892"},
    {9, 602, 602, "0.3952191", "0.1291361398"},
    {10, 1904, 1904, "0.940944", "7.496063447"},
    {11, 6317, 6371, "0.974359", "18.51278095"},
}};

std::string k_flag(const char* list, std::uint64_t listed, const Natural& computed) {
  return std::string("k misprint in ") + list + " list: printed " + std::to_string(listed) +
         ", computed " + computed.to_string();
}

}  // namespace

std::span<const ReferenceRow> reference_rows() { return kReferenceRows; }

ScaledDecimal parse_decimal(const std::string& printed) {
  const std::size_t dot = printed.find('.');
  if (dot == std::string::npos) return ScaledDecimal{Natural::parse(printed), 0};
  return ScaledDecimal{Natural::parse(printed.substr(0, dot) + printed.substr(dot + 1)),
                       printed.size() - dot - 1};
}

bool matches_printed(const ScaledDecimal& computed_truncated, const std::string& printed) {
  const ScaledDecimal reference = parse_decimal(printed);
  if (computed_truncated.frac_digits != reference.frac_digits) {
    throw DomainError("matches_printed: digit counts differ");
  }
  const Natural& a = computed_truncated.mantissa;
  const Natural& b = reference.mantissa;
  return (a >= b ? a - b : b - a) <= Natural(1);
}

TableRow table_row(std::uint64_t n, std::size_t digits, const PrecisionLimits& limits) {
  TableRow row;
  row.report = verify(n, limits.exact_ceiling);
  row.epsilon = sqrt_fraction(row.report.factorial, digits, limits.bit_budget);
  if (n >= 2) row.ratio = k_ratio_digits(n, digits, limits);

  for (const ReferenceRow& ref : kReferenceRows) {
    if (ref.n != n) continue;
    ReferenceComparison cmp;
    cmp.row = &ref;
    const std::size_t eps_digits = parse_decimal(ref.epsilon).frac_digits;
    cmp.epsilon_at_printed_digits = sqrt_fraction(row.report.factorial, eps_digits, limits.bit_budget);
    cmp.epsilon_matches = matches_printed(cmp.epsilon_at_printed_digits, ref.epsilon);
    if (n >= 2) {
      cmp.ratio_at_printed_digits = k_ratio_digits(n, parse_decimal(ref.ratio).frac_digits, limits);
      cmp.ratio_matches = matches_printed(*cmp.ratio_at_printed_digits, ref.ratio);
    }
    if (Natural(ref.k_criterion_list) != row.report.k) {
      cmp.flags.push_back(k_flag("criterion", ref.k_criterion_list, row.report.k));
    }
    if (Natural(ref.k_epsilon_list) != row.report.k) {
      cmp.flags.push_back(k_flag("epsilon", ref.k_epsilon_list, row.report.k));
    }
    if (!cmp.epsilon_matches) cmp.flags.push_back(std::string("epsilon mismatch: printed ") + ref.epsilon);
    if (n >= 2 && !cmp.ratio_matches) cmp.flags.push_back(std::string("ratio mismatch: printed ") + ref.ratio);
    row.reference = std::move(cmp);
  }
  return row;
}

std::vector<TableRow> example_table(std::uint64_t from, std::uint64_t to, std::size_t digits,
                                    const PrecisionLimits& limits) {
  if (from > to) throw DomainError("table: --from exceeds --to");
  std::vector<TableRow> rows;
  for (std::uint64_t n = from; n <= to; ++n) rows.push_back(table_row(n, digits, limits));
  return rows;
}

}  // namespace brocard
