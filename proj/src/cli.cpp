#include "brocard/cli.hpp"

#include "brocard/conditions.hpp"
#include "brocard/epsilon_lab.hpp"
#include "brocard/errors.hpp"
#include "brocard/example_table.hpp"
#include "brocard/poly_system.hpp"
#include "brocard/report.hpp"
#include "brocard/search_engine.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <memory>
#include <optional>
#include <sstream>

namespace brocard::cli {

namespace {

constexpr std::size_t kPrintDigitLimit = 200;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* synopsis(const std::string& command) {
  if (command == "search") {
    return "brocard search --max-n N [--primes P] [--checkpoint PATH] [--resume] [--threads T] "
           "[--report PATH]";
  }
  if (command == "verify") return "brocard verify <n> [--factor-structure]";
  if (command == "epsilon") return "brocard epsilon <n> [--digits D] [--nine-run] [--cap C]";
  if (command == "table") return "brocard table --from A --to B [--digits D]";
  if (command == "polysys") return "brocard polysys --ymin A --ymax B [--factorials]";
  return "brocard {search|verify|epsilon|table|polysys} ...";
}

std::uint64_t bit_budget_from_env() {
  const char* raw = std::getenv("BROCARD_BIT_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBitBudget;
  const std::optional<std::uint64_t> value = [&]() -> std::optional<std::uint64_t> {
    try {
      return Natural::parse(raw).to_u64();
    } catch (const DomainError&) {
      return std::nullopt;
    }
  }();
  if (!value || *value == 0) {
    throw UsageError(std::string("BROCARD_BIT_BUDGET must be a positive decimal bit count, got '") +
                     raw + "'");
  }
  return *value;
}

std::string show(const Natural& x) {
  const std::size_t len = x.decimal_length();
  if (len <= kPrintDigitLimit) return x.to_string();
  return "<" + std::to_string(len) + " digits>";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_verify(const VerifyReport& r, std::ostream& out) {
  out << "n=" << r.n << '\n'
      << "factorial=" << show(r.factorial) << '\n'
      << "k=" << show(r.k) << '\n'
      << "m_candidate=" << show(r.m_candidate) << '\n'
      << "k_even=" << yes_no(r.k_even) << '\n'
      << "k_product=" << show(r.k_product) << '\n'
      << "relation=" << (r.product_matches ? "n! = k(k+2)" : "n! < k(k+2)") << '\n'
      << "product_matches=" << yes_no(r.product_matches) << '\n'
      << "defect=" << show(r.defect) << '\n'
      << "two_k=" << show(r.k * Natural(2)) << '\n'
      << "is_solution=" << yes_no(r.is_solution) << '\n';
  if (r.m) out << "m=" << show(*r.m) << '\n';
}

void print_profile(const char* label, const EpsilonProfile& p, std::ostream& out) {
  out << label << "_nine_run=" << *p.nine_run
      << (p.nine_run_is_lower_bound ? " (lower bound, cap reached)" : " (exact)") << '\n'
      << label << "_digits_examined=" << p.epsilon.frac_digits << '\n'
      << label << "_precision_steps=" << p.precision_steps << '\n';
}

int run_search(std::uint64_t max_n, std::size_t primes, const std::string& checkpoint,
               std::uint64_t checkpoint_interval, bool resume, std::size_t threads,
               const std::string& report, std::optional<std::uint64_t> stop_at,
               std::uint64_t exact_ceiling, std::ostream& out) {
  SearchConfig config;
  config.max_n = max_n;
  config.pool_size = primes;
  if (!checkpoint.empty()) config.checkpoint_path = checkpoint;
  config.checkpoint_interval = checkpoint_interval;
  config.resume = resume;
  config.worker_count = threads;
  config.stop_at = stop_at;
  config.exact_verify_ceiling = exact_ceiling;
  if (resume && checkpoint.empty()) throw UsageError("--resume requires --checkpoint");

  std::unique_ptr<ReportWriter> writer = report.empty()
                                             ? std::make_unique<ReportWriter>(out)
                                             : std::make_unique<ReportWriter>(report);
  const SearchSummary summary =
      run(config, [&](const SurvivorRecord& record) { writer->write(line_for(record)); });
  writer->write(summary_line(summary));

  if (!report.empty()) {
    out << "scanned n=" << summary.from_n << ".." << summary.to_n << " (" << summary.scanned()
        << " values" << (summary.completed ? "" : ", stopped early") << ")\n";
    for (const auto& [n, m] : summary.solutions()) {
      out << "solution (m,n)=(" << m.to_string() << "," << n << ")\n";
    }
    out << "survivors=" << summary.survivors_exact_checked << " unresolved=" << summary.unresolved
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and residue-filtered search for n!+1 = m^2", "brocard"};
  app.require_subcommand(1);

  // search
  std::uint64_t max_n = 0;
  std::size_t pool_size = kDefaultPoolSize;
  std::string checkpoint;
  std::uint64_t checkpoint_interval = 100'000;
  bool resume = false;
  std::size_t threads = 1;
  std::string report;
  std::uint64_t stop_at = 0;
  std::uint64_t exact_ceiling = kDefaultExactCeiling;
  auto* search = app.add_subcommand("search", "scan n = 2..max-n for solutions");
  search->add_option("--max-n", max_n, "scan ceiling (< 2^32)")->required();
  search->add_option("--primes", pool_size, "filter primes in the pool")->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", checkpoint, "checkpoint file to write (and resume from)");
  search->add_option("--checkpoint-interval", checkpoint_interval, "n per checkpoint")
      ->check(CLI::PositiveNumber);
  search->add_flag("--resume", resume, "continue from --checkpoint");
  search->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--report", report, "JSON-lines report path (default stdout)");
  auto* stop_opt = search->add_option("--stop-at", stop_at, "stop and checkpoint at this n");
  search->add_option("--exact-ceiling", exact_ceiling, "largest n settled by exact arithmetic");

  // verify
  std::uint64_t verify_n = 0;
  bool with_structure = false;
  auto* verify_cmd = app.add_subcommand("verify", "evaluate every solution criterion for n");
  verify_cmd->add_option("n", verify_n, "index to verify")->required();
  verify_cmd->add_flag("--factor-structure", with_structure, "print the (2a)(2^(e-1)b) split");

  // epsilon
  std::uint64_t eps_n = 0;
  std::size_t eps_digits = 30;
  bool want_nines = false;
  std::size_t cap = kDefaultNineRunCap;
  auto* eps_cmd = app.add_subcommand("epsilon", "fractional digits of sqrt(n!)");
  eps_cmd->add_option("n", eps_n, "index")->required();
  eps_cmd->add_option("--digits", eps_digits, "fractional digits to print");
  eps_cmd->add_flag("--nine-run", want_nines, "count leading nines of eps and of f(k)");
  eps_cmd->add_option("--cap", cap, "nine-run digit cap")->check(CLI::PositiveNumber);

  // table
  std::uint64_t from = 1;
  std::uint64_t to = 11;
  std::size_t table_digits = 10;
  auto* table_cmd = app.add_subcommand("table", "worked-example table with misprint flags");
  table_cmd->add_option("--from", from, "first n")->required();
  table_cmd->add_option("--to", to, "last n")->required();
  table_cmd->add_option("--digits", table_digits, "fractional digits for eps and the k ratio");

  // polysys
  std::int64_t ymin = 0;
  std::int64_t ymax = 0;
  bool factorials_only = false;
  auto* poly_cmd = app.add_subcommand("polysys", "integer solutions of the (x, y) system");
  poly_cmd->add_option("--ymin", ymin, "window start")->required();
  poly_cmd->add_option("--ymax", ymax, "window end")->required();
  poly_cmd->add_flag("--factorials", factorials_only, "keep only x = n! points");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const std::string& a : argv) raw.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string command;
    for (const auto* sub : app.get_subcommands()) command = sub->get_name();
    err << "error: " << e.what() << '\n' << "usage: " << synopsis(command) << '\n';
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    PrecisionLimits limits;
    limits.bit_budget = bit_budget_from_env();

    if (command == "search") {
      std::optional<std::uint64_t> stop;
      if (stop_opt->count() > 0) stop = stop_at;
      return run_search(max_n, pool_size, checkpoint, checkpoint_interval, resume, threads, report,
                        stop, exact_ceiling, out);
    }

    if (command == "verify") {
      const VerifyReport r = verify(verify_n, limits.exact_ceiling);
      print_verify(r, out);
      if (with_structure) {
        if (!r.is_solution) {
          out << "factor_structure=none (n is not a solution)\n";
        } else {
          const FactorStructure fs = factor_structure(verify_n, limits.exact_ceiling);
          out << "two_adic_valuation=" << fs.e << '\n'
              << "a=" << show(fs.a) << '\n'
              << "b=" << show(fs.b) << '\n'
              << "half_even=" << show(fs.half_even) << '\n'
              << "half_pow=" << show(fs.half_pow) << '\n';
        }
      }
      return kExitOk;
    }

    if (command == "epsilon") {
      out << "n=" << eps_n << '\n'
          << "epsilon=" << epsilon_digits(eps_n, eps_digits, limits).to_string() << '\n';
      if (want_nines) {
        print_profile("epsilon", nine_run(eps_n, cap, limits), out);
        if (eps_n >= 1) {
          print_profile("required_epsilon", nine_run_of_required_epsilon(eps_n, cap, limits), out);
        }
      }
      return kExitOk;
    }

    if (command == "table") {
      out << "n\tk\tk_even\tn!_vs_k(k+2)\tdefect\tepsilon\tratio\tprinted_epsilon\tepsilon_check\t"
             "notes\n";
      for (const TableRow& row : example_table(from, to, table_digits, limits)) {
        const VerifyReport& r = row.report;
        out << r.n << '\t' << show(r.k) << '\t' << yes_no(r.k_even) << '\t'
            << (r.product_matches ? "=" : "<") << '\t' << show(r.defect) << '\t'
            << row.epsilon.to_string() << '\t' << (row.ratio ? row.ratio->to_string() : "n/a");
        if (row.reference) {
          const ReferenceComparison& ref = *row.reference;
          out << '\t' << ref.row->epsilon << '\t' << (ref.epsilon_matches ? "ok" : "MISMATCH")
              << '\t';
          for (std::size_t i = 0; i < ref.flags.size(); ++i) {
            out << (i ? "; " : "") << "FLAG " << ref.flags[i];
          }
        } else {
          out << "\t-\t-\t";
        }
        out << '\n';
      }
      return kExitOk;
    }

    if (command == "polysys") {
      const auto points = solve_window(Integer(static_cast<long>(ymin)),
                                       Integer(static_cast<long>(ymax)), factorials_only);
      for (const LatticePoint& p : points) {
        out << '(' << p.x.get_str() << ',' << p.y.get_str() << ")\n";
      }
      out << "count=" << points.size() << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << "usage: " << synopsis(command) << '\n';
    return kExitUsage;
  } catch (const CheckpointError& e) {
    err << "checkpoint error: " << e.what() << '\n';
    return kExitCheckpoint;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n' << "usage: " << synopsis(command) << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace brocard::cli
