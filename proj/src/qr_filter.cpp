#include "brocard/qr_filter.hpp"

#include "brocard/errors.hpp"
#include "brocard/exact_arith.hpp"

#include <string>

namespace brocard {

std::size_t first_rejector(std::span<const std::uint64_t> residues,
                           std::span<const std::uint64_t> primes, std::size_t* evaluated) {
  const std::size_t count = primes.size();
  std::size_t i = 0;
  for (; i < count; ++i) {
    const std::uint64_t p = primes[i];
    const std::uint64_t shifted = residues[i] + 1 == p ? 0 : residues[i] + 1;
    if (legendre(shifted, p) < 0) break;
  }
  if (evaluated) *evaluated = i < count ? i + 1 : count;
  return i;
}

FilterOutcome passes(const FactorialState& state, const PrimePool& pool) {
  if (state.residues.size() != pool.primes.size()) {
    throw DomainError("passes: state carries " + std::to_string(state.residues.size()) +
                      " residues for a pool of " + std::to_string(pool.primes.size()));
  }
  FilterOutcome out;
  const std::size_t idx = first_rejector(state.residues, pool.primes, &out.symbols_evaluated);
  if (idx < pool.primes.size()) {
    out.passed = false;
    out.rejecting_prime = pool.primes[idx];
  }
  return out;
}

}  // namespace brocard
