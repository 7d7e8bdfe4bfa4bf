#pragma once

#include "brocard/factorial_engine.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace brocard {

/// If n!+1 = m^2 then (n!+1 | p) is 0 or +1 for every odd prime p, so a
/// single -1 certifies that n is not a solution. Symbol 0 never rejects.
struct FilterOutcome {
  bool passed = true;
  std::optional<std::uint64_t> rejecting_prime;
  std::size_t symbols_evaluated = 0;
};

/// Evaluates (n!+1 | p) in pool order and stops at the first -1.
FilterOutcome passes(const FactorialState& state, const PrimePool& pool);

/// Index of the first prime whose symbol for residue+1 is -1, or
/// primes.size() when none rejects. `evaluated` receives the number of
/// symbols computed.
std::size_t first_rejector(std::span<const std::uint64_t> residues,
                           std::span<const std::uint64_t> primes,
                           std::size_t* evaluated = nullptr);

}  // namespace brocard
