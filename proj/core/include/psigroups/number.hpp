#pragma once

#include <cstdint>
#include <optional>

namespace psigroups {

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

// n = p^k with k >= 1, if any.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

// p^k; throws DomainError if the result does not fit in 64 bits.
std::uint64_t ipow(std::uint64_t p, unsigned k);

}  // namespace psigroups
