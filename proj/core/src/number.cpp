#include "psigroups/number.hpp"

#include <limits>

#include "psigroups/error.hpp"

namespace psigroups {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, k};
}

std::uint64_t ipow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (p != 0 && r > std::numeric_limits<std::uint64_t>::max() / p) {
      throw DomainError("power overflow");
    }
    r *= p;
  }
  return r;
}

}  // namespace psigroups
