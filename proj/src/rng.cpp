#include "mdd/rng.hpp"

#include "mdd/errors.hpp"

namespace mdd {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below needs a positive bound");
  // Rejection sampling on the largest multiple of bound.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

}  // namespace mdd
