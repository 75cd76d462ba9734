#include "permsing/characteristic.hpp"

#include <string>

#include "permsing/error.hpp"

namespace permsing {

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t f = 2; f * f <= v; ++f)
    if (v % f == 0) return false;
  return true;
}

Characteristic Characteristic::of(int p) {
  if (p != 0 && !is_prime(p))
    throw InvalidInput("characteristic must be 0 or a prime, got " + std::to_string(p));
  return Characteristic(p);
}

}  // namespace permsing
