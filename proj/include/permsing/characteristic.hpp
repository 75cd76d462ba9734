#pragma once

#include <cstdint>

namespace permsing {

bool is_prime(std::int64_t v);

/// Characteristic of the base field: 0 or a prime.
class Characteristic {
 public:
  /// Throws InvalidInput unless `p` is 0 or prime.
  static Characteristic of(int p);

  constexpr int value() const { return p_; }
  constexpr bool is_zero() const { return p_ == 0; }

  /// p | m, with the convention that characteristic 0 divides nothing.
  constexpr bool divides(std::int64_t m) const { return p_ != 0 && m % p_ == 0; }

  friend constexpr bool operator==(Characteristic, Characteristic) = default;

 private:
  constexpr explicit Characteristic(int p) : p_(p) {}
  int p_;
};

}  // namespace permsing
