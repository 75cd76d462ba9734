#pragma once

#include <cstdint>
#include <vector>

namespace permsing {

/// Returns (p, k) with q = p^k, or throws InvalidInput if q is not a prime power.
std::pair<int, int> prime_power_decomposition(std::int64_t q);

/// GF(p^k) for small p^k, built from a primitive polynomial found by search.
///
/// Elements are integers in [0, q); the base-p digits of an element are its
/// coordinates in the basis 1, x, ..., x^(k-1). Zero is 0 and one is 1.
class GaloisField {
 public:
  using Element = std::uint32_t;

  GaloisField(int p, int k);
  static GaloisField of_order(std::int64_t q);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  Element order() const { return q_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  Element frobenius(Element a) const { return pow(a, static_cast<std::uint64_t>(p_)); }
  /// Multiplies a by a prime-field scalar.
  Element scale(int s, Element a) const;

  Element primitive() const { return exp_[1 % exp_.size()]; }

  /// F_p coordinates, low degree first.
  std::vector<int> coordinates(Element a) const;
  Element from_coordinates(const std::vector<int>& coords) const;

 private:
  int p_;
  int k_;
  Element q_;
  std::vector<Element> exp_;  // exp_[i] = g^i, i < q-1
  std::vector<std::uint32_t> log_;
};

}  // namespace permsing
