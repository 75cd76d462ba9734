#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permsing/ext_half.hpp"
#include "permsing/finite_field.hpp"

namespace permsing {

/// Principal part sum_{i >= 1} a_i t^{-i} over GF(q); coeffs[i-1] holds a_i.
struct PrincipalPart {
  std::vector<GaloisField::Element> coeffs;

  /// Largest i with a_i != 0, or 0 for the zero part.
  int pole_order() const;
  friend bool operator==(const PrincipalPart&, const PrincipalPart&) = default;
};

/// Principal parts of pole order <= max_pole modulo the image of the
/// Artin-Schreier map f -> f^p - f.
///
/// The image is kept as a reduced row echelon basis over F_p with columns
/// ordered from the highest pole downward, so reduction clears every
/// coefficient at a pole order divisible by p and yields the unique
/// representative supported on pole orders prime to p.
class ASQuotient {
 public:
  ASQuotient(const GaloisField& field, int max_pole);

  const GaloisField& field() const { return field_; }
  int max_pole() const { return max_pole_; }
  /// Dimension over F_p of the image of the Artin-Schreier map.
  int image_rank() const { return static_cast<int>(rows_.size()); }

  /// f^p - f for f of pole order <= max_pole / p.
  PrincipalPart artin_schreier(const PrincipalPart& f) const;
  PrincipalPart reduce(const PrincipalPart& part) const;
  bool equivalent(const PrincipalPart& a, const PrincipalPart& b) const;

  /// Pole orders that carry the reduced representatives.
  std::vector<int> basis_pole_orders() const;

 private:
  std::vector<int> to_vector(const PrincipalPart& part) const;
  PrincipalPart from_vector(const std::vector<int>& v) const;

  GaloisField field_;
  int max_pole_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Counts classes in K / wp(K) of exact pole order `pole` by enumerating every
/// principal part of pole order <= pole and collecting distinct reduced
/// representatives. Works for any pole >= 1 (divisible-by-p poles give 0).
std::uint64_t count_classes_brute_force(const GaloisField& field, int pole);

/// Same count from ranks: |V_pole / W_pole| - |V_{pole-1} / W_{pole-1}|.
std::uint64_t count_classes_by_rank(const GaloisField& field, int pole);

/// Number of Artin-Schreier classes with ramification jump `jump`, for
/// p in {2, 3}, q <= 81, jump <= 9 and p not dividing jump.
std::uint64_t as_class_count(int p, std::int64_t q, int jump);

/// d = (p - 1)(jump + 1).
int discriminant_of_jump(int p, int jump);

struct GrowthRow {
  std::int64_t q = 0;
  std::uint64_t count = 0;
  std::uint64_t expected = 0;
  /// e with count = (q-1) q^(e-1); -inf for a zero count; absent when the
  /// count is not of that form.
  std::optional<ExtHalf> measured_dimension;
};

struct GrowthCheck {
  ExtHalf predicted;
  int jump = 0;
  std::vector<GrowthRow> rows;
  bool ok = true;
};

/// Compares brute-force class counts against (q-1) q^(dim-1) for the
/// predicted dimension. Supported: (p, n) = (2, 2) using dim_connected, and
/// (3, 3) restricted to Galois cubics using dim_cyclic_cubic_galois.
GrowthCheck verify_dimension_growth(int p, int n, int d, const std::vector<std::int64_t>& qs);

/// Totally ramified degree-n extensions of F_q((t)) inside a fixed separable
/// closure, p not dividing n, by enumerating radicals (c t)^(1/n).
std::uint64_t tame_totally_ramified_count(std::int64_t q, int n);

}  // namespace permsing
