#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace permsing {

/// Exact half-integer with an adjoined -infinity.
///
/// Stored as twice its value, so 3/2 is `halves == 3`. All dimension bounds
/// live in this domain; comparisons against -1 and 0 decide verdicts, hence no
/// floating point.
class ExtHalf {
 public:
  constexpr ExtHalf() = default;

  static constexpr ExtHalf integer(std::int64_t v) { return ExtHalf(2 * v, true); }
  static constexpr ExtHalf from_halves(std::int64_t h) { return ExtHalf(h, true); }
  static constexpr ExtHalf neg_infinity() { return ExtHalf(0, false); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_neg_infinity() const { return !finite_; }

  /// Twice the value. Only meaningful when finite.
  constexpr std::int64_t halves() const { return halves_; }
  /// Reduced numerator and denominator (denominator is 1 or 2).
  constexpr std::int64_t numerator() const { return halves_ % 2 == 0 ? halves_ / 2 : halves_; }
  constexpr std::int64_t denominator() const { return halves_ % 2 == 0 ? 1 : 2; }
  constexpr bool is_integer() const { return finite_ && halves_ % 2 == 0; }

  friend constexpr ExtHalf operator+(ExtHalf a, ExtHalf b) {
    if (!a.finite_ || !b.finite_) return neg_infinity();
    return from_halves(a.halves_ + b.halves_);
  }
  ExtHalf& operator+=(ExtHalf o) { return *this = *this + o; }

  /// Subtracting a finite amount; -inf minus anything finite stays -inf.
  /// Subtracting -inf would produce +inf, which is outside the domain.
  friend ExtHalf operator-(ExtHalf a, ExtHalf b);

  friend constexpr bool operator==(ExtHalf a, ExtHalf b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.halves_ == b.halves_;
  }
  friend constexpr std::strong_ordering operator<=>(ExtHalf a, ExtHalf b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    return a.halves_ <=> b.halves_;
  }

  /// "-inf", "3", "-1/2".
  std::string to_string() const;

 private:
  constexpr ExtHalf(std::int64_t h, bool finite) : halves_(finite ? h : 0), finite_(finite) {}

  std::int64_t halves_ = 0;
  bool finite_ = true;
};

constexpr ExtHalf max(ExtHalf a, ExtHalf b) { return a < b ? b : a; }

/// Parses the text form produced by `to_string`.
ExtHalf parse_ext_half(const std::string& text);

}  // namespace permsing
