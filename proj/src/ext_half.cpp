#include "permsing/ext_half.hpp"

#include <charconv>

#include "permsing/error.hpp"

namespace permsing {

ExtHalf operator-(ExtHalf a, ExtHalf b) {
  if (!b.finite_) throw InvalidInput("cannot subtract -inf");
  if (!a.finite_) return ExtHalf::neg_infinity();
  return ExtHalf::from_halves(a.halves_ - b.halves_);
}

std::string ExtHalf::to_string() const {
  if (!finite_) return "-inf";
  if (denominator() == 1) return std::to_string(numerator());
  return std::to_string(numerator()) + "/2";
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidInput("not a half-integer: '" + whole + "'");
  return v;
}

}  // namespace

ExtHalf parse_ext_half(const std::string& text) {
  if (text == "-inf") return ExtHalf::neg_infinity();
  auto slash = text.find('/');
  if (slash == std::string::npos) return ExtHalf::integer(parse_int(text, text));
  std::string_view view(text);
  auto num = parse_int(view.substr(0, slash), text);
  auto den = parse_int(view.substr(slash + 1), text);
  if (den == 1) return ExtHalf::integer(num);
  if (den != 2) throw InvalidInput("denominator must be 1 or 2: '" + text + "'");
  return ExtHalf::from_halves(num);
}

}  // namespace permsing
