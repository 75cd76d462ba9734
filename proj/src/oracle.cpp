#include "permsing/oracle.hpp"

#include <string>

#include "permsing/error.hpp"
#include "permsing/strata.hpp"

namespace permsing {

namespace {

// Enumeration of all q^pole principal parts is used up to this many parts.
constexpr std::uint64_t kBruteForceLimit = 1u << 20;
constexpr std::int64_t kMaxOracleFieldOrder = 81;
constexpr int kMaxJump = 9;

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

int mod(int a, int p) { return ((a % p) + p) % p; }

std::uint64_t count_exact_pole(const GaloisField& field, int pole) {
  if (ipow(field.order(), pole) <= kBruteForceLimit) return count_classes_brute_force(field, pole);
  return count_classes_by_rank(field, pole);
}

}  // namespace

int PrincipalPart::pole_order() const {
  for (int i = static_cast<int>(coeffs.size()); i >= 1; --i)
    if (coeffs[static_cast<std::size_t>(i - 1)] != 0) return i;
  return 0;
}

ASQuotient::ASQuotient(const GaloisField& field, int max_pole) : field_(field), max_pole_(max_pole) {
  if (max_pole < 1) throw InvalidInput("max pole order must be positive");
  const int p = field_.characteristic();
  const int k = field_.degree();

  std::vector<std::vector<int>> gens;
  for (int i = 1; i * p <= max_pole; ++i) {
    for (int c = 0; c < k; ++c) {
      std::vector<int> unit(static_cast<std::size_t>(k), 0);
      unit[static_cast<std::size_t>(c)] = 1;
      PrincipalPart f{std::vector<GaloisField::Element>(static_cast<std::size_t>(max_pole), 0)};
      f.coeffs[static_cast<std::size_t>(i - 1)] = field_.from_coordinates(unit);
      gens.push_back(to_vector(artin_schreier(f)));
    }
  }

  // Reduced row echelon form over F_p.
  const std::size_t cols = static_cast<std::size_t>(k) * static_cast<std::size_t>(max_pole);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols && next_row < gens.size(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < gens.size() && gens[pivot][col] == 0) ++pivot;
    if (pivot == gens.size()) continue;
    std::swap(gens[pivot], gens[next_row]);
    auto& row = gens[next_row];
    int inv = 1;
    while (mod(row[col] * inv, p) != 1) ++inv;
    for (auto& x : row) x = mod(x * inv, p);
    for (std::size_t r = 0; r < gens.size(); ++r) {
      if (r == next_row || gens[r][col] == 0) continue;
      const int factor = gens[r][col];
      for (std::size_t j = 0; j < cols; ++j) gens[r][j] = mod(gens[r][j] - factor * row[j], p);
    }
    pivots_.push_back(col);
    ++next_row;
  }
  gens.resize(next_row);
  rows_ = std::move(gens);
}

std::vector<int> ASQuotient::to_vector(const PrincipalPart& part) const {
  const int k = field_.degree();
  std::vector<int> v(static_cast<std::size_t>(k * max_pole_), 0);
  for (int i = 1; i <= max_pole_; ++i) {
    if (static_cast<std::size_t>(i) > part.coeffs.size()) break;
    auto coords = field_.coordinates(part.coeffs[static_cast<std::size_t>(i - 1)]);
    for (int c = 0; c < k; ++c) v[static_cast<std::size_t>((max_pole_ - i) * k + c)] = coords[static_cast<std::size_t>(c)];
  }
  return v;
}

PrincipalPart ASQuotient::from_vector(const std::vector<int>& v) const {
  const int k = field_.degree();
  PrincipalPart out{std::vector<GaloisField::Element>(static_cast<std::size_t>(max_pole_), 0)};
  std::vector<int> coords(static_cast<std::size_t>(k));
  for (int i = 1; i <= max_pole_; ++i) {
    for (int c = 0; c < k; ++c) coords[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>((max_pole_ - i) * k + c)];
    out.coeffs[static_cast<std::size_t>(i - 1)] = field_.from_coordinates(coords);
  }
  return out;
}

PrincipalPart ASQuotient::artin_schreier(const PrincipalPart& f) const {
  const int p = field_.characteristic();
  if (f.pole_order() * p > max_pole_)
    throw InvalidInput("Artin-Schreier image would exceed the maximal pole order");
  PrincipalPart out{std::vector<GaloisField::Element>(static_cast<std::size_t>(max_pole_), 0)};
  for (int i = 1; i <= f.pole_order(); ++i) {
    const auto a = f.coeffs[static_cast<std::size_t>(i - 1)];
    auto& high = out.coeffs[static_cast<std::size_t>(i * p - 1)];
    high = field_.add(high, field_.frobenius(a));
    auto& low = out.coeffs[static_cast<std::size_t>(i - 1)];
    low = field_.sub(low, a);
  }
  return out;
}

PrincipalPart ASQuotient::reduce(const PrincipalPart& part) const {
  if (part.pole_order() > max_pole_) throw InvalidInput("principal part exceeds the maximal pole order");
  auto v = to_vector(part);
  const int p = field_.characteristic();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int s = v[pivots_[r]];
    if (s == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = mod(v[j] - s * rows_[r][j], p);
  }
  return from_vector(v);
}

bool ASQuotient::equivalent(const PrincipalPart& a, const PrincipalPart& b) const { return reduce(a) == reduce(b); }

std::vector<int> ASQuotient::basis_pole_orders() const {
  std::vector<int> out;
  for (int i = 1; i <= max_pole_; ++i)
    if (i % field_.characteristic() != 0) out.push_back(i);
  return out;
}

std::uint64_t count_classes_brute_force(const GaloisField& field, int pole) {
  if (pole < 1) throw InvalidInput("pole order must be positive");
  const std::uint64_t q = field.order();
  const std::uint64_t total = ipow(q, pole);
  if (total > kBruteForceLimit) throw InvalidInput("enumeration beyond the brute-force budget");

  ASQuotient quotient(field, pole);
  std::vector<bool> seen(total, false);
  std::uint64_t count = 0;
  PrincipalPart part{std::vector<GaloisField::Element>(static_cast<std::size_t>(pole), 0)};
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int i = 0; i < pole; ++i) {
      part.coeffs[static_cast<std::size_t>(i)] = static_cast<GaloisField::Element>(rest % q);
      rest /= q;
    }
    auto rep = quotient.reduce(part);
    if (rep.pole_order() != pole) continue;
    std::uint64_t key = 0;
    for (int i = pole - 1; i >= 0; --i) key = key * q + rep.coeffs[static_cast<std::size_t>(i)];
    if (!seen[key]) {
      seen[key] = true;
      ++count;
    }
  }
  return count;
}

std::uint64_t count_classes_by_rank(const GaloisField& field, int pole) {
  if (pole < 1) throw InvalidInput("pole order must be positive");
  const auto p = static_cast<std::uint64_t>(field.characteristic());
  const int k = field.degree();
  auto cosets = [&](int m) -> std::uint64_t {
    if (m == 0) return 1;
    ASQuotient quotient(field, m);
    return ipow(p, k * m - quotient.image_rank());
  };
  return cosets(pole) - cosets(pole - 1);
}

std::uint64_t as_class_count(int p, std::int64_t q, int jump) {
  if (p != 2 && p != 3) throw InvalidInput("Artin-Schreier oracle supports p in {2,3}, got " + std::to_string(p));
  auto [base, k] = prime_power_decomposition(q);
  if (base != p) throw InvalidInput("q = " + std::to_string(q) + " is not a power of p = " + std::to_string(p));
  if (q > kMaxOracleFieldOrder) throw InvalidInput("q must be at most 81");
  if (jump < 1 || jump > kMaxJump) throw InvalidInput("jump must be in 1..9");
  if (jump % p == 0) throw InvalidInput("jump must be prime to p");
  return count_exact_pole(GaloisField(p, k), jump);
}

int discriminant_of_jump(int p, int jump) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  if (jump < 1) throw InvalidInput("jump must be positive");
  if (jump % p == 0) throw InvalidInput("jump must be prime to p");
  return (p - 1) * (jump + 1);
}

GrowthCheck verify_dimension_growth(int p, int n, int d, const std::vector<std::int64_t>& qs) {
  if (!((p == 2 && n == 2) || (p == 3 && n == 3)))
    throw InvalidInput("growth check supports (p,n) = (2,2) or (3,3) Galois cubics");
  if (d < 1) throw InvalidInput("discriminant exponent must be positive");
  if (qs.empty()) throw InvalidInput("need at least one field size");

  GrowthCheck check;
  if (p == 2) {
    check.predicted = dim_connected(2, d, Characteristic::of(2));
    check.jump = d - 1;
  } else {
    check.predicted = dim_cyclic_cubic_galois(d);
    check.jump = d % 2 == 0 ? d / 2 - 1 : 0;
  }
  if (check.jump > kMaxJump) throw InvalidInput("jump must be at most 9");

  for (auto q : qs) {
    auto [base, k] = prime_power_decomposition(q);
    if (base != p) throw InvalidInput("q = " + std::to_string(q) + " is not a power of p");
    if (q > kMaxOracleFieldOrder) throw InvalidInput("q must be at most 81");
    GaloisField field(p, k);

    GrowthRow row;
    row.q = q;
    row.count = check.jump >= 1 ? count_exact_pole(field, check.jump) : 0;
    const auto uq = static_cast<std::uint64_t>(q);
    if (check.predicted.is_finite()) {
      const auto dim = static_cast<int>(check.predicted.numerator());
      row.expected = (uq - 1) * ipow(uq, dim - 1);
    }
    if (row.count == 0) {
      row.measured_dimension = ExtHalf::neg_infinity();
    } else if (row.count % (uq - 1) == 0) {
      std::uint64_t rest = row.count / (uq - 1);
      int e = 0;
      while (rest % uq == 0 && rest > 1) {
        rest /= uq;
        ++e;
      }
      if (rest == 1) row.measured_dimension = ExtHalf::integer(e + 1);
    }
    check.ok = check.ok && row.count == row.expected;
    check.rows.push_back(row);
  }
  return check;
}

std::uint64_t tame_totally_ramified_count(std::int64_t q, int n) {
  auto [p, k] = prime_power_decomposition(q);
  if (n < 1) throw InvalidInput("degree must be positive");
  if (n % p == 0) throw InvalidInput("tame count needs p not dividing n");

  // Every root c t^(1/n) with c^n in F_q^x lives over F_{q^m}, where
  // q^m = 1 mod n(q-1).
  const std::uint64_t modulus = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(q - 1);
  int m = 1;
  std::uint64_t power = static_cast<std::uint64_t>(q) % modulus;
  while (modulus > 1 && power != 1) {
    power = power * static_cast<std::uint64_t>(q) % modulus;
    ++m;
  }
  GaloisField big(p, k * m);
  const auto uq = static_cast<std::uint64_t>(q);

  std::vector<GaloisField::Element> base_units;
  for (GaloisField::Element x = 1; x < big.order(); ++x)
    if (big.pow(x, uq) == x) base_units.push_back(x);

  // Two roots generate the same subfield exactly when they differ by a
  // constant in F_q^x, so count orbits of radicals under that scaling.
  std::vector<bool> seen(big.order(), false);
  std::uint64_t fields = 0;
  for (GaloisField::Element c = 1; c < big.order(); ++c) {
    if (seen[c]) continue;
    const auto cn = big.pow(c, static_cast<std::uint64_t>(n));
    if (big.pow(cn, uq) != cn) continue;
    ++fields;
    for (auto a : base_units) seen[big.mul(a, c)] = true;
  }
  return fields;
}

}  // namespace permsing
