#include "permsing/finite_field.hpp"

#include <string>

#include "permsing/characteristic.hpp"
#include "permsing/error.hpp"

namespace permsing {

namespace {

constexpr std::uint32_t kMaxFieldOrder = 1u << 22;

}  // namespace

std::pair<int, int> prime_power_decomposition(std::int64_t q) {
  if (q < 2) throw InvalidInput("field order must be a prime power, got " + std::to_string(q));
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw InvalidInput("field order must be a prime power, got " + std::to_string(q));
  return {static_cast<int>(p), k};
}

GaloisField GaloisField::of_order(std::int64_t q) {
  auto [p, k] = prime_power_decomposition(q);
  return GaloisField(p, k);
}

GaloisField::GaloisField(int p, int k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p) || k < 1) throw InvalidInput("GF(p^k) needs p prime and k >= 1");
  for (int i = 0; i < k; ++i) {
    if (static_cast<std::uint64_t>(q_) * static_cast<std::uint64_t>(p) > kMaxFieldOrder)
      throw InvalidInput("field order beyond supported size");
    q_ *= static_cast<Element>(p);
  }

  // Monic f(x) = x^k + c_{k-1} x^{k-1} + ... + c_0 is primitive iff x has
  // multiplicative order q - 1 modulo f.
  std::vector<int> tail(static_cast<std::size_t>(k), 0);
  auto times_x = [&](std::vector<int>& a) {
    const int top = a[static_cast<std::size_t>(k - 1)];
    for (int i = k - 1; i > 0; --i) a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i - 1)];
    a[0] = 0;
    for (int i = 0; i < k; ++i)
      a[static_cast<std::size_t>(i)] = ((a[static_cast<std::size_t>(i)] - top * tail[static_cast<std::size_t>(i)]) % p + p) % p;
  };

  for (Element code = 0; code < q_; ++code) {
    Element c = code;
    for (int i = 0; i < k; ++i) {
      tail[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<Element>(p));
      c /= static_cast<Element>(p);
    }
    if (tail[0] == 0) continue;  // x divides f

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::vector<bool> hit(q_, false);
    std::vector<int> power(static_cast<std::size_t>(k), 0);
    power[0] = 1;
    bool primitive = true;
    for (Element i = 0; i + 1 < q_; ++i) {
      Element encoded = from_coordinates(power);
      if (hit[encoded] || encoded == 0) {
        primitive = false;
        break;
      }
      hit[encoded] = true;
      exp_[i] = encoded;
      log_[encoded] = i;
      if (k == 1) {
        // For k = 1 "x" is the root -c_0 of f.
        power[0] = (power[0] * ((p - tail[0]) % p)) % p;
      } else {
        times_x(power);
      }
    }
    if (primitive) return;
  }
  throw InvalidInput("no primitive polynomial found");
}

std::vector<int> GaloisField::coordinates(Element a) const {
  std::vector<int> out(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(a % static_cast<Element>(p_));
    a /= static_cast<Element>(p_);
  }
  return out;
}

GaloisField::Element GaloisField::from_coordinates(const std::vector<int>& coords) const {
  Element out = 0;
  for (int i = k_ - 1; i >= 0; --i) out = out * static_cast<Element>(p_) + static_cast<Element>(coords[static_cast<std::size_t>(i)]);
  return out;
}

GaloisField::Element GaloisField::add(Element a, Element b) const {
  Element out = 0;
  Element place = 1;
  const auto p = static_cast<Element>(p_);
  for (int i = 0; i < k_; ++i) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

GaloisField::Element GaloisField::neg(Element a) const {
  Element out = 0;
  Element place = 1;
  const auto p = static_cast<Element>(p_);
  for (int i = 0; i < k_; ++i) {
    out += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return out;
}

GaloisField::Element GaloisField::sub(Element a, Element b) const { return add(a, neg(b)); }

GaloisField::Element GaloisField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

GaloisField::Element GaloisField::inv(Element a) const {
  if (a == 0) throw InvalidInput("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Element GaloisField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

GaloisField::Element GaloisField::scale(int s, Element a) const {
  s %= p_;
  if (s < 0) s += p_;
  Element out = 0;
  for (int i = 0; i < s; ++i) out = add(out, a);
  return out;
}

}  // namespace permsing
