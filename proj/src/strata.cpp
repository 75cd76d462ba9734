#include "permsing/strata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "permsing/error.hpp"

namespace permsing {

namespace {

void require_degree(int n) {
  if (n < 1) throw InvalidInput("degree must be positive, got " + std::to_string(n));
}

void require_discriminant(int d) {
  if (d < 0) throw InvalidInput("discriminant exponent must be non-negative, got " + std::to_string(d));
}

void partitions_rec(int remaining, int max_part, Partition& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  require_degree(n);
  std::vector<Partition> out;
  Partition current;
  partitions_rec(n, n, current, out);
  return out;
}

bool is_trivial_partition(const Partition& nu) {
  return std::all_of(nu.begin(), nu.end(), [](int part) { return part == 1; });
}

std::string partition_to_string(const Partition& nu) {
  std::string out = "(";
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(nu[i]);
  }
  return out + ")";
}

int StratumShape::degree() const { return std::accumulate(nu.begin(), nu.end(), 0); }
int StratumShape::discriminant() const { return std::accumulate(delta.begin(), delta.end(), 0); }
std::string StratumShape::to_string() const {
  return "(" + partition_to_string(nu) + "," + partition_to_string(delta) + ")";
}

ExtHalf dim_connected(int n, int d, Characteristic p) {
  require_degree(n);
  require_discriminant(d);
  if (!p.divides(n)) return d == n - 1 ? ExtHalf::integer(0) : ExtHalf::neg_infinity();
  const int excess = d - n + 1;
  if (excess < 0 || p.divides(excess)) return ExtHalf::neg_infinity();
  return ExtHalf::integer((excess + p.value() - 1) / p.value());
}

ExtHalf dim_cyclic_cubic_galois(int d) {
  if (d <= 0) throw InvalidInput("discriminant exponent must be positive, got " + std::to_string(d));
  if (d % 2 != 0) return ExtHalf::neg_infinity();
  const int jump = d / 2 - 1;
  if (jump <= 0 || jump % 3 == 0) return ExtHalf::neg_infinity();
  return ExtHalf::integer(jump - jump / 3);
}

std::vector<StratumShape> enumerate_strata(int n, int d) {
  require_degree(n);
  require_discriminant(d);
  std::vector<StratumShape> out;
  for (const auto& nu : partitions_of(n)) {
    const int wild = static_cast<int>(std::count_if(nu.begin(), nu.end(), [](int part) { return part > 1; }));
    if (wild > d || (wild == 0 && d != 0)) continue;
    std::vector<int> delta(nu.size(), 0);
    // Pieces of degree > 1 come first (nu is decreasing); each gets delta >= 1.
    std::function<void(int, int)> place = [&](int i, int remaining) {
      if (i == wild) {
        if (remaining == 0) out.push_back({nu, delta});
        return;
      }
      int hi = remaining - (wild - i - 1);
      if (i > 0 && nu[i] == nu[i - 1]) hi = std::min(hi, delta[i - 1]);
      const int lo = i == wild - 1 ? remaining : 1;
      for (int v = hi; v >= lo; --v) {
        delta[i] = v;
        place(i + 1, remaining - v);
      }
      delta[i] = 0;
    };
    place(0, d);
  }
  return out;
}

ExtHalf stratum_dim_sum(const StratumShape& shape, Characteristic p) {
  ExtHalf total = ExtHalf::integer(0);
  for (std::size_t i = 0; i < shape.nu.size(); ++i) total += dim_connected(shape.nu[i], shape.delta[i], p);
  return total;
}

bool DeltaSet::contains(int delta) const {
  switch (kind) {
    case Kind::Empty:
      return false;
    case Kind::Single:
      return delta == start;
    case Kind::Progression:
      return delta >= start && (delta - start) % step == 0;
  }
  return false;
}

std::string DeltaSet::to_string() const {
  switch (kind) {
    case Kind::Empty:
      return "{}";
    case Kind::Single:
      return "{" + std::to_string(start) + "}";
    case Kind::Progression:
      return "{" + std::to_string(start) + "+" + std::to_string(step) + "k}";
  }
  return "{}";
}

ComponentSup sup_component(int part, Characteristic p) {
  require_degree(part);
  if (part == 1) return {ExtHalf::integer(0), {DeltaSet::Kind::Single, 0, 0}, true};
  if (!p.divides(part)) return {ExtHalf::from_halves(-(part - 1)), {DeltaSet::Kind::Single, part - 1, 0}, true};
  // Wild part: the maximum 1 - part/2 sits at delta = part. In characteristic 2
  // every admissible delta (even, >= part) gives the same value.
  if (p.value() == 2) return {ExtHalf::from_halves(2 - part), {DeltaSet::Kind::Progression, part, 2}, false};
  return {ExtHalf::from_halves(2 - part), {DeltaSet::Kind::Single, part, 0}, true};
}

std::string to_string(StratumRule rule) {
  switch (rule) {
    case StratumRule::Generic:
      return "generic";
    case StratumRule::ForcedTransposition:
      return "forced-transposition";
    case StratumRule::QuadraticDependence:
      return "quadratic-dependence";
    case StratumRule::GaloisCubic:
      return "galois-cubic";
  }
  return "generic";
}

StratumBound refined_stratum_bound(const Partition& nu_in, Characteristic p, bool transposition_free) {
  if (nu_in.empty()) throw InvalidInput("empty partition");
  for (int part : nu_in)
    if (part < 1) throw InvalidInput("partition parts must be positive");
  if (is_trivial_partition(nu_in)) throw InvalidInput("trivial partition " + partition_to_string(nu_in) + " has no bound");
  Partition nu(nu_in);
  std::sort(nu.begin(), nu.end(), std::greater<>());

  StratumBound generic{ExtHalf::integer(0), StratumRule::Generic, true};
  for (int part : nu) {
    auto comp = sup_component(part, p);
    generic.value += comp.value;
    generic.eventually_decreasing = generic.eventually_decreasing && comp.eventually_decreasing;
  }
  if (!transposition_free) return generic;

  const int largest = nu.front();
  const auto quadratic = std::count(nu.begin(), nu.end(), 2);

  if (largest == 2 && p.value() != 2 && quadratic == 1)
    return {ExtHalf::neg_infinity(), StratumRule::ForcedTransposition, true};

  if (largest == 2 && p.value() == 2) {
    // For fixed delta the bound is -min_i delta_i/2 over the quadratic pieces,
    // and each nonempty piece has delta_i >= 2. With a single piece it falls
    // off as -delta/2; with several, the other pieces can grow freely.
    return {ExtHalf::integer(-1), StratumRule::QuadraticDependence, quadratic == 1};
  }

  if (largest == 3 && p.value() == 3 && (nu.size() == 1 || nu[1] == 1)) {
    // -floor(j/3) - 1 is maximal at the smallest jump, j = 1 (d = 4).
    return {dim_cyclic_cubic_galois(4) - ExtHalf::integer(2), StratumRule::GaloisCubic, true};
  }

  return generic;
}

ExtHalf refined_stratum_value(const StratumShape& shape, Characteristic p, bool transposition_free) {
  const auto& nu = shape.nu;
  if (nu.size() != shape.delta.size()) throw InvalidInput("stratum shape with mismatched lengths");
  const ExtHalf half_d = ExtHalf::from_halves(shape.discriminant());
  const ExtHalf generic = stratum_dim_sum(shape, p) - half_d;
  if (!transposition_free || is_trivial_partition(nu)) return generic;

  const int largest = *std::max_element(nu.begin(), nu.end());
  const auto quadratic = std::count(nu.begin(), nu.end(), 2);
  if (largest == 2 && p.value() != 2 && quadratic == 1) return ExtHalf::neg_infinity();
  if (largest == 2 && p.value() == 2) {
    if (!generic.is_finite()) return generic;
    int smallest = shape.delta[0];
    for (std::size_t i = 0; i < nu.size(); ++i)
      if (nu[i] == 2) smallest = std::min(smallest, shape.delta[i]);
    return ExtHalf::from_halves(-smallest);
  }
  if (largest == 3 && p.value() == 3 && std::count(nu.begin(), nu.end(), 1) == static_cast<long>(nu.size()) - 1) {
    int d3 = 0;
    for (std::size_t i = 0; i < nu.size(); ++i)
      if (nu[i] == 3) d3 = shape.delta[i];
    if (d3 <= 0) return ExtHalf::neg_infinity();
    return dim_cyclic_cubic_galois(d3) - half_d;
  }
  return generic;
}

GlobalSup global_sup(int n, Characteristic p, bool transposition_free) {
  require_degree(n);
  GlobalSup result;
  for (const auto& nu : partitions_of(n)) {
    if (is_trivial_partition(nu)) continue;
    auto bound = refined_stratum_bound(nu, p, transposition_free);
    if (bound.value.is_finite()) result.limit_minus_infinity = result.limit_minus_infinity && bound.eventually_decreasing;
    if (bound.value > result.sup) {
      result.sup = bound.value;
      result.worst = nu;
    }
    result.per_partition.emplace_back(nu, bound);
  }
  return result;
}

}  // namespace permsing
