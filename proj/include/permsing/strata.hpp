#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permsing/characteristic.hpp"
#include "permsing/ext_half.hpp"

namespace permsing {

using Partition = std::vector<int>;

/// All partitions of n into positive parts, each weakly decreasing, listed in
/// reverse lexicographic order starting from (n).
std::vector<Partition> partitions_of(int n);

bool is_trivial_partition(const Partition& nu);
std::string partition_to_string(const Partition& nu);

/// Stratum of degree-n covers: connected pieces of degrees nu[i] with
/// discriminant exponents delta[i]. delta[i] > 0 exactly when nu[i] > 1.
struct StratumShape {
  Partition nu;
  std::vector<int> delta;

  int degree() const;
  int discriminant() const;
  std::string to_string() const;

  friend bool operator==(const StratumShape&, const StratumShape&) = default;
  friend auto operator<=>(const StratumShape&, const StratumShape&) = default;
};

/// Dimension of the locus of geometrically connected degree-n covers of the
/// punctured formal disk with discriminant exponent d (-inf when empty).
ExtHalf dim_connected(int n, int d, Characteristic p);

/// Dimension of the Galois cubic locus in characteristic 3 with discriminant
/// exponent d = 2(j+1); -inf unless j > 0 and 3 does not divide j.
ExtHalf dim_cyclic_cubic_galois(int d);

/// Every stratum (nu, delta) with |nu| = n and |delta| = d. For repeated parts
/// of nu the matching delta entries are weakly decreasing, so each stratum is
/// listed once.
std::vector<StratumShape> enumerate_strata(int n, int d);

/// Sum of dim_connected over the pieces; an upper bound for the stratum.
ExtHalf stratum_dim_sum(const StratumShape& shape, Characteristic p);

/// Where a component supremum is attained, as a set of delta values.
struct DeltaSet {
  enum class Kind { Empty, Single, Progression };
  Kind kind = Kind::Empty;
  int start = 0;
  int step = 0;  // for Progression: start, start + step, ...

  bool contains(int delta) const;
  std::string to_string() const;
  friend bool operator==(const DeltaSet&, const DeltaSet&) = default;
};

struct ComponentSup {
  ExtHalf value;
  DeltaSet attained_at;
  /// dim_connected(part, delta, p) - delta/2 tends to -inf as delta grows.
  bool eventually_decreasing = true;
};

/// Supremum over delta of dim_connected(part, delta, p) - delta/2, in closed
/// form.
ComponentSup sup_component(int part, Characteristic p);

/// Which estimate produced a refined stratum bound.
enum class StratumRule {
  Generic,               // sum of per-component suprema
  ForcedTransposition,   // p != 2, a lone quadratic piece: stratum is empty
  QuadraticDependence,   // p = 2, quadratic pieces must be F_2-dependent
  GaloisCubic,           // p = 3, nu = (3,1,...,1): only Galois cubics remain
};

std::string to_string(StratumRule rule);

struct StratumBound {
  ExtHalf value;
  StratumRule rule = StratumRule::Generic;
  /// Whether the per-delta bound tends to -inf over this partition's strata.
  bool eventually_decreasing = true;
};

/// Best available upper bound on sup over delta of dim - d/2 for strata of
/// shape nu, for groups with or without transpositions.
StratumBound refined_stratum_bound(const Partition& nu, Characteristic p, bool transposition_free);

inline ExtHalf refined_stratum_sup(const Partition& nu, Characteristic p, bool transposition_free) {
  return refined_stratum_bound(nu, p, transposition_free).value;
}

/// Per-stratum version of refined_stratum_bound: an upper bound on
/// dim - d/2 for the part of stratum `shape` reachable from the group.
ExtHalf refined_stratum_value(const StratumShape& shape, Characteristic p, bool transposition_free);

struct GlobalSup {
  ExtHalf sup = ExtHalf::neg_infinity();
  bool limit_minus_infinity = true;
  /// Partition attaining sup; empty when sup is -inf.
  Partition worst;
  /// One entry per non-trivial partition, in partitions_of order.
  std::vector<std::pair<Partition, StratumBound>> per_partition;
};

/// Maximum of refined_stratum_bound over all non-trivial partitions of n.
GlobalSup global_sup(int n, Characteristic p, bool transposition_free);

}  // namespace permsing
