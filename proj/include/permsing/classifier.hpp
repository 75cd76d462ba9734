#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permsing/characteristic.hpp"
#include "permsing/ext_half.hpp"
#include "permsing/permgroup.hpp"
#include "permsing/strata.hpp"

namespace permsing {

enum class CanonicalVerdict { Certified, NotCertified };
enum class KltVerdict { True, False, Unknown };
enum class LcVerdict { True, Unknown };

std::string to_string(CanonicalVerdict v);
std::string to_string(KltVerdict v);
std::string to_string(LcVerdict v);

/// One rule application in a certificate. `anchor` is a stable identifier of
/// the result the rule instantiates.
struct TraceEntry {
  std::string field;
  std::string rule;
  std::string anchor;
  std::string detail;
  /// Set when the conclusion is derived by combining rules rather than
  /// stated by the cited result directly.
  bool derived = false;
};

/// Certificate for the quotient A^n / G in characteristic p.
///
/// Verdicts are one-sided: NOT_CERTIFIED / UNKNOWN mean the bounds were not
/// strong enough, never that the property fails. The single negative verdict
/// is pair_klt = FALSE, which follows from a coefficient-1 boundary.
struct ClassificationReport {
  int n = 0;
  int p = 0;
  std::size_t group_order = 0;
  std::vector<std::string> generators;
  bool has_transposition = false;
  CanonicalVerdict canonical = CanonicalVerdict::NotCertified;
  KltVerdict pair_klt = KltVerdict::Unknown;
  LcVerdict pair_lc = LcVerdict::Unknown;
  /// n + sup over nontrivial strata of (dim - v).
  ExtHalf stringy_dim_bound = ExtHalf::neg_infinity();
  bool limit_minus_infinity = true;
  GorensteinReport gorenstein;
  /// Informational: max fixed-space dimension of a non-identity element,
  /// bounding the dimension of the non-free locus. Absent for the trivial
  /// group.
  std::optional<int> non_free_locus_dim_bound;
  std::vector<TraceEntry> trace;
};

/// v = d/2 for the permutation action.
ExtHalf v_of_discriminant(int d);

struct CanonicalCertificate {
  bool ok = false;
  Partition worst;
  ExtHalf worst_value = ExtHalf::neg_infinity();
  StratumRule worst_rule = StratumRule::Generic;
};

/// Checks the key inequality sup (dim - d/2) <= -1 over all nontrivial strata
/// of degree n for a transposition-free group. A failure here is a bug.
CanonicalCertificate certify_canonical_no_transposition(int n, Characteristic p);

struct PairStatus {
  KltVerdict klt = KltVerdict::Unknown;
  LcVerdict lc = LcVerdict::Unknown;
};

PairStatus pair_status(int n, Characteristic p, bool has_transposition);

enum class PairClass { Klt, Lc };

/// Lower bound on discrep(E; X) for divisors E over the boundary:
/// discrep(E; X, B) + mult_E(f^* B). The first term is -1 + 1/r for a klt
/// pair whose K_X + B has index r, and -1 for an lc pair. Throws when the
/// boundary is empty.
ExtHalf discrepancy_reduction(Characteristic p, PairClass pair, std::optional<int> b_cartier_index,
                              std::optional<ExtHalf> min_boundary_coeff);

ClassificationReport classify(const PermutationGroup& group, Characteristic p);

}  // namespace permsing
