#include "permsing/classifier.hpp"

#include <algorithm>

#include "permsing/error.hpp"

namespace permsing {

namespace {

std::string anchor_for(StratumRule rule) {
  switch (rule) {
    case StratumRule::Generic:
      return "Cor loci-dim-bound / per-piece suprema";
    case StratumRule::ForcedTransposition:
      return "Prop key-prop / lone quadratic piece forces a transposition";
    case StratumRule::QuadraticDependence:
      return "Prop key-prop / p=2 dependence bound";
    case StratumRule::GaloisCubic:
      return "Lemma dim-cyc-cubic / Galois cubic bound";
  }
  return "";
}

std::string coefficient_string(const GorensteinReport& g) {
  if (!g.boundary_coefficient) return "absent";
  auto c = *g.boundary_coefficient;
  return c.den == 1 ? std::to_string(c.num) : std::to_string(c.num) + "/" + std::to_string(c.den);
}

}  // namespace

std::string to_string(CanonicalVerdict v) { return v == CanonicalVerdict::Certified ? "CERTIFIED" : "NOT_CERTIFIED"; }

std::string to_string(KltVerdict v) {
  switch (v) {
    case KltVerdict::True:
      return "TRUE";
    case KltVerdict::False:
      return "FALSE";
    case KltVerdict::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(LcVerdict v) { return v == LcVerdict::True ? "TRUE" : "UNKNOWN"; }

ExtHalf v_of_discriminant(int d) {
  if (d < 0) throw InvalidInput("discriminant exponent must be non-negative, got " + std::to_string(d));
  return ExtHalf::from_halves(d);
}

CanonicalCertificate certify_canonical_no_transposition(int n, Characteristic p) {
  auto gs = global_sup(n, p, /*transposition_free=*/true);
  CanonicalCertificate cert;
  cert.ok = gs.sup <= ExtHalf::integer(-1);
  cert.worst = gs.worst;
  cert.worst_value = gs.sup;
  for (const auto& [nu, bound] : gs.per_partition)
    if (nu == gs.worst) cert.worst_rule = bound.rule;
  return cert;
}

PairStatus pair_status(int n, Characteristic p, bool has_transposition) {
  auto gs = global_sup(n, p, !has_transposition);
  PairStatus status;
  // sup is at most 0 and never +inf, so the sum defining the stringy
  // invariant has bounded term dimensions.
  status.lc = gs.sup <= ExtHalf::integer(0) ? LcVerdict::True : LcVerdict::Unknown;
  if (p.value() != 2) {
    status.klt = gs.limit_minus_infinity ? KltVerdict::True : KltVerdict::Unknown;
  } else if (has_transposition) {
    status.klt = KltVerdict::False;
  } else {
    status.klt = certify_canonical_no_transposition(n, p).ok ? KltVerdict::True : KltVerdict::Unknown;
  }
  return status;
}

ExtHalf discrepancy_reduction(Characteristic p, PairClass pair, std::optional<int> b_cartier_index,
                              std::optional<ExtHalf> min_boundary_coeff) {
  if (!b_cartier_index || !min_boundary_coeff) throw InvalidInput("discrepancy reduction needs a nonempty boundary");
  const int index = *b_cartier_index;
  if (index != 1 && index != 2) throw InvalidInput("boundary Cartier index must be 1 or 2");
  const ExtHalf expected = p.value() == 2 ? ExtHalf::integer(1) : ExtHalf::from_halves(1);
  if (*min_boundary_coeff != expected)
    throw InvalidInput("boundary coefficient " + min_boundary_coeff->to_string() + " impossible in characteristic " +
                       std::to_string(p.value()));
  // Discrepancies of a pair with r(K_X + B) Cartier lie in (1/r)Z, so klt
  // means >= -1 + 1/r.
  const ExtHalf pair_bound =
      pair == PairClass::Klt ? ExtHalf::from_halves(-2 + 2 / index) : ExtHalf::integer(-1);
  return pair_bound + *min_boundary_coeff;
}

ClassificationReport classify(const PermutationGroup& group, Characteristic p) {
  ClassificationReport report;
  report.n = group.degree();
  report.p = p.value();
  report.group_order = group.order();
  for (const auto& g : group.generators()) report.generators.push_back(g.to_cycle_string());
  report.has_transposition = !transpositions(group).empty();
  report.gorenstein = gorenstein_report(group, p);
  for (const auto& g : group.elements())
    if (!g.is_identity())
      report.non_free_locus_dim_bound = std::max(report.non_free_locus_dim_bound.value_or(0), fixed_space_dimension(g));

  auto& trace = report.trace;
  const auto& gor = report.gorenstein;
  const int n = report.n;
  const bool transposition_free = !report.has_transposition;

  trace.push_back({"gorenstein", "gorenstein-index",
                   p.value() == 2 ? "Lemma 1-2-Gor / p=2 1-Gorenstein" : "Lemma 1-2-Gor / 2K_X Cartier",
                   "K_X index divides " + std::to_string(gor.kx_index_divides) +
                       (p.value() != 2 && gor.kx_index_divides == 1 ? " (G even: top form invariant)" : ""),
                   p.value() != 2 && gor.kx_index_divides == 1});
  trace.push_back({"gorenstein", "boundary-coefficient", "Lemma coef-boundary",
                   "coefficient " + coefficient_string(gor) + " on " + std::to_string(gor.branch_component_count) +
                       " branch component(s)",
                   false});
  if (gor.b_cartier_index_divides)
    trace.push_back({"gorenstein", "boundary-cartier-index", "Cor Cartier",
                     "B is " + std::to_string(*gor.b_cartier_index_divides) + "-Cartier", false});

  auto gs = global_sup(n, p, transposition_free);
  report.stringy_dim_bound = ExtHalf::integer(n) + gs.sup;
  report.limit_minus_infinity = gs.limit_minus_infinity;
  trace.push_back({"stringy_dim_bound", "stratum-suprema", "Thm dimensions-loci + Cor loci-dim-bound",
                   "n + sup(dim - v) = " + std::to_string(n) + " + " + gs.sup.to_string() +
                       (gs.worst.empty() ? "" : " at nu=" + partition_to_string(gs.worst)),
                   false});

  auto status = pair_status(n, p, report.has_transposition);
  report.pair_lc = status.lc;
  report.pair_klt = status.klt;
  trace.push_back({"pair_lc", "bounded-suprema", "Prop klt-lc(2) + Cor loci-dim-bound(4)",
                   "sup(dim - v) = " + gs.sup.to_string() + " < +inf", false});
  if (p.value() != 2) {
    trace.push_back({"pair_klt", "suprema-tend-to-minus-infinity", "Prop klt-lc(1)",
                     gs.limit_minus_infinity ? "p != 2: every piece bound tends to -inf"
                                             : "limit not established",
                     false});
  } else if (report.has_transposition) {
    trace.push_back({"pair_klt", "coefficient-one-boundary", "Lemma coef-boundary",
                     "p = 2: B has a component with coefficient 1, so (X,B) is not klt", false});
  } else {
    trace.push_back({"pair_klt", "canonical-with-empty-boundary", "Prop canonical-criterion",
                     "p = 2, B = 0: klt follows from the canonical certificate", true});
  }

  if (transposition_free) {
    auto cert = certify_canonical_no_transposition(n, p);
    report.canonical = cert.ok ? CanonicalVerdict::Certified : CanonicalVerdict::NotCertified;
    trace.push_back({"canonical", "no-pseudo-reflection", "Prop canonical-criterion",
                     "G has no transposition; dim X_sing <= n-1 holds for normal X; requires sup(dim - v) <= -1",
                     false});
    trace.push_back({"canonical", "key-inequality", "Prop key-prop",
                     "sup(dim - v) = " + cert.worst_value.to_string() +
                         (cert.worst.empty() ? "" : " at nu=" + partition_to_string(cert.worst)) +
                         (cert.ok ? " <= -1" : " > -1"),
                     false});
    if (!cert.worst.empty())
      trace.push_back({"canonical", to_string(cert.worst_rule), anchor_for(cert.worst_rule),
                       "worst partition " + partition_to_string(cert.worst), false});
    return report;
  }

  const PairClass pair = status.klt == KltVerdict::True ? PairClass::Klt : PairClass::Lc;
  std::optional<ExtHalf> coeff;
  if (gor.boundary_coefficient)
    coeff = gor.boundary_coefficient->den == 1 ? ExtHalf::integer(gor.boundary_coefficient->num)
                                              : ExtHalf::from_halves(gor.boundary_coefficient->num);
  const ExtHalf on_boundary = discrepancy_reduction(p, pair, gor.b_cartier_index_divides, coeff);
  bool off_boundary = true;
  for (int m = 1; m <= n; ++m) off_boundary = off_boundary && certify_canonical_no_transposition(m, p).ok;
  const bool pair_ok = status.lc == LcVerdict::True && (pair == PairClass::Klt || p.value() == 2);

  report.canonical = (pair_ok && off_boundary && on_boundary >= ExtHalf::integer(0)) ? CanonicalVerdict::Certified
                                                                                      : CanonicalVerdict::NotCertified;
  trace.push_back({"canonical", "off-boundary-divisors", "Thm main-non-log / transposition-free case",
                   std::string("key inequality holds for all degrees m <= ") + std::to_string(n) +
                       (off_boundary ? "" : " FAILED"),
                   false});
  trace.push_back({"canonical", "discrepancy-reduction", "Thm main-non-log / discrepancy reduction",
                   "discrep(E;X) >= " + std::string(pair == PairClass::Klt ? "-1 + 1/" + std::to_string(*gor.b_cartier_index_divides)
                                                                          : std::string("-1")) +
                       " + " + coeff->to_string() + " = " + on_boundary.to_string(),
                   false});
  return report;
}

}  // namespace permsing
