// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "as_oracle.hpp"
#include "permsing/classifier.hpp"
#include "permsing/finite_field.hpp"
#include "permsing/oracle.hpp"
#include "permsing/permgroup.hpp"
#include "permsing/strata.hpp"
#include "rank_oracle.hpp"
#include "subgroups.hpp"

using namespace permsing;

namespace {

const ExtHalf kNegInf = ExtHalf::neg_infinity();
ExtHalf I(int v) { return ExtHalf::integer(v); }
ExtHalf H(int halves) { return ExtHalf::from_halves(halves); }
Characteristic P(int p) { return Characteristic::of(p); }

// Failure notes for the current criterion; only the first few are printed.
struct Check {
  int failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

ExtHalf table_dim(int n, int d, int p) {
  const bool p_divides_n = p != 0 && n % p == 0;
  const int e = d - n + 1;
  if (!p_divides_n) return d == n - 1 ? I(0) : kNegInf;
  if (e <= 0 || e % p == 0) return kNegInf;
  return I((e + p - 1) / p);
}

std::string s(const ExtHalf& v) { return v.to_string(); }

int run_criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) c.expect(false, "runtime " + std::to_string(secs) + "s over limit");
  const bool ok = c.failures == 0;
  std::printf("%s criterion %d: %s [%.3fs]", ok ? "PASS" : "FAIL", id, title, secs);
  if (!ok) std::printf(" (%d failures; first: %s)", c.failures, c.first.c_str());
  std::printf("\n");
  return ok ? 0 : 1;
}

void formula_table(Check& c) {
  for (int p : {0, 2, 3, 5, 7})
    for (int n = 1; n <= 8; ++n)
      for (int d = 0; d <= 40; ++d) {
        const auto dim = dim_connected(n, d, P(p));
        const std::string at = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " p=" + std::to_string(p);
        c.expect(dim == table_dim(n, d, p), at + ": dim " + s(dim));
        if (n < 2 || d < 1) continue;
        const auto excess = dim - H(d);
        c.expect(excess <= I(0), at + ": part 4");
        if (n >= 4) c.expect(excess <= I(-1), at + ": part 1");
        if (n == 3) c.expect(excess <= (p == 3 ? H(-1) : I(-1)), at + ": part 2");
        if (n == 2) {
          ExtHalf want = kNegInf;
          if (p != 2 && d == 1) want = H(-1);
          if (p == 2 && d % 2 == 0) want = I(0);
          c.expect(excess == want, at + ": part 3 gives " + s(excess));
        }
      }
}

void char2_oracle(Check& c) {
  for (std::int64_t q : {2, 4}) {
    const auto field = GaloisField::of_order(q);
    for (int d : {2, 4, 6}) {
      const int m = d - 1;
      const auto count = as_class_count(2, q, m);
      const auto expected = static_cast<std::uint64_t>(q - 1) * oracle::ipow(static_cast<std::uint64_t>(q), d / 2 - 1);
      const std::string at = "q=" + std::to_string(q) + " d=" + std::to_string(d);
      c.expect(count == expected, at + ": count " + std::to_string(count));
      c.expect(count == oracle::translation_class_count(field, m), at + ": translation oracle disagrees");
      // (q-1) q^k points means dimension k + 1.
      int k = 0;
      auto rest = count / static_cast<std::uint64_t>(q - 1);
      while (rest > 1 && rest % static_cast<std::uint64_t>(q) == 0) {
        rest /= static_cast<std::uint64_t>(q);
        ++k;
      }
      c.expect(rest == 1 && I(k + 1) == dim_connected(2, d, P(2)), at + ": inferred dimension");
    }
  }
}

void char3_oracle(Check& c) {
  for (std::int64_t q : {3, 9}) {
    const auto field = GaloisField::of_order(q);
    for (int j : {1, 2, 4, 5}) {
      const int d = 2 * (j + 1);
      const int affine = j - j / 3 - 1;
      const auto count = as_class_count(3, q, j);
      const auto expected = static_cast<std::uint64_t>(q - 1) * oracle::ipow(static_cast<std::uint64_t>(q), affine);
      const std::string at = "q=" + std::to_string(q) + " j=" + std::to_string(j);
      c.expect(count == expected, at + ": count " + std::to_string(count));
      c.expect(count == oracle::translation_class_count(field, j), at + ": translation oracle disagrees");
      c.expect(dim_cyclic_cubic_galois(d) == I(affine + 1), at + ": dim_cyclic_cubic_galois");
      c.expect(discriminant_of_jump(3, j) == d, at + ": discriminant");
    }
  }
}

void monotonicity(Check& c) {
  for (int p : {3, 5, 7})
    for (int n = p; n <= 8; n += p) {
      ExtHalf prev = kNegInf, best = kNegInf;
      int best_d = -1;
      bool first = true;
      for (int d = 0; d <= 200; ++d) {
        const auto dim = dim_connected(n, d, P(p));
        if (!dim.is_finite()) continue;
        const auto value = dim - H(d);
        const std::string at = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " d=" + std::to_string(d);
        if (!first) c.expect(value <= prev, at + ": increases");
        if (first || best < value) {
          best = value;
          best_d = d;
        }
        first = false;
        prev = value;
      }
      c.expect(best == H(2 - n) && best_d == n, "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": max " + s(best));
    }
}

void closed_form_suprema(Check& c) {
  for (int p : {0, 2, 3, 5, 7})
    for (int part = 1; part <= 8; ++part) {
      ExtHalf scan = kNegInf;
      for (int delta = 0; delta <= 200; ++delta) scan = max(scan, dim_connected(part, delta, P(p)) - H(delta));
      const auto closed = sup_component(part, P(p));
      const std::string at = "part=" + std::to_string(part) + " p=" + std::to_string(p);
      c.expect(closed.value == scan, at + ": closed " + s(closed.value) + " scan " + s(scan));
      if (p == 2 && part % 2 == 0) {
        c.expect(scan == H(2 - part), at + ": even part sup");
        for (int delta = part; delta <= 200; delta += 2)
          c.expect(dim_connected(part, delta, P(2)) - H(delta) == H(2 - part), at + ": not constant along progression");
        c.expect(!closed.eventually_decreasing, at + ": flagged as decreasing");
      }
    }
}

void key_inequality(Check& c) {
  for (int p : {0, 2, 3, 5, 7})
    for (int n = 1; n <= 10; ++n) {
      const auto g = global_sup(n, P(p), true);
      c.expect(g.sup <= I(-1), "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": sup " + s(g.sup));
    }
}

void soundness_sweep(Check& c) {
  const int known_counts[] = {0, 1, 2, 6, 30, 156};
  for (int n = 1; n <= 5; ++n) {
    const auto groups = oracle::all_subgroups(n);
    c.expect(groups.size() == static_cast<std::size_t>(known_counts[n]), "S_" + std::to_string(n) + ": subgroup count");
    for (const auto& group : groups)
      for (int p : {0, 2, 3, 5}) {
        const auto r = classify(group, P(p));
        const std::string at = "n=" + std::to_string(n) + " |G|=" + std::to_string(group.order()) + " p=" + std::to_string(p);
        c.expect(r.canonical == CanonicalVerdict::Certified, at + ": canonical " + to_string(r.canonical));
        c.expect(r.pair_lc == LcVerdict::True, at + ": lc " + to_string(r.pair_lc));
        if (p != 2) c.expect(r.pair_klt == KltVerdict::True, at + ": klt " + to_string(r.pair_klt));
      }
  }
}

void known_cases(Check& c) {
  const auto a4 = classify(named_group("An", 4), P(2));
  c.expect(a4.canonical == CanonicalVerdict::Certified, "A_4 p=2 canonical " + to_string(a4.canonical));
  const auto s2 = classify(group_closure(parse_generators("(1,2)", 2), 2), P(2));
  c.expect(s2.pair_klt == KltVerdict::False, "S_2 p=2 klt " + to_string(s2.pair_klt));
  c.expect(s2.gorenstein.kx_index_divides == 1, "S_2 p=2 Gorenstein index");
  c.expect(s2.gorenstein.boundary_coefficient.has_value() && s2.gorenstein.boundary_coefficient->num == 1 &&
               s2.gorenstein.boundary_coefficient->den == 1,
           "S_2 p=2 boundary coefficient");
}

void pseudo_reflections(Check& c) {
  for (const auto& g : oracle::symmetric_group(7)) {
    int moved = 0;
    for (int i = 1; i <= 7; ++i) moved += g(i) != i ? 1 : 0;
    if (moved == 0) continue;
    const bool swap = moved == 2;  // two moved points means a single 2-cycle
    const std::string at = g.to_cycle_string();
    c.expect(is_pseudo_reflection(g) == swap, at + ": pseudo-reflection");
    c.expect(g.is_transposition() == swap, at + ": is_transposition");
    const auto m = oracle::matrix_minus_identity(g);
    for (int p : {0, 2, 3}) c.expect(fixed_space_dimension(g) == 7 - oracle::rank(m, p), at + ": rank mod " + std::to_string(p));
  }
}

void tame_counts(Check& c) {
  for (auto [q, n] : {std::pair{3, 2}, {5, 2}, {4, 3}, {7, 3}}) {
    const auto count = tame_totally_ramified_count(q, n);
    c.expect(count == static_cast<std::uint64_t>(n), "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + std::to_string(count));
  }
}

}  // namespace

int main() {
  int failed = 0;
  failed += run_criterion(1, "formula table and corollary bounds, n<=8 d<=40", 1.0, formula_table);
  failed += run_criterion(2, "char 2 class counts match (q-1)q^(d/2-1) and dim_connected", 10.0, char2_oracle);
  failed += run_criterion(3, "char 3 Galois cubic counts match (q-1)q^(j-floor(j/3)-1)", 60.0, char3_oracle);
  failed += run_criterion(4, "d -> dim - d/2 weakly decreasing with max 1-n/2 at d=n", 0, monotonicity);
  failed += run_criterion(5, "sup_component equals scan over delta<=200", 0, closed_form_suprema);
  failed += run_criterion(6, "transposition-free global sup <= -1 for n<=10", 5.0, key_inequality);
  failed += run_criterion(7, "all subgroups of S_n, n<=5: canonical, lc, klt for p!=2", 120.0, soundness_sweep);
  failed += run_criterion(8, "A_4 p=2 canonical; S_2 p=2 not klt, coefficient 1, index 1", 0, known_cases);
  failed += run_criterion(9, "S_7: pseudo-reflections are exactly transpositions; ranks over Q, F_2, F_3", 10.0,
                          pseudo_reflections);
  failed += run_criterion(10, "tame totally ramified counts equal n", 0, tame_counts);
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
