#pragma once

// Test-only: every subgroup of S_n by repeatedly closing a known subgroup
// together with one more element, deduplicated by element set.

#include <set>
#include <vector>

#include "permsing/permgroup.hpp"
#include "rank_oracle.hpp"

namespace oracle {

inline std::vector<permsing::PermutationGroup> all_subgroups(int n) {
  using permsing::Permutation;
  using permsing::PermutationGroup;
  const auto sn = symmetric_group(n);
  std::set<std::vector<Permutation>> seen;
  std::vector<PermutationGroup> out;
  std::vector<PermutationGroup> frontier{permsing::group_closure({}, n)};
  seen.insert(frontier.front().elements());
  out.push_back(frontier.front());
  while (!frontier.empty()) {
    std::vector<PermutationGroup> next;
    for (const auto& h : frontier) {
      for (const auto& g : sn) {
        if (h.contains(g)) continue;
        std::vector<Permutation> gens(h.generators());
        gens.push_back(g);
        auto k = permsing::group_closure(gens, n);
        if (seen.insert(k.elements()).second) {
          out.push_back(k);
          next.push_back(k);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace oracle
