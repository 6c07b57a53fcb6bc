// Test-only group-theoretic oracles, computed by brute force directly from
// Cayley tables. Deliberately independent of the engine code paths they
// cross-check.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hopfseq/groups.hpp"

namespace hopfseq::oracle {

inline std::vector<int> group_center(const Group& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      if (g.mul(a, b) != g.mul(b, a)) central = false;
    if (central) out.push_back(a);
  }
  return out;
}

inline std::vector<std::vector<int>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(g.order(), false);
  for (int a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::vector<int> cls;
    for (int t = 0; t < g.order(); ++t) {
      int conj = g.mul(g.mul(t, a), g.inverse(t));
      if (!seen[conj]) {
        seen[conj] = true;
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(cls);
  }
  return classes;
}

struct QuotientGroup {
  Group group;
  std::vector<int> coset_of;  // original element -> coset index
};

/// Quotient by a central subgroup given as a sorted element list.
inline QuotientGroup quotient_by_central(const Group& g, const std::vector<int>& z) {
  std::vector<int> coset_of(g.order(), -1);
  std::vector<std::vector<int>> cosets;
  for (int a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    std::vector<int> cs;
    for (int s : z) cs.push_back(g.mul(a, s));
    std::sort(cs.begin(), cs.end());
    int idx = static_cast<int>(cosets.size());
    for (int e : cs) coset_of[e] = idx;
    cosets.push_back(cs);
  }
  Group q;
  q.name = g.name + "/Z";
  q.table.assign(cosets.size(), std::vector<int>(cosets.size()));
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    q.element_names.push_back("[" + g.element_names[cosets[i][0]] + "]");
    for (std::size_t j = 0; j < cosets.size(); ++j)
      q.table[i][j] = coset_of[g.mul(cosets[i][0], cosets[j][0])];
  }
  q.identity = coset_of[g.identity];
  return {std::move(q), std::move(coset_of)};
}

}  // namespace hopfseq::oracle
