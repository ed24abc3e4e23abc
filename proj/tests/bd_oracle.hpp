// Brute-force reference enumeration of admissible triples, written before
// and independently of the production enumerator: flat mask loops, a
// recursive-free bijection walk, and its own v_dim computation. Test-only.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "liecurrent/lie_algebra.hpp"
#include "liecurrent/linalg.hpp"

namespace bd_oracle {

using liecurrent::LieAlgebraData;
using liecurrent::Rat;
using liecurrent::RatMatrix;
using liecurrent::RatVec;

struct Counts {
  int total = 0;
  std::map<int, int> by_v_dim;
};

inline Counts count_triples(const LieAlgebraData& g, int vertex) {
  const int rank = g.rank();
  const int V = rank + 1;

  // vertex roots as coefficient vectors over simple roots
  std::vector<std::vector<int>> vr(V, std::vector<int>(rank, 0));
  for (int j = 0; j < rank; ++j) vr[0][j] = -g.root_system.highest_root[j];
  for (int v = 1; v < V; ++v) vr[v][v - 1] = 1;

  // alpha_j(h_i) looked up once
  std::vector<RatVec> simple_vals(rank, RatVec(rank));
  for (int j = 0; j < rank; ++j) {
    std::vector<int> unit(rank, 0);
    unit[j] = 1;
    int idx = -1;
    for (size_t p = 0; p < g.root_system.positive_roots.size(); ++p)
      if (g.root_system.positive_roots[p] == unit) idx = static_cast<int>(p);
    for (int i = 1; i <= rank; ++i)
      simple_vals[j][i - 1] = g.root_value_on_h(idx, false, i);
  }
  auto h_vals = [&](const std::vector<int>& root) {
    RatVec out(rank, Rat(0));
    for (int j = 0; j < rank; ++j)
      for (int i = 0; i < rank; ++i)
        out[i] += Rat(root[j]) * simple_vals[j][i];
    return out;
  };

  Counts counts;
  const RatMatrix& gram = g.root_system.extended_gram;
  for (int m1 = 0; m1 < (1 << V); ++m1) {
    if (m1 & (1 << vertex)) continue;
    for (int m2 = 0; m2 < (1 << V); ++m2) {
      if (m2 & 1) continue;
      std::vector<int> g1, g2;
      for (int v = 0; v < V; ++v) {
        if (m1 & (1 << v)) g1.push_back(v);
        if (m2 & (1 << v)) g2.push_back(v);
      }
      if (g1.size() != g2.size()) continue;
      std::vector<int> perm(g1.size());
      for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = true;
        for (size_t a = 0; a < g1.size() && ok; ++a)
          for (size_t b = 0; b < g1.size() && ok; ++b)
            if (gram.at(g1[a], g1[b]) != gram.at(g2[perm[a]], g2[perm[b]]))
              ok = false;
        // no cycles: repeated application must leave Gamma1
        for (size_t s = 0; s < g1.size() && ok; ++s) {
          int cur = g1[s];
          for (size_t steps = 0; steps <= g1.size(); ++steps) {
            auto it = std::find(g1.begin(), g1.end(), cur);
            if (it == g1.end()) break;
            cur = g2[perm[it - g1.begin()]];
            if (steps == g1.size()) ok = false;
          }
        }
        if (ok) {
          int vd;
          if (g1.empty()) {
            vd = rank;
          } else {
            RatMatrix sys(static_cast<int>(g1.size()), rank);
            for (size_t r = 0; r < g1.size(); ++r) {
              std::vector<int> diff = vr[g1[r]];
              for (int j = 0; j < rank; ++j) diff[j] -= vr[g2[perm[r]]][j];
              RatVec vals = h_vals(diff);
              for (int j = 0; j < rank; ++j)
                sys.at(static_cast<int>(r), j) = vals[j];
            }
            vd = rank - sys.rank();
          }
          ++counts.total;
          ++counts.by_v_dim[vd];
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return counts;
}

}  // namespace bd_oracle
