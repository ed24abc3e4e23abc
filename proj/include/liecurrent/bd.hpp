#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecurrent/lie_algebra.hpp"
#include "liecurrent/linalg.hpp"
#include "liecurrent/loop_double.hpp"

namespace liecurrent {

/// A combinatorial triple (Gamma1, Gamma2, tau) on the extended diagram:
/// tau a bijection preserving the inner products with no tau-cycles inside
/// Gamma1, plus the dimension data of V = {h : (a - tau a)(h) = 0}.
struct BDTriple {
  std::vector<int> gamma1;  // sorted vertex ids, 0 = -highest root
  std::vector<int> gamma2;
  std::vector<int> tau;  // tau[k] = image of gamma1[k]
  int v_dim = 0;
  int s_dim = 0;
};

/// Exhaustive enumeration over subset pairs and bijections for the given
/// vertex constraint (alpha_vertex not in Gamma1, alpha_0 not in Gamma2).
/// Deterministic lexicographic output. Throws RankTooLarge above rank 2.
std::vector<BDTriple> enum_bd(const LieAlgebraData& g, int vertex);

/// Independent re-validation of one triple against the definition.
bool bd_triple_valid(const LieAlgebraData& g, int vertex, const BDTriple& t,
                     std::string* why = nullptr);

/// A subalgebra L with a 2-cocycle B on it.
struct FData {
  std::vector<GVec> l_basis;
  RatMatrix b_form;  // on the basis of L
};

struct FDataReport {
  bool applicable = true;  // false for vertices with k_i >= 2
  std::vector<CheckEntry> checks;
  std::string note;
  bool all_pass() const {
    if (!applicable) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Verifies: L is a subalgebra, L + p^-_{alpha_vertex} = g, B is skew, a
/// 2-cocycle, and nondegenerate on L cap p^-.
FDataReport verify_f_data(const FData& d, const LieAlgebraData& g,
                          int vertex);

}  // namespace liecurrent
