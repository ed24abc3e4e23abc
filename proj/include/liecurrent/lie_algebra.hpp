#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecurrent/errors.hpp"
#include "liecurrent/linalg.hpp"
#include "liecurrent/rational.hpp"

namespace liecurrent {

enum class AlgebraType { sl2, sl3, so5, g2 };

AlgebraType algebra_type_from_name(const std::string& name);
std::string algebra_type_name(AlgebraType t);

/// Root written in coordinates over the simple roots.
using RootVec = std::vector<int>;

/// Element of g in basis coordinates (dense; dim <= 14).
using GVec = RatVec;

struct RootSystemData {
  int rank = 0;
  std::vector<std::vector<int>> cartan_matrix;  // rank x rank
  std::vector<RootVec> positive_roots;          // sorted by height, then lex
  RootVec highest_root;
  std::vector<int> marks;   // k_0..k_rank with k_0 = 1
  RatMatrix extended_gram;  // <a_i, a_j> for vertices a_0..a_rank, a_0 = -a_max

  int height(const RootVec& r) const;
  std::optional<int> positive_index(const RootVec& r) const;
};

/// A split simple Lie algebra in a basis
///   { e_b : b positive root } u { e_{-b} } u { h_{a_i} : i = 1..rank }
/// normalized so the Killing form has K(e_b, e_{-b}) = 1 for every root,
/// with exact rational structure constants. In this normalization the
/// Killing form itself is the normalized invariant form; it is stored
/// twice (killing / normalized) to keep the two roles separate at call
/// sites.
class LieAlgebraData {
 public:
  AlgebraType type;
  RootSystemData root_system;
  int dim = 0;
  std::vector<std::string> labels;
  // basis index layout: 0..P-1 positive e's, P..2P-1 negative e's, then h's
  std::vector<RootVec> grades;  // zero vector for Cartan elements
  // sparse structure constants: bracket_table[i][j] = [(k, c), ...]
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> bracket_table;
  RatMatrix killing;
  RatMatrix normalized;

  int rank() const { return root_system.rank; }
  int positive_count() const {
    return static_cast<int>(root_system.positive_roots.size());
  }
  int e_index(int pos_root_idx, bool negative) const {
    return pos_root_idx + (negative ? positive_count() : 0);
  }
  int h_index(int i) const { return 2 * positive_count() + (i - 1); }
  bool is_cartan(int basis_idx) const {
    return basis_idx >= 2 * positive_count();
  }

  const std::vector<std::pair<int, Rat>>& bracket(int i, int j) const {
    return bracket_table[i][j];
  }
  GVec bracket_vec(const GVec& a, const GVec& b) const;
  Rat form(int i, int j) const { return normalized.at(i, j); }
  Rat form_vec(const GVec& a, const GVec& b) const;

  /// alpha_i coefficient of the root grading a basis vector sits in
  /// (0 for Cartan elements). vertex is 1-based.
  int alpha_coefficient(int basis_idx, int vertex) const;
  /// beta(h_i) read off the structure constants, vertex 1-based.
  Rat root_value_on_h(int pos_root_idx, bool negative, int vertex) const;

  /// Dual basis of the Cartan {h'_i} w.r.t. the normalized form.
  std::vector<GVec> cartan_dual_basis() const;
  /// Dual basis of the whole algebra w.r.t. the normalized form.
  std::vector<GVec> dual_basis() const;

  GVec basis_vec(int i) const;
  std::string element_str(const GVec& v) const;
};

/// Builds sl2, sl3, so5 or g2 from an exact matrix realization (g2 as the
/// derivation algebra of split octonions). Throws UnsupportedType for
/// anything else.
LieAlgebraData build_algebra(AlgebraType type);

/// Basis automorphism given by images of basis vectors.
struct BasisMap {
  std::vector<GVec> images;
  GVec apply(const GVec& v) const;
};

/// The Cartan involution: s(e_{a_i}) = e_{-a_i} on simple roots,
/// s(h) = -h, extended multiplicatively along root strings. Verified to be
/// an automorphism on all basis pairs; throws ExtensionFailure otherwise.
BasisMap cartan_involution(const LieAlgebraData& g);

}  // namespace liecurrent
