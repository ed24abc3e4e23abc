#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecurrent/laurent.hpp"
#include "liecurrent/lie_algebra.hpp"
#include "liecurrent/loop_double.hpp"

namespace liecurrent {

/// An order O_h in g((x^-1)) determined by a rational Cartan vector h,
/// usually the simplex vertex h_i with alpha_j(h_i) = delta_ij / k_i.
struct OrderSpec {
  int vertex = 0;          // 0 means h = 0, i.e. g[[x^-1]]
  RatVec h_values;         // alpha_j(h) for j = 1..rank
  int mark = 1;            // k_i (1 for the zero vertex)
};

OrderSpec order_vertex_spec(const LieAlgebraData& g, int vertex);
OrderSpec order_general_spec(const LieAlgebraData& g, const RatVec& h_values);

/// v(sum_{k >= n} a_k x^{-k}) = n; the zero element maps to +infinity,
/// rendered as an empty optional.
std::optional<int> valuation(const LaurentPoly& f);

struct MembershipReport {
  bool member = false;
  bool display_criterion = false;    // the componentwise degree windows
  bool valuation_criterion = false;  // v(f_beta) >= beta(h)
  bool criteria_agree = false;
  std::string witness;
};

/// Exact membership of a Laurent loop element in the order, checked two
/// ways (explicit display for vertex specs, valuation inequality always)
/// and cross-validated.
MembershipReport order_membership(const std::map<int, LaurentPoly>& f,
                                  const OrderSpec& spec,
                                  const LieAlgebraData& g);

struct OrderPerpReport {
  Window window, safe_window;
  std::vector<CheckEntry> checks;
  bool x2_identity = false;  // perp == x^-2 (O cap g[x,x^-1]); k_i = 1 only
  bool all_pass() const;
};

/// Kernel computation of the residue pairing against O cap g[x,x^-1] in
/// the window, compared componentwise with the displayed perp formula,
/// plus the x^-2-multiple identity (holds iff k_i = 1).
OrderPerpReport order_perp_check(const OrderSpec& spec,
                                 const LieAlgebraData& g, const Window& win);

/// Span of all negative root vectors, the Cartan, and the positive root
/// vectors avoiding alpha_vertex; verified closed under the bracket.
std::vector<GVec> parabolic(const LieAlgebraData& g, int vertex);

struct ShadowReport {
  int computed_dim = 0;
  int expected_dim = 0;
  bool dims_match = false;
  bool bracket_matches = false;
  std::string witness;
};

/// The quotient of O_{alpha_1} cap g[x,x^-1] by x^-2 (1-x)^2 times itself,
/// computed in the window: dimension 2 dim(g) and the induced bracket of
/// g[gamma], gamma = x^-1 - 1, gamma^2 = 0, on representatives.
ShadowReport order_quotient_check(const LieAlgebraData& g, const Window& win);

}  // namespace liecurrent
