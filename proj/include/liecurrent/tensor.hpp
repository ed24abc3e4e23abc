#pragma once

#include <array>
#include <map>
#include <string>

#include "liecurrent/lie_algebra.hpp"
#include "liecurrent/multipoly.hpp"

namespace liecurrent {

/// Sparse tensor in g^{ot 2} or g^{ot 3} with polynomial coefficients
/// (variables x,y for two legs, x,y,z for three). Keys are basis-index
/// tuples; the unused third slot of a 2-leg tensor is fixed at -1.
class TensorElem {
 public:
  using Key = std::array<int, 3>;

  explicit TensorElem(int legs) : legs_(legs) {
    if (legs != 2 && legs != 3) throw BadLeg("tensors have 2 or 3 legs");
  }

  int legs() const { return legs_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, MultiPoly>& terms() const { return terms_; }

  void add(const Key& k, const MultiPoly& c);
  void add_const(int i, int j, const Rat& c);  // 2-leg constant term

  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  TensorElem operator+(const TensorElem& o) const;
  TensorElem operator-(const TensorElem& o) const;
  TensorElem operator-() const;
  TensorElem operator*(const MultiPoly& p) const;
  TensorElem operator*(const Rat& c) const;
  bool operator==(const TensorElem& o) const {
    return legs_ == o.legs_ && terms_ == o.terms_;
  }

  /// Swaps the two legs of a 2-leg tensor (coefficients untouched).
  TensorElem swap_legs() const;
  /// Applies a variable substitution to every coefficient.
  TensorElem rename_vars(const std::array<Var, 3>& map) const;

  /// Witness rendering of the lexicographically first stored term.
  std::string first_term_str(const LieAlgebraData& g) const;
  std::string str(const LieAlgebraData& g) const;

 private:
  int legs_;
  std::map<Key, MultiPoly> terms_;
};

/// Replaces each basis element b on `leg` (0-based) by [a, b], extended
/// linearly over the polynomial coefficients.
TensorElem bracket_leg(const TensorElem& t, int leg, int a,
                       const LieAlgebraData& g);
/// Same with an arbitrary element on the left.
TensorElem bracket_leg_vec(const TensorElem& t, int leg, const GVec& a,
                           const LieAlgebraData& g);

/// Casimir element Omega = sum_i b_i ot b^i over dual bases of the
/// normalized invariant form.
TensorElem casimir_omega(const LieAlgebraData& g);
/// Cartan block of Omega: sum_i h_i ot h'_i.
TensorElem casimir_cartan_part(const LieAlgebraData& g);

/// Drinfeld-Jimbo r-matrix:
///   sum_{a>0} e_a ot e_{-a} + 1/2 sum_i h_i ot h'_i.
TensorElem drinfeld_jimbo_r(const LieAlgebraData& g);

}  // namespace liecurrent
