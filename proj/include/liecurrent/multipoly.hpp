#pragma once

#include <array>
#include <map>
#include <string>

#include "liecurrent/errors.hpp"
#include "liecurrent/rational.hpp"

namespace liecurrent {

/// The three spectral-parameter variables the project ever needs.
enum class Var : int { x = 0, y = 1, z = 2 };

inline char var_name(Var v) { return "xyz"[static_cast<int>(v)]; }

/// Exponent vector over (x, y, z); unused variables carry exponent 0.
using Expo = std::array<int, 3>;

/// Sparse multivariate polynomial over Q in a subset of {x, y, z}.
/// Terms are kept in lexicographic exponent order, zero coefficients are
/// never stored, and every operation is exact.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(const Rat& c);
  static MultiPoly variable(Var v, int power = 1);
  /// c * x^a y^b z^c
  static MultiPoly monomial(const Rat& c, const Expo& e);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Rat>& terms() const { return terms_; }
  Rat coeff(const Expo& e) const;
  /// Degree in one variable, -1 for the zero polynomial.
  int degree(Var v) const;
  int total_degree() const;
  bool is_constant() const;
  /// True when only `v` occurs.
  bool univariate_in(Var v) const;
  Rat constant_term() const { return coeff({0, 0, 0}); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  /// Substitutes variables: exponent slot i is moved to slot map[i].
  /// Distinct slots must map to distinct slots.
  MultiPoly rename_vars(const std::array<Var, 3>& map) const;
  /// p(x) -> p(c*x) etc., scaling one variable.
  MultiPoly scale_var(Var v, const Rat& c) const;

  std::string str() const;

 private:
  void add_term(const Expo& e, const Rat& c);
  std::map<Expo, Rat> terms_;

  friend MultiPoly divide_exact(const MultiPoly& n, const MultiPoly& d);
};

struct NotDivisible : Error {
  NotDivisible(const std::string& msg, MultiPoly rem)
      : Error(msg), remainder(std::move(rem)) {}
  MultiPoly remainder;
};

/// Exact division in Q[x,y,z]. Throws NotDivisible with the nonzero
/// remainder as witness when d does not divide n.
MultiPoly divide_exact(const MultiPoly& n, const MultiPoly& d);

}  // namespace liecurrent
