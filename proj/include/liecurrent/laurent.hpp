#pragma once

#include <map>
#include <string>

#include "liecurrent/errors.hpp"
#include "liecurrent/rational.hpp"

namespace liecurrent {

/// Sparse Laurent polynomial over Q in one variable (finite support,
/// integer exponents of either sign, no zero coefficients stored).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rat& c);
  static LaurentPoly monomial(const Rat& c, int deg);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rat>& terms() const { return terms_; }
  Rat coeff(int deg) const;
  /// Lowest/highest exponent with nonzero coefficient; both throw on zero.
  int low_degree() const;
  int high_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rat& c) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  bool is_polynomial() const;  // no negative exponents

  std::string str(const std::string& var = "x") const;

 private:
  void add_term(int deg, const Rat& c);
  std::map<int, Rat> terms_;
};

}  // namespace liecurrent
