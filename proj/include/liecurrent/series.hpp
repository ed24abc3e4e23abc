#pragma once

#include <string>
#include <vector>

#include "liecurrent/errors.hpp"
#include "liecurrent/laurent.hpp"
#include "liecurrent/multipoly.hpp"
#include "liecurrent/rational.hpp"

namespace liecurrent {

/// Power series in one variable truncated at a known order: the
/// coefficients of x^0..x^order are exact, everything above is unknown.
/// Asking for a coefficient beyond `order` throws InsufficientOrder
/// instead of pretending it is zero.
class TruncSeries {
 public:
  TruncSeries(std::vector<Rat> coeffs, int order);
  static TruncSeries one(int order);

  int order() const { return order_; }
  const Rat& coeff(int k) const;

  /// Product tracks the weaker truncation: result order = min(p, q).
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator+(const TruncSeries& o) const;

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rat> coeffs_;  // indices 0..order_
  int order_;
};

/// Coefficient of x^{-1} in f*g*w, exact. Requires
/// w.order >= |min(0, lowdeg(f*g))| - 1 so that the answer is fully
/// determined; otherwise throws InsufficientOrder.
Rat residue_pair(const LaurentPoly& f, const LaurentPoly& g,
                 const TruncSeries& w);

/// Inverse of a one-variable polynomial with p(0) = 1, to the given order.
/// Throws NonUnitConstantTerm when p(0) != 1.
TruncSeries series_inverse(const MultiPoly& p, int order);

}  // namespace liecurrent
