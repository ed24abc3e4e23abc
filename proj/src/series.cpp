#include "liecurrent/series.hpp"

#include <sstream>

namespace liecurrent {

TruncSeries::TruncSeries(std::vector<Rat> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (order_ < 0) throw Error("series order must be >= 0");
  coeffs_.resize(order_ + 1, Rat(0));
}

TruncSeries TruncSeries::one(int order) {
  std::vector<Rat> c(order + 1, Rat(0));
  c[0] = 1;
  return TruncSeries(std::move(c), order);
}

const Rat& TruncSeries::coeff(int k) const {
  if (k < 0) throw Error("series coefficient at negative exponent");
  if (k > order_)
    throw InsufficientOrder("series coefficient beyond truncation order");
  return coeffs_[k];
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  int ord = std::min(order_, o.order_);
  std::vector<Rat> c(ord + 1, Rat(0));
  for (int i = 0; i <= ord; ++i)
    for (int j = 0; i + j <= ord; ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return TruncSeries(std::move(c), ord);
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  int ord = std::min(order_, o.order_);
  std::vector<Rat> c(ord + 1);
  for (int i = 0; i <= ord; ++i) c[i] = coeffs_[i] + o.coeffs_[i];
  return TruncSeries(std::move(c), ord);
}

std::string TruncSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_str(coeffs_[i]);
    if (i != 0) os << "*" << var << "^" << i;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << order_ + 1 << ")";
  return os.str();
}

Rat residue_pair(const LaurentPoly& f, const LaurentPoly& g,
                 const TruncSeries& w) {
  LaurentPoly h = f * g;
  if (h.is_zero() || h.low_degree() >= 0) return Rat(0);
  if (w.order() < -h.low_degree() - 1)
    throw InsufficientOrder(
        "weight series truncated too early for this residue");
  Rat res(0);
  for (const auto& [d, c] : h.terms()) {
    if (d >= 0) break;
    res += c * w.coeff(-1 - d);
  }
  return res;
}

TruncSeries series_inverse(const MultiPoly& p, int order) {
  if (p.constant_term() != 1)
    throw NonUnitConstantTerm("series inverse needs constant term 1");
  // find the variable p actually uses (constants work with any)
  Var v = Var::x;
  for (Var cand : {Var::x, Var::y, Var::z})
    if (p.degree(cand) > 0) {
      v = cand;
      if (!p.univariate_in(cand))
        throw Error("series_inverse expects a univariate polynomial");
      break;
    }
  std::vector<Rat> pc(order + 1, Rat(0));
  for (const auto& [e, c] : p.terms()) {
    int d = e[static_cast<int>(v)];
    if (d <= order) pc[d] = c;
  }
  // p * q = 1: q_k = -sum_{i=1..k} p_i q_{k-i}
  std::vector<Rat> q(order + 1, Rat(0));
  q[0] = 1;
  for (int k = 1; k <= order; ++k) {
    Rat s(0);
    for (int i = 1; i <= k; ++i) s += pc[i] * q[k - i];
    q[k] = -s;
  }
  return TruncSeries(std::move(q), order);
}

}  // namespace liecurrent
