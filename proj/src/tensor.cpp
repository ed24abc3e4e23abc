#include "liecurrent/tensor.hpp"

#include <sstream>

namespace liecurrent {

void TensorElem::add(const Key& k, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElem::add_const(int i, int j, const Rat& c) {
  add({i, j, -1}, MultiPoly(c));
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (legs_ != o.legs_) throw BadLeg("tensor leg mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  if (legs_ != o.legs_) throw BadLeg("tensor leg mismatch");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
  TensorElem r = *this;
  r += o;
  return r;
}

TensorElem TensorElem::operator-(const TensorElem& o) const {
  TensorElem r = *this;
  r -= o;
  return r;
}

TensorElem TensorElem::operator-() const {
  TensorElem r(legs_);
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

TensorElem TensorElem::operator*(const MultiPoly& p) const {
  TensorElem r(legs_);
  if (p.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.add(k, c * p);
  return r;
}

TensorElem TensorElem::operator*(const Rat& c) const {
  TensorElem r(legs_);
  if (c == 0) return r;
  for (const auto& [k, p] : terms_) r.terms_[k] = p * c;
  return r;
}

TensorElem TensorElem::swap_legs() const {
  if (legs_ != 2) throw BadLeg("swap_legs is for 2-leg tensors");
  TensorElem r(2);
  for (const auto& [k, c] : terms_) r.add({k[1], k[0], -1}, c);
  return r;
}

TensorElem TensorElem::rename_vars(const std::array<Var, 3>& map) const {
  TensorElem r(legs_);
  for (const auto& [k, c] : terms_) r.add(k, c.rename_vars(map));
  return r;
}

std::string TensorElem::first_term_str(const LieAlgebraData& g) const {
  if (terms_.empty()) return "0";
  const auto& [k, c] = *terms_.begin();
  std::ostringstream os;
  os << "(" << c.str() << ")*" << g.labels[k[0]] << "(x)" << g.labels[k[1]]
     << "(y)";
  if (legs_ == 3) os << g.labels[k[2]] << "(z)";
  return os.str();
}

std::string TensorElem::str(const LieAlgebraData& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << g.labels[k[0]] << "(x)" << g.labels[k[1]]
       << "(y)";
    if (legs_ == 3) os << g.labels[k[2]] << "(z)";
  }
  return os.str();
}

TensorElem bracket_leg(const TensorElem& t, int leg, int a,
                       const LieAlgebraData& g) {
  if (leg < 0 || leg >= t.legs()) throw BadLeg("leg index out of range");
  TensorElem r(t.legs());
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [m, sc] : g.bracket(a, k[leg])) {
      TensorElem::Key nk = k;
      nk[leg] = m;
      r.add(nk, c * sc);
    }
  }
  return r;
}

TensorElem bracket_leg_vec(const TensorElem& t, int leg, const GVec& a,
                           const LieAlgebraData& g) {
  TensorElem r(t.legs());
  for (int i = 0; i < g.dim; ++i) {
    if (a[i] == 0) continue;
    r += bracket_leg(t, leg, i, g) * a[i];
  }
  return r;
}

TensorElem casimir_omega(const LieAlgebraData& g) {
  auto dual = g.dual_basis();
  TensorElem omega(2);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      if (dual[i][j] != 0) omega.add_const(i, j, dual[i][j]);
  return omega;
}

TensorElem casimir_cartan_part(const LieAlgebraData& g) {
  auto hdual = g.cartan_dual_basis();
  TensorElem t(2);
  for (int i = 1; i <= g.rank(); ++i) {
    const GVec& hd = hdual[i - 1];
    for (int j = 0; j < g.dim; ++j)
      if (hd[j] != 0) t.add_const(g.h_index(i), j, hd[j]);
  }
  return t;
}

TensorElem drinfeld_jimbo_r(const LieAlgebraData& g) {
  TensorElem r(2);
  for (int p = 0; p < g.positive_count(); ++p)
    r.add_const(g.e_index(p, false), g.e_index(p, true), Rat(1));
  r += casimir_cartan_part(g) * frac(1, 2);
  return r;
}

}  // namespace liecurrent
