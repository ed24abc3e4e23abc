#include "liecurrent/laurent.hpp"

#include <sstream>

namespace liecurrent {

LaurentPoly::LaurentPoly(const Rat& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Rat& c, int deg) {
  LaurentPoly p;
  if (c != 0) p.terms_[deg] = c;
  return p;
}

Rat LaurentPoly::coeff(int deg) const {
  auto it = terms_.find(deg);
  return it == terms_.end() ? Rat(0) : it->second;
}

int LaurentPoly::low_degree() const {
  if (terms_.empty()) throw Error("low_degree of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::high_degree() const {
  if (terms_.empty()) throw Error("high_degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int deg, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(deg, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [d, c] : terms_) r.terms_[d] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [d1, c1] : terms_)
    for (const auto& [d2, c2] : o.terms_) r.add_term(d1 + d2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [d, k] : terms_) r.terms_[d] = k * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [d, c] : terms_) r.terms_[d + k] = c;
  return r;
}

bool LaurentPoly::is_polynomial() const {
  return terms_.empty() || terms_.begin()->first >= 0;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    if (d != 0) os << "*" << var << "^" << d;
  }
  return os.str();
}

}  // namespace liecurrent
