#include "liecurrent/multipoly.hpp"

#include <sstream>

namespace liecurrent {

MultiPoly::MultiPoly(const Rat& c) {
  if (c != 0) terms_[{0, 0, 0}] = c;
}

MultiPoly MultiPoly::variable(Var v, int power) {
  Expo e{0, 0, 0};
  e[static_cast<int>(v)] = power;
  return monomial(Rat(1), e);
}

MultiPoly MultiPoly::monomial(const Rat& c, const Expo& e) {
  MultiPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

Rat MultiPoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Expo{0, 0, 0});
}

bool MultiPoly::univariate_in(Var v) const {
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < 3; ++i)
      if (i != static_cast<int>(v) && e[i] != 0) return false;
  return true;
}

void MultiPoly::add_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

MultiPoly MultiPoly::rename_vars(const std::array<Var, 3>& map) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Expo ne{0, 0, 0};
    for (int i = 0; i < 3; ++i) ne[static_cast<int>(map[i])] += e[i];
    r.add_term(ne, c);
  }
  return r;
}

MultiPoly MultiPoly::scale_var(Var v, const Rat& c) const {
  MultiPoly r;
  for (const auto& [e, k] : terms_) {
    Rat factor(1);
    for (int i = 0; i < e[static_cast<int>(v)]; ++i) factor *= c;
    r.add_term(e, k * factor);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      os << "*" << "xyz"[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MultiPoly divide_exact(const MultiPoly& n, const MultiPoly& d) {
  if (d.is_zero()) throw NotDivisible("division by zero polynomial", n);
  MultiPoly q, rem, work = n;
  const auto& dlead = *d.terms_.rbegin();  // lex-largest term of d
  while (!work.terms_.empty()) {
    const auto& [we, wc] = *work.terms_.rbegin();
    Expo qe{we[0] - dlead.first[0], we[1] - dlead.first[1],
            we[2] - dlead.first[2]};
    if (qe[0] < 0 || qe[1] < 0 || qe[2] < 0) {
      // lead term cannot be reduced: it belongs to the remainder
      rem.add_term(we, wc);
      work.terms_.erase(std::prev(work.terms_.end()));
      continue;
    }
    MultiPoly t = MultiPoly::monomial(wc / dlead.second, qe);
    q += t;
    work -= t * d;
  }
  if (!rem.is_zero())
    throw NotDivisible("polynomial division left a remainder", rem);
  return q;
}

}  // namespace liecurrent
