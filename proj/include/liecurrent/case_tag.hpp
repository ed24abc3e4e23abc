#pragma once

#include <string>

#include "liecurrent/errors.hpp"
#include "liecurrent/rational.hpp"

namespace liecurrent {

/// One of the classified double types. A4 carries the two parameters
/// (m1 != m2, m1*m2 != 0; degenerate choices collapse to A2/A3 and are
/// rejected -- run the a(x) classifier on such inputs instead).
struct CaseTag {
  enum class Kind { A1, A2, A3, A4, B1, B2, C };

  Kind kind = Kind::A1;
  Rat m1{0}, m2{0};

  static CaseTag simple(Kind k) {
    if (k == Kind::A4)
      throw DegenerateParameters("case A4 needs parameters m1, m2");
    CaseTag t;
    t.kind = k;
    return t;
  }
  static CaseTag a4(const Rat& m1, const Rat& m2) {
    if (m1 == m2 || m1 * m2 == 0)
      throw DegenerateParameters(
          "A4 requires m1 != m2 and m1*m2 != 0 (degenerate cases classify "
          "as A2/A3)");
    CaseTag t;
    t.kind = Kind::A4;
    t.m1 = m1;
    t.m2 = m2;
    return t;
  }

  bool is_a_case() const {
    return kind == Kind::A1 || kind == Kind::A2 || kind == Kind::A3 ||
           kind == Kind::A4;
  }
  bool is_b_case() const { return kind == Kind::B1 || kind == Kind::B2; }
  bool is_c_case() const { return kind == Kind::C; }

  bool operator==(const CaseTag& o) const {
    return kind == o.kind && m1 == o.m1 && m2 == o.m2;
  }

  std::string name() const {
    switch (kind) {
      case Kind::A1: return "A1";
      case Kind::A2: return "A2";
      case Kind::A3: return "A3";
      case Kind::A4: return "A4";
      case Kind::B1: return "B1";
      case Kind::B2: return "B2";
      case Kind::C: return "C";
    }
    return "?";
  }
};

}  // namespace liecurrent
