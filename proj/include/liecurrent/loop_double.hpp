#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecurrent/case_tag.hpp"
#include "liecurrent/laurent.hpp"
#include "liecurrent/lie_algebra.hpp"
#include "liecurrent/multipoly.hpp"
#include "liecurrent/series.hpp"

namespace liecurrent {

/// The canonical invariant form of a classified double: the loop part is
///   Res_{x=0}(K'(f1,f2) x^{-shift} w(x))
/// with w the inverse of a stored polynomial (the A-case a(x), B-case
/// b(x), C-case c(x)), plus the case's finite-part correction.
struct FormSpec {
  CaseTag tag;

  /// 1/a(x) (resp. 1/b, 1/c) as an exact polynomial in x.
  MultiPoly inverse_weight() const;
  /// Residue shift: 0 for A, 1 for B, 2 for C.
  int shift() const;
  /// The weight series to a requested order.
  TruncSeries weight(int order) const;
};

/// Element of the double: a g-valued Laurent polynomial plus the case's
/// finite summand (nothing for A, a copy of g for B, g[eps] for C).
struct DoubleElem {
  CaseTag tag;
  std::map<int, LaurentPoly> loop;  // basis index -> Laurent coefficient
  GVec fin_b;                       // case B
  GVec fin_c_h, fin_c_g;            // case C: h + g*eps

  static DoubleElem zero(const CaseTag& tag, const LieAlgebraData& g);
  static DoubleElem loop_monomial(const CaseTag& tag, const LieAlgebraData& g,
                                  int basis_idx, const LaurentPoly& f);

  bool is_zero() const;
  DoubleElem operator+(const DoubleElem& o) const;
  DoubleElem operator-(const DoubleElem& o) const;
  DoubleElem operator*(const Rat& c) const;
  bool operator==(const DoubleElem& o) const;

  std::string str(const LieAlgebraData& g) const;
};

/// Inclusion of g[x] into the double: identity for A, f -> (f, f(0)) for
/// B, f -> (f, a0 + a1*eps) for C.
DoubleElem embed_gx(const std::map<int, LaurentPoly>& f, const CaseTag& tag,
                    const LieAlgebraData& g);

/// Lie bracket of the double (componentwise; g[eps] has eps^2 = 0).
DoubleElem bracket_double(const DoubleElem& u, const DoubleElem& v,
                          const LieAlgebraData& g);

/// The canonical symmetric invariant form, exact.
Rat canonical_pair(const DoubleElem& u, const DoubleElem& v,
                   const FormSpec& form, const LieAlgebraData& g);

/// Finitely presented Lagrangian subalgebra: a finite list of exceptional
/// generators plus the scalar-tail q(x) * g[x^{-1}] (or q(x) * g[x] for
/// control patterns growing in the polynomial direction).
struct LagrangianPattern {
  CaseTag tag;
  std::vector<DoubleElem> exceptional;
  LaurentPoly tail_q;      // zero means "no tail"
  bool tail_in_x = false;  // true: tail is q * g[x]

  std::vector<std::string> notes;  // convention flags surfaced in reports
};

/// The explicit complementary Lagrangian subalgebra of each case.
LagrangianPattern build_W(const CaseTag& tag, const LieAlgebraData& g);

/// Negative-control pattern: the image of g[x] itself.
LagrangianPattern gx_pattern(const CaseTag& tag, const LieAlgebraData& g);

/// Exact membership test (reduce modulo the tail, then solve against the
/// exceptional span). Returns the irreducible residual on failure.
bool pattern_member(const LagrangianPattern& w, const DoubleElem& u,
                    const LieAlgebraData& g,
                    DoubleElem* residual_out = nullptr);

struct Window {
  int min_deg = -10;
  int max_deg = 6;
};

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing
};

struct ManinReport {
  std::string case_name;
  std::string algebra;
  Window window, safe_window;
  std::vector<CheckEntry> checks;
  std::vector<std::string> notes;
  bool all_pass() const;
};

/// Three verdicts: isotropy, subalgebra closure (exact via the pattern),
/// transversality against the embedded g[x] on the safe sub-window.
ManinReport manin_verify(const LagrangianPattern& w, const CaseTag& tag,
                         const LieAlgebraData& g, const Window& win);

/// Tail generators q * x^{-t} b_i whose support fits in the window.
std::vector<DoubleElem> tail_window_basis(const LagrangianPattern& w,
                                          const LieAlgebraData& g,
                                          const Window& win);

struct PerpResult {
  std::vector<DoubleElem> basis;  // exact kernel on the window
  Window safe_window;
  bool multiplier_ok = false;  // weighted perp = (1/a) * plain perp
  std::string witness;
};

/// Orthogonal complement of span(V) within the window under the weighted
/// form, plus the 1/a(x)-multiplier cross-check against the unweighted
/// residue form.
PerpResult perp_window(const std::vector<DoubleElem>& v, const FormSpec& form,
                       const LieAlgebraData& g, const Window& win);

/// Classification of an admissible inverse weight 1/a(x), deg <= 2.
struct AClass {
  CaseTag::Kind kind = CaseTag::Kind::A1;
  std::optional<Rat> normalizing_c;  // A2: p(cx) = 1 - x
  std::optional<Rat> j;              // A4 invariant b1^2/b2
};
AClass classify_a_poly(const MultiPoly& p);

/// sigma applied generator-wise to an A4 pattern (x fixed); verifies the
/// result equals the pattern with swapped parameters and throws
/// MismatchWitness otherwise.
LagrangianPattern involution_on_W(const LagrangianPattern& w,
                                  const BasisMap& sigma,
                                  const LieAlgebraData& g);

/// Span equality of two patterns via mutual membership of generators;
/// returns a witness string when they differ.
std::optional<std::string> pattern_span_mismatch(const LagrangianPattern& a,
                                                 const LagrangianPattern& b,
                                                 const LieAlgebraData& g);

}  // namespace liecurrent
