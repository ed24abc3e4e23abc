#pragma once

#include <map>
#include <string>
#include <vector>

#include "liecurrent/errors.hpp"
#include "liecurrent/laurent.hpp"
#include "liecurrent/rational.hpp"

namespace liecurrent {

/// Trace extensions of F[[x]]: the finite family A(n, alpha) for
/// n in {0,1,2} (truncated x_f-polynomials plus Laurent series in x_e,
/// x = x_f + x_e) and the trivial extension A(inf) with dual directions
/// a_i. alpha sequences are stored to an explicit depth; anything past it
/// fails loudly instead of being treated as zero.
struct TraceExtension {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Finite;
  int n = 0;
  int depth = 6;
  std::map<int, Rat> alpha;  // indices n-2 down to -depth (Finite)
  bool zero_trace = false;   // degenerate control for tests: t == 0

  /// alpha_desc lists alpha_{n-2}, alpha_{n-3}, ..., one value per index,
  /// continuing down to n-2-(len-1); depth extends the zero tail.
  static TraceExtension finite(int n, const std::vector<Rat>& alpha_desc,
                               int depth);
  static TraceExtension infinite(int depth);

  Rat alpha_at(int i) const;  // throws DepthExceeded below the stored depth
};

/// Element of a trace extension: truncated x_f part (index i = power,
/// x_f^0 = f), Laurent part in x_e (x_e^0 = e), and the a_i part for the
/// trivial extension (whose e_part is an ordinary polynomial in x).
struct TraceElem {
  std::vector<Rat> f_part;
  LaurentPoly e_part;
  std::map<int, Rat> a_part;

  bool is_zero() const;
  std::string str(const TraceExtension& ext) const;
};

TraceElem te_zero(const TraceExtension& ext);
TraceElem te_one(const TraceExtension& ext);
/// Embeds a polynomial (or, for n = 0, Laurent) element of F[[x]]:
/// x^k -> x_f^k + x_e^k.
TraceElem te_from_x(const TraceExtension& ext, const LaurentPoly& p);
TraceElem te_xe_power(const TraceExtension& ext, int k);
TraceElem te_xf_power(const TraceExtension& ext, int k);
TraceElem te_a(const TraceExtension& ext, int i);

TraceElem te_add(const TraceElem& u, const TraceElem& v);
TraceElem te_scale(const TraceElem& u, const Rat& c);

/// Exact product honoring x_f^n = 0, e/f idempotency and the a_i rules.
TraceElem trace_mul(const TraceExtension& ext, const TraceElem& u,
                    const TraceElem& v);

/// The trace functional; throws DepthExceeded when it would need an
/// alpha_i below the stored depth.
Rat trace(const TraceExtension& ext, const TraceElem& u);

/// (u|v) = t(uv).
Rat pair(const TraceExtension& ext, const TraceElem& u, const TraceElem& v);

struct NormalizeResult {
  std::vector<Rat> eta;  // eta_1..eta_order: phi(x) = x + sum eta_i x^{i+1}
  std::vector<Rat> xi;   // the solved forward substitution coefficients
  bool verified = false;
};

/// Finds the substitution killing the
/// negative traces (t(y^{-k}) = 0 for 2 <= k <= order when n = 0, for
/// 1 <= k <= order when n = 1,2), verified by re-substitution before
/// returning. Throws ObstructionNonzero for n = 2 with alpha_0 != 0.
NormalizeResult normalize_automorphism(const TraceExtension& ext, int order);

struct PerpReport {
  bool pass = false;
  bool nondegenerate = false;
  int kernel_dim = 0;
  std::vector<std::string> kernel_basis;
  std::string witness;
};

/// Window check that the only directions orthogonal to x^0..x^depth are
/// the embedded polynomials themselves.
PerpReport verify_perp(const TraceExtension& ext, int window_depth);

}  // namespace liecurrent
