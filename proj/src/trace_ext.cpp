#include "liecurrent/trace_ext.hpp"

#include <algorithm>
#include <sstream>

#include "liecurrent/linalg.hpp"

namespace liecurrent {

TraceExtension TraceExtension::finite(int n, const std::vector<Rat>& alpha_desc,
                                      int depth) {
  if (n < 0 || n > 2) throw Error("finite trace extensions have n in {0,1,2}");
  if (depth < 1) throw Error("depth must be >= 1");
  TraceExtension e;
  e.kind = Kind::Finite;
  e.n = n;
  e.depth = depth;
  int idx = n - 2;
  for (const auto& a : alpha_desc) {
    e.alpha[idx] = a;
    --idx;
  }
  for (; idx >= -depth; --idx) e.alpha[idx] = 0;
  return e;
}

TraceExtension TraceExtension::infinite(int depth) {
  TraceExtension e;
  e.kind = Kind::Infinite;
  e.depth = depth;
  return e;
}

Rat TraceExtension::alpha_at(int i) const {
  if (i > n - 2) throw Error("alpha index out of range");
  auto it = alpha.find(i);
  if (it == alpha.end())
    throw DepthExceeded("alpha_" + std::to_string(i) +
                        " lies below the stored depth");
  return it->second;
}

bool TraceElem::is_zero() const {
  for (const auto& c : f_part)
    if (c != 0) return false;
  for (const auto& [i, c] : a_part)
    if (c != 0) return false;
  return e_part.is_zero();
}

std::string TraceElem::str(const TraceExtension& ext) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < f_part.size(); ++i) {
    if (f_part[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_str(f_part[i]) << "*xf^" << i;
  }
  if (!e_part.is_zero()) {
    if (!first) os << " + ";
    first = false;
    os << e_part.str(ext.kind == TraceExtension::Kind::Finite ? "xe" : "x");
  }
  for (const auto& [i, c] : a_part) {
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*a" << i;
  }
  if (first) os << "0";
  return os.str();
}

TraceElem te_zero(const TraceExtension& ext) {
  TraceElem u;
  if (ext.kind == TraceExtension::Kind::Finite) u.f_part.assign(ext.n, Rat(0));
  return u;
}

TraceElem te_one(const TraceExtension& ext) {
  TraceElem u = te_zero(ext);
  if (ext.kind == TraceExtension::Kind::Finite) {
    u.e_part = LaurentPoly(Rat(1));  // e
    if (ext.n >= 1) u.f_part[0] = 1;  // f; 1 = e + f
  } else {
    u.e_part = LaurentPoly(Rat(1));
  }
  return u;
}

TraceElem te_from_x(const TraceExtension& ext, const LaurentPoly& p) {
  TraceElem u = te_zero(ext);
  for (const auto& [k, c] : p.terms()) {
    if (k < 0 && (ext.kind == TraceExtension::Kind::Infinite || ext.n > 0))
      throw Error("negative powers of x only exist in A(0,alpha)");
    u.e_part += LaurentPoly::monomial(c, k);
    if (ext.kind == TraceExtension::Kind::Finite && k >= 0 && k < ext.n)
      u.f_part[k] += c;
  }
  return u;
}

TraceElem te_xe_power(const TraceExtension& ext, int k) {
  TraceElem u = te_zero(ext);
  if (ext.kind != TraceExtension::Kind::Finite)
    throw Error("x_e lives in the finite extensions");
  u.e_part = LaurentPoly::monomial(Rat(1), k);
  return u;
}

TraceElem te_xf_power(const TraceExtension& ext, int k) {
  TraceElem u = te_zero(ext);
  if (ext.kind != TraceExtension::Kind::Finite || k < 0)
    throw Error("x_f powers live in the finite extensions");
  if (k < ext.n) u.f_part[k] = 1;  // x_f^n = 0
  return u;
}

TraceElem te_a(const TraceExtension& ext, int i) {
  if (ext.kind != TraceExtension::Kind::Infinite)
    throw Error("a_i lives in the trivial extension");
  if (i < 0) throw Error("a index must be >= 0");
  if (i > ext.depth)
    throw DepthExceeded("a_" + std::to_string(i) + " beyond stored depth");
  TraceElem u = te_zero(ext);
  u.a_part[i] = 1;
  return u;
}

TraceElem te_add(const TraceElem& u, const TraceElem& v) {
  TraceElem r = u;
  if (r.f_part.size() < v.f_part.size()) r.f_part.resize(v.f_part.size(), Rat(0));
  for (size_t i = 0; i < v.f_part.size(); ++i) r.f_part[i] += v.f_part[i];
  r.e_part += v.e_part;
  for (const auto& [i, c] : v.a_part) {
    r.a_part[i] += c;
    if (r.a_part[i] == 0) r.a_part.erase(i);
  }
  return r;
}

TraceElem te_scale(const TraceElem& u, const Rat& c) {
  TraceElem r = u;
  for (auto& x : r.f_part) x *= c;
  r.e_part = r.e_part * c;
  if (c == 0) {
    r.a_part.clear();
    r.e_part = LaurentPoly();
  } else {
    for (auto& [i, x] : r.a_part) x *= c;
  }
  return r;
}

TraceElem trace_mul(const TraceExtension& ext, const TraceElem& u,
                    const TraceElem& v) {
  TraceElem r = te_zero(ext);
  if (ext.kind == TraceExtension::Kind::Finite) {
    // x_f block: truncated polynomial multiplication, x_f^n = 0
    for (int i = 0; i < ext.n; ++i)
      for (int j = 0; j < ext.n; ++j) {
        if (i + j >= ext.n) continue;
        r.f_part[i + j] += u.f_part[i] * v.f_part[j];
      }
    r.e_part = u.e_part * v.e_part;
    return r;
  }
  // trivial extension: poly * poly, a_i x^j = a_{i-j} (i >= j), a a = 0
  r.e_part = u.e_part * v.e_part;
  auto absorb = [&](const std::map<int, Rat>& as, const LaurentPoly& p) {
    for (const auto& [i, c] : as)
      for (const auto& [j, d] : p.terms()) {
        if (j < 0) throw Error("trivial extension has no negative powers");
        if (i >= j) {
          r.a_part[i - j] += c * d;
          if (r.a_part[i - j] == 0) r.a_part.erase(i - j);
        }
      }
  };
  absorb(u.a_part, v.e_part);
  absorb(v.a_part, u.e_part);
  return r;
}

Rat trace(const TraceExtension& ext, const TraceElem& u) {
  if (ext.zero_trace) return Rat(0);
  Rat t(0);
  if (ext.kind == TraceExtension::Kind::Infinite) {
    auto it = u.a_part.find(0);
    return it == u.a_part.end() ? Rat(0) : it->second;
  }
  // t(x_e^{n-1}) = 1, t(x_e^i) = alpha_i (i <= n-2), 0 above;
  // t(x_f^{n-1}) = -1, t(x_f^i) = -alpha_i (0 <= i <= n-2)
  for (const auto& [d, c] : u.e_part.terms()) {
    if (d == ext.n - 1)
      t += c;
    else if (d <= ext.n - 2)
      t += c * ext.alpha_at(d);
  }
  for (int i = 0; i < ext.n; ++i) {
    if (u.f_part[i] == 0) continue;
    if (i == ext.n - 1)
      t -= u.f_part[i];
    else
      t -= u.f_part[i] * ext.alpha_at(i);
  }
  return t;
}

Rat pair(const TraceExtension& ext, const TraceElem& u, const TraceElem& v) {
  return trace(ext, trace_mul(ext, u, v));
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

namespace {

// series vectors s[0..top] standing for sum s_i x^i
using Series = std::vector<Rat>;

Series series_mul(const Series& a, const Series& b, int top) {
  Series r(top + 1, Rat(0));
  for (int i = 0; i <= top; ++i)
    for (int j = 0; i + j <= top; ++j)
      if (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size()))
        r[i + j] += a[i] * b[j];
  return r;
}

// (1 + u)^{-k} with u having zero constant term
Series one_plus_pow_neg(const Series& u, int k, int top) {
  // inverse of (1+u)^k
  Series pw(top + 1, Rat(0));
  pw[0] = 1;
  Series base(top + 1, Rat(0));
  base[0] = 1;
  for (size_t i = 1; i < u.size() && i <= static_cast<size_t>(top); ++i)
    base[i] = u[i];
  for (int i = 0; i < k; ++i) pw = series_mul(pw, base, top);
  // invert pw
  Series inv(top + 1, Rat(0));
  inv[0] = 1;
  for (int m = 1; m <= top; ++m) {
    Rat s(0);
    for (int i = 1; i <= m; ++i) s += pw[i] * inv[m - i];
    inv[m] = -s;
  }
  return inv;
}

// t(y_e^{-k}) where y_e = x_e (1 + sum xi_i x_e^i)
Rat trace_of_substituted_power(const TraceExtension& ext, const Series& xi,
                               int k) {
  int top = k + std::max(ext.n, 1);  // coefficients up to x_e^{n-1}
  Series u(top + 1, Rat(0));
  for (size_t i = 1; i < xi.size() && i <= static_cast<size_t>(top); ++i)
    u[i] = xi[i];
  Series inv = one_plus_pow_neg(u, k, top);
  // y_e^{-k} = x_e^{-k} * inv(x_e)
  TraceElem el = te_zero(ext);
  for (int j = 0; j <= top; ++j)
    if (inv[j] != 0) el.e_part += LaurentPoly::monomial(inv[j], j - k);
  return trace(ext, el);
}

// compositional inverse: given y = x (1 + sum xi_i x^i), find eta with
// x = y (1 + sum eta_i y^i), to index `order`
std::vector<Rat> revert_series(const std::vector<Rat>& xi, int order) {
  // x(y) = y + sum_{i>=1} eta_i y^{i+1}; expand y = S(x) into x = T(y)
  // iteratively: T_1 = y; eta_k fixed so that T(S(x)) = x mod x^{k+2}
  std::vector<Rat> eta(order + 1, Rat(0));  // eta[1..order]
  const int top = order + 1;
  auto compose_TS = [&](const std::vector<Rat>& et) {
    // S(x) as series coefficients
    Series S(top + 1, Rat(0));
    S[1] = 1;
    for (int i = 1; i + 1 <= top && i < static_cast<int>(xi.size()); ++i)
      S[i + 1] = xi[i];
    // T(S) = S + sum et_i S^{i+1}
    Series acc = S;
    Series Spow = S;
    for (int i = 1; i <= order; ++i) {
      Spow = series_mul(Spow, S, top);  // S^{i+1}
      if (et[i] == 0) continue;
      for (int d = 0; d <= top; ++d) acc[d] += et[i] * Spow[d];
    }
    return acc;
  };
  for (int k = 1; k <= order; ++k) {
    Series c = compose_TS(eta);
    // coefficient of x^{k+1} must vanish; it is linear in eta_k with
    // coefficient 1
    eta[k] -= c[k + 1];
  }
  return eta;
}

}  // namespace

NormalizeResult normalize_automorphism(const TraceExtension& ext, int order) {
  if (ext.kind != TraceExtension::Kind::Finite)
    throw Error("normalization applies to the finite extensions");
  if (order < 1) throw Error("order must be >= 1");
  if (ext.n == 2 && ext.alpha_at(0) != 0)
    throw ObstructionNonzero(
        "A(2,alpha) with alpha_0 != 0 admits no Lagrangian complement; "
        "t(e) = alpha_0 is substitution-invariant");

  // unknown xi indices and the trace equations that determine them:
  //   n = 0: t(y^{-k}) = 0, k = 2..order, solves xi_{k-1}
  //   n = 1: t(y_e^{-k}) = 0, k = 1..order, solves xi_k
  //   n = 2: t(y_e^{-k}) = 0, k = 1..order, solves xi_{k+1} (xi_1 = 0 gauge)
  int xi_top = ext.n == 0 ? order - 1 : (ext.n == 1 ? order : order + 1);
  std::vector<Rat> xi(xi_top + 1, Rat(0));
  int k_lo = ext.n == 0 ? 2 : 1;
  int k_hi = ext.n == 0 ? order : order;
  for (int k = k_lo; k <= k_hi; ++k) {
    int unknown = ext.n == 0 ? k - 1 : (ext.n == 1 ? k : k + 1);
    if (unknown > xi_top) break;
    // the equation is linear in xi_unknown with coefficient -k (n=0,1) or
    // -k * t(x_e^{n-1}) = -k (n=2); solve by evaluating at 0 and 1
    xi[unknown] = 0;
    Rat at0 = trace_of_substituted_power(ext, xi, k);
    xi[unknown] = 1;
    Rat at1 = trace_of_substituted_power(ext, xi, k);
    Rat slope = at1 - at0;
    if (slope == 0) throw Error("normalization system is not triangular");
    xi[unknown] = -at0 / slope;
  }

  NormalizeResult res;
  res.xi.assign(xi.begin() + 1, xi.end());

  // verify by re-substitution
  res.verified = true;
  for (int k = k_lo; k <= k_hi; ++k)
    if (trace_of_substituted_power(ext, xi, k) != 0) res.verified = false;
  if (ext.n == 0) {
    // t(y^{-1}) = 1 is preserved
    if (trace_of_substituted_power(ext, xi, 1) != 1) res.verified = false;
  }
  if (!res.verified)
    throw Error("normalization re-substitution check failed");

  auto eta = revert_series(xi, order);
  res.eta.assign(eta.begin() + 1, eta.end());

  // reversion consistency: composing the two substitutions gives identity
  {
    const int top = order + 1;
    Series S(top + 1, Rat(0)), T(top + 1, Rat(0));
    S[1] = 1;
    for (int i = 1; i <= xi_top && i + 1 <= top; ++i) S[i + 1] = xi[i];
    T[1] = 1;
    for (int i = 1; i <= order && i + 1 <= top; ++i) T[i + 1] = eta[i];
    // T(S(x)) coefficients
    Series acc(top + 1, Rat(0));
    Series Spow = S;
    for (int d = 0; d <= top; ++d) acc[d] += T[1] * Spow[d];
    for (int i = 2; i <= top; ++i) {
      Spow = series_mul(Spow, S, top);
      if (T[i] == 0) continue;
      for (int d = 0; d <= top; ++d) acc[d] += T[i] * Spow[d];
    }
    for (int d = 2; d <= std::min(top, order + 1); ++d)
      if (acc[d] != 0) throw Error("series reversion check failed");
  }
  return res;
}

// ---------------------------------------------------------------------------
// Perp window
// ---------------------------------------------------------------------------

PerpReport verify_perp(const TraceExtension& ext, int window_depth) {
  PerpReport rep;
  const int wd = window_depth;
  // candidate directions spanning the window
  std::vector<TraceElem> cand;
  std::vector<bool> is_poly_dir;
  std::vector<std::string> names;
  if (ext.kind == TraceExtension::Kind::Finite) {
    for (int d = -wd; d <= wd; ++d) {
      cand.push_back(te_xe_power(ext, d));
      names.push_back("xe^" + std::to_string(d));
      is_poly_dir.push_back(false);
    }
    for (int i = 0; i < ext.n; ++i) {
      cand.push_back(te_xf_power(ext, i));
      names.push_back("xf^" + std::to_string(i));
      is_poly_dir.push_back(false);
    }
  } else {
    for (int d = 0; d <= wd; ++d) {
      cand.push_back(te_from_x(ext, LaurentPoly::monomial(Rat(1), d)));
      names.push_back("x^" + std::to_string(d));
      is_poly_dir.push_back(true);
    }
    for (int i = 0; i <= wd; ++i) {
      cand.push_back(te_a(ext, i));
      names.push_back("a" + std::to_string(i));
      is_poly_dir.push_back(false);
    }
  }
  // rows: embedded polynomials x^0..x^wd
  RatMatrix m(wd + 1, static_cast<int>(cand.size()));
  for (int r = 0; r <= wd; ++r) {
    TraceElem row = te_from_x(ext, LaurentPoly::monomial(Rat(1), r));
    for (size_t c = 0; c < cand.size(); ++c)
      m.at(r, static_cast<int>(c)) = pair(ext, row, cand[c]);
  }
  auto kernel = m.nullspace();
  rep.kernel_dim = static_cast<int>(kernel.size());

  // which candidate combos are embedded polynomials?  Build the embedded
  // x^j coordinate vectors in candidate space and test membership.
  std::vector<RatVec> poly_vecs;
  for (int j = 0; j <= wd; ++j) {
    RatVec v(cand.size(), Rat(0));
    if (ext.kind == TraceExtension::Kind::Finite) {
      v[j + wd] = 1;  // xe^j
      if (j < ext.n) v[2 * wd + 1 + j] = 1;  // + xf^j
    } else {
      v[j] = 1;
    }
    poly_vecs.push_back(std::move(v));
  }
  RatMatrix polym(static_cast<int>(poly_vecs.size()),
                  static_cast<int>(cand.size()));
  for (size_t r = 0; r < poly_vecs.size(); ++r)
    for (size_t c = 0; c < cand.size(); ++c)
      polym.at(static_cast<int>(r), static_cast<int>(c)) = poly_vecs[r][c];
  int poly_rank = polym.rank();

  // every kernel vector must lie in the polynomial span
  rep.pass = true;
  for (const auto& k : kernel) {
    std::vector<RatVec> stack = poly_vecs;
    stack.push_back(k);
    RatMatrix sm(static_cast<int>(stack.size()), static_cast<int>(cand.size()));
    for (size_t r = 0; r < stack.size(); ++r)
      for (size_t c = 0; c < cand.size(); ++c)
        sm.at(static_cast<int>(r), static_cast<int>(c)) = stack[r][c];
    if (sm.rank() != poly_rank) {
      rep.pass = false;
      TraceElem bad = te_zero(ext);
      for (size_t c = 0; c < cand.size(); ++c)
        if (k[c] != 0) bad = te_add(bad, te_scale(cand[c], k[c]));
      rep.witness = "non-polynomial perp direction " + bad.str(ext);
      break;
    }
  }
  // nondegeneracy on the window: the pairing matrix of all candidates
  // against all candidates must not have a kernel beyond edge artifacts;
  // the practical control is that the trace is not identically zero
  rep.nondegenerate = false;
  for (int r = 0; r <= wd && !rep.nondegenerate; ++r)
    for (size_t c = 0; c < cand.size(); ++c)
      if (m.at(r, static_cast<int>(c)) != 0) rep.nondegenerate = true;
  if (!rep.nondegenerate) {
    rep.pass = false;
    if (rep.witness.empty())
      rep.witness = "trace pairing vanishes on the whole window";
  }
  for (const auto& k : kernel) {
    std::ostringstream os;
    bool first = true;
    for (size_t c = 0; c < cand.size(); ++c) {
      if (k[c] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << rat_str(k[c]) << "*" << names[c];
    }
    rep.kernel_basis.push_back(os.str());
  }
  return rep;
}

}  // namespace liecurrent
