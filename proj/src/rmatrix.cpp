#include "liecurrent/rmatrix.hpp"

#include <sstream>

#include "liecurrent/parallel.hpp"

namespace liecurrent {

namespace {

MultiPoly mono(const Rat& c, int dx, int dy, int dz = 0) {
  return MultiPoly::monomial(c, {dx, dy, dz});
}

// y - x, z - x, z - y
MultiPoly d_xy() { return mono(Rat(1), 0, 1) - mono(Rat(1), 1, 0); }
MultiPoly d_xz() { return mono(Rat(1), 0, 0, 1) - mono(Rat(1), 1, 0); }
MultiPoly d_yz() { return mono(Rat(1), 0, 0, 1) - mono(Rat(1), 0, 1); }

MultiPoly pow_poly(const MultiPoly& p, int n) {
  MultiPoly r((Rat(1)));
  for (int i = 0; i < n; ++i) r = r * p;
  return r;
}

TensorElem twist_defect(const TensorElem& p) {
  // p(x,y) + p^{21}(y,x)
  return p + p.swap_legs().rename_vars({Var::y, Var::x, Var::z});
}

}  // namespace

RationalR RationalR::make(TensorElem num, int m, std::optional<TensorElem> p) {
  if (m < 0) throw Error("negative denominator power");
  if (p && !twist_defect(*p).is_zero())
    throw Error("twist is not skew: p(x,y) + p21(y,x) != 0");
  RationalR r;
  r.numerator = std::move(num);
  r.denom_power = m;
  r.twist = std::move(p);
  return r;
}

RationalR RationalR::with_twist_unchecked(TensorElem num, int m,
                                          TensorElem p) {
  RationalR r;
  r.numerator = std::move(num);
  r.denom_power = m;
  r.twist = std::move(p);
  return r;
}

TensorElem r_m_tensor(const Rat& m1, const Rat& m2, const LieAlgebraData& g) {
  TensorElem r(2);
  for (int p = 0; p < g.positive_count(); ++p) {
    r.add_const(g.e_index(p, true), g.e_index(p, false), m1);
    r.add_const(g.e_index(p, false), g.e_index(p, true), m2);
  }
  r += casimir_cartan_part(g) * ((m1 + m2) / 2);
  return r;
}

RationalR build_r(const CaseTag& tag, const LieAlgebraData& g) {
  TensorElem omega = casimir_omega(g);
  MultiPoly one(Rat(1));
  MultiPoly x = MultiPoly::variable(Var::x);
  MultiPoly y = MultiPoly::variable(Var::y);
  switch (tag.kind) {
    case CaseTag::Kind::A1: return RationalR::make(omega, 1);
    case CaseTag::Kind::A2:
      return RationalR::make(omega * (one - x) - drinfeld_jimbo_r(g) * d_xy(),
                             1);
    case CaseTag::Kind::A3:
      return RationalR::make(omega * ((x - one) * (y - one)), 1);
    case CaseTag::Kind::A4: {
      MultiPoly num = one - x * (tag.m1 + tag.m2) + x * y * (tag.m1 * tag.m2);
      return RationalR::make(
          omega * num - r_m_tensor(tag.m1, tag.m2, g) * d_xy(), 1);
    }
    case CaseTag::Kind::B1:
      return RationalR::make(omega * x + drinfeld_jimbo_r(g) * d_xy(), 1);
    case CaseTag::Kind::B2:
      return RationalR::make(
          omega * (x * (one - y)) + drinfeld_jimbo_r(g) * d_xy(), 1);
    case CaseTag::Kind::C: return RationalR::make(omega * (x * y), 1);
  }
  throw Error("unreachable case tag");
}

RationalR build_r_dj(const LieAlgebraData& g) {
  return RationalR::make(drinfeld_jimbo_r(g), 0);
}

RationalR build_r_four(int which, const LieAlgebraData& g) {
  TensorElem omega = casimir_omega(g);
  MultiPoly x = MultiPoly::variable(Var::x);
  MultiPoly y = MultiPoly::variable(Var::y);
  switch (which) {
    case 1: return RationalR::make(TensorElem(2), 0);
    case 2: return RationalR::make(-omega, 1);  // Omega/(x-y)
    case 3:
      return RationalR::make(-(omega * x) + drinfeld_jimbo_r(g) * d_xy(), 1);
    case 4: return RationalR::make(-(omega * (x * y)), 1);
  }
  throw Error("four-types index must be 1..4");
}

namespace {

// cleared 2-leg factors of r12, r13, r23 over D = ((y-x)(z-x)(z-y))^m
struct Cleared {
  TensorElem r12{2}, r13{2}, r23{2};
};

Cleared clear_denominators(const RationalR& r) {
  const int m = r.denom_power;
  const std::array<Var, 3> to_xz{Var::x, Var::z, Var::y};  // y -> z
  const std::array<Var, 3> to_yz{Var::y, Var::z, Var::x};  // x -> y, y -> z
  TensorElem num12 = r.numerator;
  TensorElem num13 = r.numerator.rename_vars(to_xz);
  TensorElem num23 = r.numerator.rename_vars(to_yz);
  MultiPoly D = pow_poly(d_xy() * d_xz() * d_yz(), m);
  Cleared c;
  c.r12 = num12 * pow_poly(d_xz() * d_yz(), m);
  c.r13 = num13 * pow_poly(d_xy() * d_yz(), m);
  c.r23 = num23 * pow_poly(d_xy() * d_xz(), m);
  if (r.twist) {
    c.r12 += *r.twist * D;
    c.r13 += r.twist->rename_vars(to_xz) * D;
    c.r23 += r.twist->rename_vars(to_yz) * D;
  }
  return c;
}

// commutators of r_ij placed into three legs
TensorElem comm_12_13(const TensorElem& a, const TensorElem& b,
                      const LieAlgebraData& g) {
  TensorElem out(3);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      MultiPoly prod = ca * cb;
      for (const auto& [m, sc] : g.bracket(ka[0], kb[0]))
        out.add({m, ka[1], kb[1]}, prod * sc);
    }
  return out;
}

TensorElem comm_12_23(const TensorElem& a, const TensorElem& b,
                      const LieAlgebraData& g) {
  TensorElem out(3);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      MultiPoly prod = ca * cb;
      for (const auto& [m, sc] : g.bracket(ka[1], kb[0]))
        out.add({ka[0], m, kb[1]}, prod * sc);
    }
  return out;
}

TensorElem comm_13_23(const TensorElem& a, const TensorElem& b,
                      const LieAlgebraData& g) {
  TensorElem out(3);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      MultiPoly prod = ca * cb;
      for (const auto& [m, sc] : g.bracket(ka[1], kb[1]))
        out.add({ka[0], kb[0], m}, prod * sc);
    }
  return out;
}

}  // namespace

CYBEReport cybe_check(const RationalR& r, const LieAlgebraData& g) {
  Cleared c = clear_denominators(r);
  // the three commutators are independent; accumulate in fixed order
  std::vector<TensorElem> parts(3, TensorElem(3));
  parallel_for(3, [&](int i) {
    if (i == 0) parts[0] = comm_12_13(c.r12, c.r13, g);
    if (i == 1) parts[1] = comm_12_23(c.r12, c.r23, g);
    if (i == 2) parts[2] = comm_13_23(c.r13, c.r23, g);
  });
  CYBEReport rep;
  rep.residual = parts[0];
  rep.residual += parts[1];
  rep.residual += parts[2];
  rep.is_zero = rep.residual.is_zero();
  if (!rep.is_zero) rep.witness = rep.residual.first_term_str(g);
  return rep;
}

SkewReport skew_check(const RationalR& r, const LieAlgebraData& g) {
  const int m = r.denom_power;
  // r(x,y) + r21(y,x) over (y-x)^m:
  //   num(x,y) + (-1)^m num21(y,x) + (p(x,y) + p21(y,x)) (y-x)^m
  TensorElem total =
      r.numerator +
      r.numerator.swap_legs().rename_vars({Var::y, Var::x, Var::z}) *
          Rat(m % 2 == 0 ? 1 : -1);
  if (r.twist) total += twist_defect(*r.twist) * pow_poly(d_xy(), m);
  SkewReport rep;
  rep.skew = total.is_zero();
  if (!rep.skew) rep.witness = total.first_term_str(g);
  return rep;
}

TensorElem cobracket(const RationalR& r, int basis_idx, int n,
                     const LieAlgebraData& g) {
  if (n < 0) throw Error("cobracket degree must be >= 0");
  MultiPoly xn = MultiPoly::variable(Var::x, n);
  MultiPoly yn = MultiPoly::variable(Var::y, n);
  TensorElem t = bracket_leg(r.numerator, 0, basis_idx, g) * xn +
                 bracket_leg(r.numerator, 1, basis_idx, g) * yn;
  MultiPoly den = pow_poly(d_xy(), r.denom_power);
  TensorElem out(2);
  for (const auto& [k, c] : t.terms()) {
    try {
      out.add(k, divide_exact(c, den));
    } catch (const NotDivisible& e) {
      throw NotPolynomial("cobracket coefficient not divisible by (y-x)^m",
                          e.remainder);
    }
  }
  if (r.twist)
    out += bracket_leg(*r.twist, 0, basis_idx, g) * xn +
           bracket_leg(*r.twist, 1, basis_idx, g) * yn;
  return out;
}

TensorElem cobracket_vec(const RationalR& r, const GVec& a, int n,
                         const LieAlgebraData& g) {
  TensorElem out(2);
  for (int i = 0; i < g.dim; ++i)
    if (a[i] != 0) out += cobracket(r, i, n, g) * a[i];
  return out;
}

namespace {

// action of a x^n on a 2-leg polynomial tensor (x on leg 1, y on leg 2)
TensorElem ad_action(int basis_idx, int n, const TensorElem& u,
                     const LieAlgebraData& g) {
  return bracket_leg(u, 0, basis_idx, g) * MultiPoly::variable(Var::x, n) +
         bracket_leg(u, 1, basis_idx, g) * MultiPoly::variable(Var::y, n);
}

}  // namespace

CheckReport cocycle_check(const RationalR& r, const LieAlgebraData& g,
                          int max_degree) {
  if (max_degree < 1) throw Error("cocycle_check needs max_degree >= 1");
  std::vector<std::vector<TensorElem>> delta(
      g.dim, std::vector<TensorElem>(2 * max_degree + 1, TensorElem(2)));
  for (int i = 0; i < g.dim; ++i)
    for (int n = 0; n <= 2 * max_degree; ++n)
      delta[i][n] = cobracket(r, i, n, g);
  return cocycle_identity_check(delta, g, max_degree);
}

CheckReport cocycle_identity_check(
    const std::vector<std::vector<TensorElem>>& delta,
    const LieAlgebraData& g, int max_degree) {
  CheckReport rep;
  CheckEntry entry{"cocycle", true, ""};
  for (int a = 0; a < g.dim && entry.pass; ++a)
    for (int b = 0; b < g.dim && entry.pass; ++b)
      for (int n = 0; n <= max_degree && entry.pass; ++n)
        for (int k = 0; k <= max_degree && entry.pass; ++k) {
          TensorElem lhs(2);
          for (const auto& [c, sc] : g.bracket(a, b))
            lhs += delta[c][n + k] * sc;
          TensorElem rhs =
              ad_action(a, n, delta[b][k], g) - ad_action(b, k, delta[a][n], g);
          if (!(lhs == rhs)) {
            entry.pass = false;
            std::ostringstream os;
            os << "cocycle identity fails for (" << g.labels[a] << " x^" << n
               << ", " << g.labels[b] << " x^" << k << ")";
            entry.witness = os.str();
          }
        }
  rep.checks.push_back(std::move(entry));
  return rep;
}

CheckReport degree_bound_check(const RationalR& r, const LieAlgebraData& g,
                               int n_max) {
  if (n_max < 1) throw Error("degree_bound_check needs n_max >= 1");
  CheckReport rep;
  CheckEntry entry{"degree_bound", true, ""};
  for (int i = 0; i < g.dim && entry.pass; ++i)
    for (int n = 1; n <= n_max && entry.pass; ++n) {
      TensorElem d = cobracket(r, i, n, g);
      for (const auto& [k, c] : d.terms()) {
        for (const auto& [e, coef] : c.terms()) {
          if (e[0] + e[1] + e[2] < n - 1) {
            entry.pass = false;
            std::ostringstream os;
            os << "delta(" << g.labels[i] << " x^" << n
               << ") has a term of total degree " << e[0] + e[1] + e[2];
            entry.witness = os.str();
          }
        }
      }
    }
  rep.checks.push_back(std::move(entry));
  return rep;
}

// ---------------------------------------------------------------------------
// Dual bases
// ---------------------------------------------------------------------------

namespace {

LaurentPoly lpm(std::initializer_list<std::pair<int, Rat>> terms) {
  LaurentPoly p;
  for (const auto& [d, c] : terms) p += LaurentPoly::monomial(c, d);
  return p;
}

// catalogued dual scalar for the monomial b x^n (factor 1/2 on h rows is
// applied by the caller)
LaurentPoly printed_dual_scalar(const CaseTag& tag, bool row_is_positive_e,
                                bool row_is_h, int n) {
  const LaurentPoly u = lpm({{-1, Rat(1)}});
  const LaurentPoly one(Rat(1));
  const LaurentPoly um1 = u - one;
  switch (tag.kind) {
    case CaseTag::Kind::A1: return lpm({{-n - 1, Rat(1)}});
    case CaseTag::Kind::A2: {
      if (n == 0) {
        if (row_is_h) return u - LaurentPoly(frac(1, 2));
        // dual of e_a x^0 is (u-1) e_{-a}; dual of e_{-a} x^0 is u e_a
        return row_is_positive_e ? um1 : u;
      }
      return um1 * lpm({{-n, Rat(1)}});
    }
    case CaseTag::Kind::A3: {
      if (n == 0) return um1;
      return um1 * um1 * lpm({{-n + 1, Rat(1)}});  // (1-y)^2 y^{-n-1}
    }
    case CaseTag::Kind::A4: {
      LaurentPoly f1 = u - LaurentPoly(tag.m1);
      LaurentPoly f2 = u - LaurentPoly(tag.m2);
      if (n == 0) {
        if (row_is_h) return u - LaurentPoly((tag.m1 + tag.m2) / 2);
        return row_is_positive_e ? f2 : f1;
      }
      return f1 * f2 * lpm({{-n + 1, Rat(1)}});
    }
    default: throw Error("dual bases are catalogued for the A cases");
  }
}

}  // namespace

bool DualBasisReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

DualBasisReport dual_basis_verify(const CaseTag& tag, const LieAlgebraData& g,
                                  int depth) {
  if (!tag.is_a_case())
    throw Error("dual_basis_verify applies to the A cases");
  if (depth < 1) throw Error("depth must be >= 1");
  DualBasisReport rep;
  FormSpec form{tag};
  auto w = build_W(tag, g);
  Window win{-(depth + 4), 1};

  std::vector<DoubleElem> wbasis = w.exceptional;
  for (auto& t : tail_window_basis(w, g, win)) wbasis.push_back(std::move(t));

  struct Row {
    int basis;
    int deg;
  };
  std::vector<Row> rows;
  for (int n = 0; n <= depth; ++n)
    for (int i = 0; i < g.dim; ++i) rows.push_back({i, n});

  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(wbasis.size()));
  for (size_t rr = 0; rr < rows.size(); ++rr) {
    auto mono = DoubleElem::loop_monomial(
        tag, g, rows[rr].basis, LaurentPoly::monomial(Rat(1), rows[rr].deg));
    for (size_t cc = 0; cc < wbasis.size(); ++cc)
      m.at(static_cast<int>(rr), static_cast<int>(cc)) =
          canonical_pair(mono, wbasis[cc], form, g);
  }
  if (m.rank() != static_cast<int>(rows.size()))
    throw SingularGram("monomial/W pairing matrix is rank-deficient");

  // Gram-inversion duals: solve M c = unit row for each monomial
  std::vector<DoubleElem> duals;
  for (size_t rr = 0; rr < rows.size(); ++rr) {
    RatVec unit(rows.size(), Rat(0));
    unit[rr] = 1;
    auto sol = m.solve(unit);
    if (!sol) throw SingularGram("no dual for a monomial row");
    DoubleElem d = DoubleElem::zero(tag, g);
    for (size_t cc = 0; cc < wbasis.size(); ++cc)
      if ((*sol)[cc] != 0) d = d + wbasis[cc] * (*sol)[cc];
    duals.push_back(std::move(d));
  }

  // (ii) biorthonormality of the computed duals
  {
    CheckEntry c{"biorthonormality", true, ""};
    for (size_t rr = 0; rr < rows.size() && c.pass; ++rr) {
      auto mono = DoubleElem::loop_monomial(
          tag, g, rows[rr].basis, LaurentPoly::monomial(Rat(1), rows[rr].deg));
      for (size_t ss = 0; ss < rows.size() && c.pass; ++ss) {
        Rat v = canonical_pair(mono, duals[ss], form, g);
        if (v != (rr == ss ? Rat(1) : Rat(0))) {
          c.pass = false;
          c.witness = "pairing (" + std::to_string(rr) + "," +
                      std::to_string(ss) + ") = " + rat_str(v);
        }
      }
    }
    rep.biorthonormal = c.pass;
    rep.checks.push_back(std::move(c));
  }

  // (iii) catalogued families: e entries should be exact duals and members
  {
    CheckEntry ce{"printed_e_entries", true, ""};
    CheckEntry ch{"printed_h_entries", true, ""};
    bool h_factor_set = false;
    for (const auto& row : rows) {
      bool is_h = g.is_cartan(row.basis);
      bool is_pos = !is_h && row.basis < g.positive_count();
      int dual_basis;
      if (is_h)
        dual_basis = row.basis;
      else
        dual_basis = is_pos ? row.basis + g.positive_count()
                            : row.basis - g.positive_count();
      LaurentPoly scalar = printed_dual_scalar(tag, is_pos, is_h, row.deg);
      if (is_h) scalar = scalar * frac(1, 2);
      auto cand = DoubleElem::loop_monomial(tag, g, dual_basis, scalar);
      CheckEntry& target = is_h ? ch : ce;
      if (!target.pass) continue;
      if (!pattern_member(w, cand, g)) {
        target.pass = false;
        target.witness = "candidate " + cand.str(g) + " is not in W";
        continue;
      }
      for (const auto& other : rows) {
        auto mono = DoubleElem::loop_monomial(
            tag, g, other.basis, LaurentPoly::monomial(Rat(1), other.deg));
        Rat v = canonical_pair(mono, cand, form, g);
        Rat expect =
            (other.basis == row.basis && other.deg == row.deg) ? 1 : 0;
        if (v != expect) {
          if (is_h && other.basis == row.basis && other.deg == row.deg &&
              !h_factor_set) {
            rep.h_factor = rat_str(v);
            h_factor_set = true;
          }
          target.pass = false;
          if (target.witness.empty())
            target.witness = "pair(" + g.labels[other.basis] + " x^" +
                             std::to_string(other.deg) + ", " + cand.str(g) +
                             ") = " + rat_str(v);
        }
      }
    }
    rep.e_entries_match = ce.pass;
    rep.h_entries_match = ch.pass;
    if (!h_factor_set && ch.pass) rep.h_factor = "1";
    rep.checks.push_back(std::move(ce));
    rep.checks.push_back(std::move(ch));
  }
  return rep;
}

}  // namespace liecurrent
