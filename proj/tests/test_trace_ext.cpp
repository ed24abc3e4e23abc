#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liecurrent/trace_ext.hpp"

using namespace liecurrent;

namespace {

std::mt19937 rng(4242);

Rat rrat() {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return frac(num(rng), den(rng));
}

std::vector<Rat> random_alpha(int len) {
  std::vector<Rat> a(len);
  for (auto& x : a) x = rrat();
  return a;
}

TraceElem random_elem(const TraceExtension& ext, int lo, int hi) {
  TraceElem u = te_zero(ext);
  std::uniform_int_distribution<int> deg(lo, hi);
  for (int t = 0; t < 3; ++t) {
    int d = deg(rng);
    if (ext.kind == TraceExtension::Kind::Finite) {
      u = te_add(u, te_scale(te_xe_power(ext, d), rrat()));
      if (ext.n > 0) {
        std::uniform_int_distribution<int> fidx(0, ext.n - 1);
        u = te_add(u, te_scale(te_xf_power(ext, fidx(rng)), rrat()));
      }
    } else {
      int dd = d < 0 ? -d : d;
      u = te_add(u, te_scale(te_from_x(ext, LaurentPoly::monomial(Rat(1), dd)),
                             rrat()));
      u = te_add(u, te_scale(te_a(ext, dd), rrat()));
    }
  }
  return u;
}

}  // namespace

TEST_CASE("multiplication rules: truncation and the trivial extension") {
  auto a2 = TraceExtension::finite(2, {}, 6);
  auto xf = te_xf_power(a2, 1);
  auto xf2 = trace_mul(a2, xf, xf);
  CHECK(xf2.is_zero());  // x_f^2 = 0 when n = 2

  auto ainf = TraceExtension::infinite(8);
  auto a5 = te_a(ainf, 5);
  auto x3 = te_from_x(ainf, LaurentPoly::monomial(Rat(1), 3));
  auto p = trace_mul(ainf, a5, x3);
  CHECK(p.a_part.at(2) == Rat(1));  // a5 x^3 = a2
  auto a2e = te_a(ainf, 2);
  CHECK(trace_mul(ainf, a2e, x3).is_zero());  // a2 x^3 = 0

  for (int n : {0, 1, 2}) {
    auto ext = TraceExtension::finite(n, random_alpha(4), 6);
    auto one = te_one(ext);
    auto u = random_elem(ext, -3, 3);
    auto uu = trace_mul(ext, one, u);
    CHECK((te_add(uu, te_scale(u, Rat(-1)))).is_zero());
  }
}

TEST_CASE("trace tables: the defining values") {
  // A(0,0): t(x^-1) = 1
  auto a0 = TraceExtension::finite(0, {}, 6);
  CHECK(pair(a0, te_from_x(a0, LaurentPoly::monomial(Rat(1), -1)),
             te_one(a0)) == Rat(1));

  // A(1,alpha): t(e) = 1, t(f) = -1, pair(e,e) = t(e) = 1
  auto a1 = TraceExtension::finite(1, random_alpha(4), 6);
  auto e = te_xe_power(a1, 0);
  CHECK(trace(a1, e) == Rat(1));
  CHECK(pair(a1, e, e) == Rat(1));
  auto f = te_xf_power(a1, 0);
  CHECK(trace(a1, f) == Rat(-1));

  // A(2,alpha): t(x_f) = -1, t(f) = -alpha_0, t(x_f^2) = 0
  std::vector<Rat> al = {frac(3, 2)};  // alpha_0 = 3/2
  auto a2 = TraceExtension::finite(2, al, 6);
  auto xf = te_xf_power(a2, 1);
  CHECK(pair(a2, xf, te_one(a2)) == Rat(-1));
  CHECK(pair(a2, te_xf_power(a2, 0), te_one(a2)) == frac(-3, 2));
  CHECK(pair(a2, xf, xf) == Rat(0));

  // A(inf): t(a0) = 1, t(a_i) = 0
  auto ainf = TraceExtension::infinite(6);
  CHECK(trace(ainf, te_a(ainf, 0)) == Rat(1));
  CHECK(trace(ainf, te_a(ainf, 3)) == Rat(0));
}

TEST_CASE("t(x^i) = 0 for i >= 0 in the finite extensions") {
  for (int n : {0, 1, 2}) {
    auto ext = TraceExtension::finite(n, random_alpha(5), 8);
    for (int i = 0; i <= 6; ++i)
      CHECK(trace(ext, te_from_x(ext, LaurentPoly::monomial(Rat(1), i))) ==
            Rat(0));
  }
}

TEST_CASE("commutativity, associativity, trace symmetry on random input") {
  for (int n : {0, 1, 2}) {
    auto ext = TraceExtension::finite(n, random_alpha(8), 10);
    for (int t = 0; t < 10; ++t) {
      auto u = random_elem(ext, -2, 3);
      auto v = random_elem(ext, -2, 3);
      auto w = random_elem(ext, -2, 3);
      auto uv = trace_mul(ext, u, v);
      auto vu = trace_mul(ext, v, u);
      CHECK(te_add(uv, te_scale(vu, Rat(-1))).is_zero());
      auto l = trace_mul(ext, uv, w);
      auto r = trace_mul(ext, u, trace_mul(ext, v, w));
      CHECK(te_add(l, te_scale(r, Rat(-1))).is_zero());
      CHECK(pair(ext, u, v) == pair(ext, v, u));
    }
  }
  auto ainf = TraceExtension::infinite(8);
  for (int t = 0; t < 10; ++t) {
    auto u = random_elem(ainf, 0, 4);
    auto v = random_elem(ainf, 0, 4);
    CHECK(pair(ainf, u, v) == pair(ainf, v, u));
  }
}

TEST_CASE("depth bookkeeping fails loudly") {
  auto ext = TraceExtension::finite(0, random_alpha(3), 3);
  auto deep = te_from_x(ext, LaurentPoly::monomial(Rat(1), -5));
  CHECK_THROWS_AS(trace(ext, deep), DepthExceeded);
}

TEST_CASE("normalization: n = 0 identity and the 1/2 example") {
  // all alpha zero: phi = identity
  auto triv = TraceExtension::finite(0, {}, 8);
  auto res = normalize_automorphism(triv, 6);
  for (const auto& c : res.eta) CHECK(c == 0);
  CHECK(res.verified);

  // alpha_{-2} = 1: t(y^-2) = t(x^-2) - 2 xi_1 t(x^-1) = 0 gives xi_1 = 1/2
  auto ext = TraceExtension::finite(0, {Rat(1)}, 8);
  auto r = normalize_automorphism(ext, 4);
  CHECK(r.xi[0] == frac(1, 2));
  CHECK(r.verified);
}

TEST_CASE("normalization kills the traces for random alpha, n = 0,1,2") {
  for (int n : {0, 1, 2}) {
    std::vector<Rat> alpha = random_alpha(8);
    if (n == 2) alpha[0] = 0;  // alpha_0 = 0 is the A(2,.) precondition
    auto ext = TraceExtension::finite(n, alpha, 10);
    auto res = normalize_automorphism(ext, 6);
    CHECK(res.verified);
    CHECK(res.eta.size() == 6);
  }
}

TEST_CASE("A(2,alpha) with alpha_0 != 0 is obstructed") {
  auto ext = TraceExtension::finite(2, {Rat(1)}, 6);
  CHECK_THROWS_AS(normalize_automorphism(ext, 4), ObstructionNonzero);
}

TEST_CASE("window perp: polynomials only") {
  auto a00 = TraceExtension::finite(0, {}, 8);
  auto rep = verify_perp(a00, 6);
  CHECK(rep.pass);
  CHECK(rep.nondegenerate);
  CHECK(rep.kernel_dim == 7);  // x^0..x^6

  auto ainf = TraceExtension::infinite(8);
  auto rep2 = verify_perp(ainf, 6);
  CHECK(rep2.pass);
  CHECK(rep2.kernel_dim == 7);

  auto arand = TraceExtension::finite(1, random_alpha(8), 10);
  auto rep3 = verify_perp(arand, 5);
  CHECK(rep3.pass);
}

TEST_CASE("window perp negative control: zero trace fails") {
  auto fake = TraceExtension::finite(0, {}, 8);
  fake.zero_trace = true;
  auto rep = verify_perp(fake, 5);
  CHECK(!rep.pass);
  CHECK(!rep.nondegenerate);
}
