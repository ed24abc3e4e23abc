#include "liecurrent/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace liecurrent {

AlgebraType algebra_type_from_name(const std::string& name) {
  if (name == "sl2" || name == "A1") return AlgebraType::sl2;
  if (name == "sl3" || name == "A2") return AlgebraType::sl3;
  if (name == "so5" || name == "B2" || name == "sp4") return AlgebraType::so5;
  if (name == "g2" || name == "G2") return AlgebraType::g2;
  throw UnsupportedType("unsupported algebra: " + name);
}

std::string algebra_type_name(AlgebraType t) {
  switch (t) {
    case AlgebraType::sl2: return "sl2";
    case AlgebraType::sl3: return "sl3";
    case AlgebraType::so5: return "so5";
    case AlgebraType::g2: return "g2";
  }
  return "?";
}

int RootSystemData::height(const RootVec& r) const {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

std::optional<int> RootSystemData::positive_index(const RootVec& r) const {
  for (size_t i = 0; i < positive_roots.size(); ++i)
    if (positive_roots[i] == r) return static_cast<int>(i);
  return std::nullopt;
}

GVec LieAlgebraData::bracket_vec(const GVec& a, const GVec& b) const {
  GVec out(dim, Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      Rat f = a[i] * b[j];
      for (const auto& [k, c] : bracket_table[i][j]) out[k] += f * c;
    }
  }
  return out;
}

Rat LieAlgebraData::form_vec(const GVec& a, const GVec& b) const {
  Rat s(0);
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j)
      if (b[j] != 0 && normalized.at(i, j) != 0)
        s += a[i] * b[j] * normalized.at(i, j);
  }
  return s;
}

int LieAlgebraData::alpha_coefficient(int basis_idx, int vertex) const {
  return grades[basis_idx][vertex - 1];
}

Rat LieAlgebraData::root_value_on_h(int pos_root_idx, bool negative,
                                    int vertex) const {
  int e = e_index(pos_root_idx, negative);
  int h = h_index(vertex);
  for (const auto& [k, c] : bracket_table[h][e])
    if (k == e) return c;
  return Rat(0);
}

std::vector<GVec> LieAlgebraData::cartan_dual_basis() const {
  int r = rank();
  RatMatrix gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gram.at(i, j) = normalized.at(h_index(i + 1), h_index(j + 1));
  auto inv = gram.inverse();
  if (!inv) throw SingularGram("Cartan Gram matrix is singular");
  std::vector<GVec> dual;
  for (int i = 0; i < r; ++i) {
    GVec v(dim, Rat(0));
    for (int j = 0; j < r; ++j) v[h_index(j + 1)] = inv->at(j, i);
    dual.push_back(std::move(v));
  }
  return dual;
}

std::vector<GVec> LieAlgebraData::dual_basis() const {
  auto inv = normalized.inverse();
  if (!inv) throw SingularGram("normalized form is singular");
  std::vector<GVec> dual;
  for (int i = 0; i < dim; ++i) {
    GVec v(dim, Rat(0));
    for (int j = 0; j < dim; ++j) v[j] = inv->at(j, i);
    dual.push_back(std::move(v));
  }
  return dual;
}

GVec LieAlgebraData::basis_vec(int i) const {
  GVec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

std::string LieAlgebraData::element_str(const GVec& v) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim; ++i) {
    if (v[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (v[i] != 1) os << rat_str(v[i]) << "*";
    os << labels[i];
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Matrix realizations
// ---------------------------------------------------------------------------

namespace {

using Mat = std::vector<RatVec>;

Mat zero_mat(int n) { return Mat(n, RatVec(n, Rat(0))); }

Mat unit_mat(int n, int i, int j) {
  Mat m = zero_mat(n);
  m[i][j] = 1;
  return m;
}

Mat mat_comm(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat c = zero_mat(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
      if (b[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] -= b[i][k] * a[k][j];
    }
  return c;
}

RatVec flatten(const Mat& m) {
  RatVec v;
  v.reserve(m.size() * m.size());
  for (const auto& row : m)
    for (const auto& x : row) v.push_back(x);
  return v;
}

struct RepSpec {
  int n = 0;                  // matrices are n x n
  std::vector<Mat> spanning;  // exact basis of the algebra
  std::vector<int> cartan;    // indices into `spanning`
};

RepSpec sl2_rep() {
  RepSpec s;
  s.n = 2;
  s.spanning.push_back(unit_mat(2, 0, 1));  // e
  s.spanning.push_back(unit_mat(2, 1, 0));  // f
  Mat h = zero_mat(2);
  h[0][0] = 1;
  h[1][1] = -1;
  s.spanning.push_back(h);
  s.cartan = {2};
  return s;
}

RepSpec sl3_rep() {
  RepSpec s;
  s.n = 3;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) s.spanning.push_back(unit_mat(3, i, j));
  Mat h1 = zero_mat(3), h2 = zero_mat(3);
  h1[0][0] = 1;
  h1[1][1] = -1;
  h2[1][1] = 1;
  h2[2][2] = -1;
  s.spanning.push_back(h1);
  s.spanning.push_back(h2);
  s.cartan = {6, 7};
  return s;
}

// Split so(5): X^T G = -G X with G the antidiagonal identity.
RepSpec so5_rep() {
  const int n = 5;
  RepSpec s;
  s.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int pi = n - 1 - j, pj = n - 1 - i;  // partner cell
      if (std::pair(i, j) >= std::pair(pi, pj)) continue;  // one per orbit
      Mat m = zero_mat(n);
      m[i][j] = 1;
      m[pi][pj] -= 1;
      s.spanning.push_back(std::move(m));
      if (i == j) s.cartan.push_back(static_cast<int>(s.spanning.size()) - 1);
    }
  return s;
}

// Split octonions as Zorn vector matrices: (a, v | w, b) with a,b scalars
// and v,w vectors in Q^3. Basis order: 1_a, v1..v3, w1..w3, 1_b.
std::array<std::array<std::array<int, 8>, 8>, 8> zorn_table() {
  auto cross = [](int i, int j) {  // e_i x e_j = eps * e_k
    if (i == j) return std::pair(-1, 0);
    int k = 3 - i - j;
    int eps = ((j - i + 3) % 3 == 1) ? 1 : -1;
    return std::pair(k, eps);
  };
  std::array<std::array<std::array<int, 8>, 8>, 8> t{};
  auto mul = [&](int p, int q, int r, int c) { t[p][q][r] += c; };
  // scalar units
  mul(0, 0, 0, 1);
  mul(7, 7, 7, 1);
  for (int i = 0; i < 3; ++i) {
    mul(0, 1 + i, 1 + i, 1);  // a * v = a v
    mul(1 + i, 7, 1 + i, 1);  // v * b = b v
    mul(7, 4 + i, 4 + i, 1);  // b * w = b w
    mul(4 + i, 0, 4 + i, 1);  // w * a = a w
    mul(1 + i, 4 + i, 0, 1);  // v . w -> a-slot
    mul(4 + i, 1 + i, 7, 1);  // w . v -> b-slot
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto [k, eps] = cross(i, j);
      if (eps == 0) continue;
      mul(1 + i, 1 + j, 4 + k, eps);   // v x v' -> w-slot
      mul(4 + i, 4 + j, 1 + k, -eps);  // w x w' -> -v-slot
    }
  return t;
}

// g2 = Der(split octonions), computed as the exact kernel of the
// derivation equations. The Cartan is the diagonal torus acting on the
// v/w slots with weights (l1,l2,l3), sum zero.
RepSpec g2_rep() {
  auto table = zorn_table();
  const int n = 8;
  // unknowns D[l][k] (column-major index l*8+k? use l*n+k meaning D_{l,k})
  // equation per (i,j,l): sum_k table[i][j][k] D[l][k]
  //   - sum_p D[p][i] table[p][j][l] - sum_q D[q][j] table[i][q][l] = 0
  RatMatrix sys(n * n * n, n * n);
  auto uidx = [n](int l, int k) { return l * n + k; };
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l, ++row) {
        for (int k = 0; k < n; ++k) {
          if (table[i][j][k] != 0)
            sys.at(row, uidx(l, k)) += table[i][j][k];
          if (table[k][j][l] != 0)
            sys.at(row, uidx(k, i)) -= table[k][j][l];
          if (table[i][k][l] != 0)
            sys.at(row, uidx(k, j)) -= table[i][k][l];
        }
      }
  auto ker = sys.nullspace();
  if (ker.size() != 14)
    throw Error("split octonion derivation algebra has wrong dimension");
  RepSpec s;
  s.n = n;
  for (const auto& v : ker) {
    Mat m = zero_mat(n);
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k) m[l][k] = v[uidx(l, k)];
    s.spanning.push_back(std::move(m));
  }
  // torus derivations diag(0; l1,l2,l3; -l1,-l2,-l3; 0)
  auto torus = [&](int l1, int l2, int l3) {
    Mat m = zero_mat(n);
    m[1][1] = l1;
    m[2][2] = l2;
    m[3][3] = l3;
    m[4][4] = -l1;
    m[5][5] = -l2;
    m[6][6] = -l3;
    return m;
  };
  s.spanning.push_back(torus(1, -1, 0));
  s.cartan.push_back(static_cast<int>(s.spanning.size()) - 1);
  s.spanning.push_back(torus(0, 1, -1));
  s.cartan.push_back(static_cast<int>(s.spanning.size()) - 1);
  // the two torus elements are inside Der; drop dependent kernel vectors
  return s;
}

// Expresses flattened matrices in a fixed column basis: x = P v with a
// consistency check, P = (B^T B)^{-1} B^T.
struct CoordSolver {
  RatMatrix basis;   // n^2 x d
  RatMatrix pseudo;  // d x n^2

  explicit CoordSolver(const std::vector<Mat>& mats) {
    int d = static_cast<int>(mats.size());
    int nn = static_cast<int>(mats[0].size() * mats[0].size());
    basis = RatMatrix(nn, d);
    for (int c = 0; c < d; ++c) {
      RatVec f = flatten(mats[c]);
      for (int r = 0; r < nn; ++r) basis.at(r, c) = f[r];
    }
    RatMatrix bt = basis.transposed();
    auto gram_inv = (bt * basis).inverse();
    if (!gram_inv) throw Error("spanning matrices are linearly dependent");
    pseudo = *gram_inv * bt;
  }

  RatVec coords(const Mat& m) const {
    RatVec f = flatten(m);
    RatVec x = pseudo.apply(f);
    RatVec back = basis.apply(x);
    if (back != f) throw Error("element not in the spanned algebra");
    return x;
  }
};

struct WeightSpace {
  int a = 0, b = 0;  // eigenvalues under the chosen torus pair
  RatVec coords;     // in the spanning basis
};

RatVec scale_first_one(RatVec v) {
  for (auto& x : v)
    if (x != 0) {
      Rat inv = 1 / x;
      for (auto& y : v) y *= inv;
      return v;
    }
  return v;
}

}  // namespace

LieAlgebraData build_algebra(AlgebraType type) {
  RepSpec rep;
  switch (type) {
    case AlgebraType::sl2: rep = sl2_rep(); break;
    case AlgebraType::sl3: rep = sl3_rep(); break;
    case AlgebraType::so5: rep = so5_rep(); break;
    case AlgebraType::g2: rep = g2_rep(); break;
    default: throw UnsupportedType("unsupported algebra type");
  }
  // g2_rep appends the torus to the kernel basis, making the list
  // dependent; reduce to an independent spanning list keeping the torus.
  if (type == AlgebraType::g2) {
    std::vector<Mat> keep;
    std::vector<int> cartan;
    RatMatrix probe(0, 0);
    int nn = rep.n * rep.n;
    std::vector<RatVec> rowsf;
    auto try_add = [&](const Mat& m, bool is_cartan) {
      RatVec f = flatten(m);
      std::vector<RatVec> cand = rowsf;
      cand.push_back(f);
      RatMatrix mm(static_cast<int>(cand.size()), nn);
      for (size_t r = 0; r < cand.size(); ++r)
        for (int c = 0; c < nn; ++c) mm.at(static_cast<int>(r), c) = cand[r][c];
      if (mm.rank() != static_cast<int>(cand.size())) return;
      rowsf = std::move(cand);
      keep.push_back(m);
      if (is_cartan) cartan.push_back(static_cast<int>(keep.size()) - 1);
    };
    // torus first so it survives, then fill from the kernel basis
    try_add(rep.spanning[rep.cartan[0]], true);
    try_add(rep.spanning[rep.cartan[1]], true);
    for (int i = 0; i + 2 < static_cast<int>(rep.spanning.size()); ++i)
      try_add(rep.spanning[i], false);
    rep.spanning = std::move(keep);
    rep.cartan = std::move(cartan);
  }

  const int d = static_cast<int>(rep.spanning.size());
  const int rank = static_cast<int>(rep.cartan.size());
  CoordSolver solver(rep.spanning);

  // ad action of the two torus generators on spanning coordinates
  auto ad_of = [&](const Mat& h) {
    RatMatrix m(d, d);
    for (int c = 0; c < d; ++c) {
      RatVec col = solver.coords(mat_comm(h, rep.spanning[c]));
      for (int r = 0; r < d; ++r) m.at(r, c) = col[r];
    }
    return m;
  };
  RatMatrix ad1 = ad_of(rep.spanning[rep.cartan[0]]);
  RatMatrix ad2 = rank > 1 ? ad_of(rep.spanning[rep.cartan[1]])
                           : RatMatrix(d, d);

  // simultaneous eigenspaces over integer candidates
  std::vector<WeightSpace> roots;
  int zero_dim = 0;
  int covered = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      RatMatrix sys(2 * d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          sys.at(r, c) = ad1.at(r, c) - (r == c ? Rat(a) : Rat(0));
          sys.at(d + r, c) = ad2.at(r, c) - (r == c ? Rat(b) : Rat(0));
        }
      auto ker = sys.nullspace();
      if (ker.empty()) continue;
      covered += static_cast<int>(ker.size());
      if (a == 0 && b == 0) {
        zero_dim = static_cast<int>(ker.size());
        continue;
      }
      if (ker.size() != 1) throw Error("root space is not one-dimensional");
      roots.push_back({a, b, scale_first_one(ker[0])});
    }
  if (covered != d || zero_dim != rank)
    throw Error("root decomposition failed for " + algebra_type_name(type));

  // positive system: 10a + b > 0 never vanishes on the candidate grid
  auto phi = [](const WeightSpace& w) { return 10 * w.a + w.b; };
  std::vector<WeightSpace> pos;
  for (const auto& w : roots)
    if (phi(w) > 0) pos.push_back(w);
  std::sort(pos.begin(), pos.end(), [&](const auto& l, const auto& r) {
    return std::tuple(phi(l), l.a, l.b) < std::tuple(phi(r), r.a, r.b);
  });

  // simple roots: positive roots that are not sums of two positive roots
  std::vector<WeightSpace> simple;
  for (const auto& w : pos) {
    bool is_sum = false;
    for (const auto& u : pos)
      for (const auto& v : pos)
        if (u.a + v.a == w.a && u.b + v.b == w.b) is_sum = true;
    if (!is_sum) simple.push_back(w);
  }
  std::sort(simple.begin(), simple.end(), [](const auto& l, const auto& r) {
    return std::pair(l.a, l.b) < std::pair(r.a, r.b);
  });
  if (static_cast<int>(simple.size()) != rank)
    throw Error("wrong number of simple roots");

  // integer coordinates of each positive root over the simple roots
  auto in_simple_coords = [&](const WeightSpace& w) {
    RatMatrix m(2, rank);
    for (int j = 0; j < rank; ++j) {
      m.at(0, j) = simple[j].a;
      m.at(1, j) = simple[j].b;
    }
    auto sol = m.solve({Rat(w.a), Rat(w.b)});
    if (!sol) throw Error("root outside the simple-root lattice");
    RootVec rv(rank);
    for (int j = 0; j < rank; ++j) {
      if ((*sol)[j].get_den() != 1)
        throw Error("non-integer root coordinate");
      rv[j] = static_cast<int>((*sol)[j].get_num().get_si());
    }
    return rv;
  };

  struct PosRoot {
    RootVec coords;
    WeightSpace w;
  };
  std::vector<PosRoot> proots;
  for (const auto& w : pos) proots.push_back({in_simple_coords(w), w});
  std::sort(proots.begin(), proots.end(), [](const auto& l, const auto& r) {
    int hl = 0, hr = 0;
    for (int c : l.coords) hl += c;
    for (int c : r.coords) hr += c;
    return std::tuple(hl, l.coords) < std::tuple(hr, r.coords);
  });
  const int P = static_cast<int>(proots.size());

  // locate the negative-root eigenvectors
  auto find_weight = [&](int a, int b) -> const WeightSpace& {
    for (const auto& w : roots)
      if (w.a == a && w.b == b) return w;
    throw Error("missing opposite root");
  };

  // preliminary basis: v_b, v_{-b}, torus
  std::vector<Mat> prelim;
  auto mat_from_coords = [&](const RatVec& coords) {
    Mat m = zero_mat(rep.n);
    for (int i = 0; i < d; ++i) {
      if (coords[i] == 0) continue;
      for (int r = 0; r < rep.n; ++r)
        for (int c = 0; c < rep.n; ++c)
          m[r][c] += coords[i] * rep.spanning[i][r][c];
    }
    return m;
  };
  for (const auto& pr : proots) prelim.push_back(mat_from_coords(pr.w.coords));
  for (const auto& pr : proots)
    prelim.push_back(
        mat_from_coords(find_weight(-pr.w.a, -pr.w.b).coords));
  for (int i = 0; i < rank; ++i)
    prelim.push_back(rep.spanning[rep.cartan[i]]);

  // structure constants of the preliminary basis, then its Killing form
  CoordSolver psolver(prelim);
  auto prelim_bracket = [&](int i, int j) {
    return psolver.coords(mat_comm(prelim[i], prelim[j]));
  };
  std::vector<std::vector<RatVec>> pstruct(d, std::vector<RatVec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) pstruct[i][j] = prelim_bracket(i, j);
  auto killing_of = [&](const std::vector<std::vector<RatVec>>& st) {
    RatMatrix k(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        Rat s(0);
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) s += st[i][a][b] * st[j][b][a];
        k.at(i, j) = s;
        k.at(j, i) = s;
      }
    return k;
  };
  RatMatrix pkill = killing_of(pstruct);

  // rescale e_{-b} so that K(e_b, e_{-b}) = 1; the Cartan basis becomes
  // h_i = [e_{a_i}, e_{-a_i}]
  std::vector<Mat> final_basis;
  for (int i = 0; i < P; ++i) final_basis.push_back(prelim[i]);
  for (int i = 0; i < P; ++i) {
    Rat kappa = pkill.at(i, P + i);
    if (kappa == 0) throw Error("degenerate root pairing");
    Mat m = prelim[P + i];
    Rat inv = 1 / kappa;
    for (auto& row : m)
      for (auto& x : row) x *= inv;
    final_basis.push_back(std::move(m));
  }
  std::vector<int> simple_pos_idx;
  for (int j = 0; j < rank; ++j) {
    RootVec unit(rank, 0);
    unit[j] = 1;
    for (int i = 0; i < P; ++i)
      if (proots[i].coords == unit) simple_pos_idx.push_back(i);
  }
  if (static_cast<int>(simple_pos_idx.size()) != rank)
    throw Error("simple roots not found among positive roots");
  for (int j = 0; j < rank; ++j) {
    int i = simple_pos_idx[j];
    final_basis.push_back(mat_comm(final_basis[i], final_basis[P + i]));
  }

  LieAlgebraData g;
  g.type = type;
  g.dim = d;

  CoordSolver fsolver(final_basis);
  g.bracket_table.assign(d, std::vector<std::vector<std::pair<int, Rat>>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      RatVec c = fsolver.coords(mat_comm(final_basis[i], final_basis[j]));
      for (int k = 0; k < d; ++k)
        if (c[k] != 0) g.bracket_table[i][j].push_back({k, c[k]});
    }

  std::vector<std::vector<RatVec>> fstruct(d, std::vector<RatVec>(d, RatVec(d, Rat(0))));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : g.bracket_table[i][j]) fstruct[i][j][k] = c;
  g.killing = killing_of(fstruct);
  g.normalized = g.killing;
  for (int i = 0; i < P; ++i)
    if (g.killing.at(i, P + i) != 1)
      throw Error("Killing normalization failed");

  // root system bookkeeping
  g.root_system.rank = rank;
  for (const auto& pr : proots) g.root_system.positive_roots.push_back(pr.coords);
  g.root_system.highest_root = proots.back().coords;
  g.root_system.marks.assign(rank + 1, 1);
  for (int j = 0; j < rank; ++j)
    g.root_system.marks[j + 1] = g.root_system.highest_root[j];

  // labels and grades
  auto root_label = [&](const RootVec& r, bool neg) {
    std::ostringstream os;
    os << "e[";
    for (int j = 0; j < rank; ++j) {
      if (j) os << ",";
      os << (neg ? -r[j] : r[j]);
    }
    os << "]";
    return os.str();
  };
  for (int i = 0; i < P; ++i) {
    g.labels.push_back(root_label(proots[i].coords, false));
    g.grades.push_back(proots[i].coords);
  }
  for (int i = 0; i < P; ++i) {
    g.labels.push_back(root_label(proots[i].coords, true));
    RootVec neg = proots[i].coords;
    for (int& c : neg) c = -c;
    g.grades.push_back(neg);
  }
  for (int i = 1; i <= rank; ++i) {
    g.labels.push_back("h[" + std::to_string(i) + "]");
    g.grades.push_back(RootVec(rank, 0));
  }
  // inner products on the root lattice from the Killing form on the Cartan
  RatMatrix hgram(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      hgram.at(i, j) = g.killing.at(g.h_index(i + 1), g.h_index(j + 1));
  auto hgram_inv = hgram.inverse();
  if (!hgram_inv) throw SingularGram("Cartan Killing block singular");
  auto root_values = [&](const RootVec& r) {
    // beta(h_i) as exact rationals from the structure constants of any
    // representative; for the lattice we use linearity over simple roots
    RatVec vals(rank, Rat(0));
    for (int i = 1; i <= rank; ++i) {
      Rat v(0);
      for (int j = 0; j < rank; ++j) {
        int sp = simple_pos_idx[j];
        // alpha_j(h_i):
        Rat av = g.root_value_on_h(sp, false, i);
        v += Rat(r[j]) * av;
      }
      vals[i - 1] = v;
    }
    return vals;
  };
  auto pairing = [&](const RootVec& r1, const RootVec& r2) {
    RatVec v1 = root_values(r1), v2 = root_values(r2);
    RatVec t1 = hgram_inv->apply(v1);
    Rat s(0);
    for (int i = 0; i < rank; ++i) s += t1[i] * v2[i];
    return s;
  };
  std::vector<RootVec> verts;
  RootVec a0 = g.root_system.highest_root;
  for (int& c : a0) c = -c;
  verts.push_back(a0);
  for (int j = 0; j < rank; ++j) {
    RootVec unit(rank, 0);
    unit[j] = 1;
    verts.push_back(unit);
  }
  g.root_system.extended_gram = RatMatrix(rank + 1, rank + 1);
  for (int i = 0; i <= rank; ++i)
    for (int j = 0; j <= rank; ++j)
      g.root_system.extended_gram.at(i, j) = pairing(verts[i], verts[j]);

  g.root_system.cartan_matrix.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat a = 2 * g.root_system.extended_gram.at(i + 1, j + 1) /
              g.root_system.extended_gram.at(j + 1, j + 1);
      if (a.get_den() != 1) throw Error("non-integer Cartan matrix entry");
      g.root_system.cartan_matrix[i][j] =
          static_cast<int>(a.get_num().get_si());
    }

  return g;
}

BasisMap cartan_involution(const LieAlgebraData& g) {
  const int P = g.positive_count();
  const int d = g.dim;
  std::vector<GVec> img(d);
  std::vector<bool> known(d, false);

  auto set_img = [&](int i, GVec v) {
    img[i] = std::move(v);
    known[i] = true;
  };
  // Cartan: h -> -h
  for (int i = 1; i <= g.rank(); ++i) {
    GVec v(d, Rat(0));
    v[g.h_index(i)] = -1;
    set_img(g.h_index(i), std::move(v));
  }
  // simple roots: e_{a_i} <-> e_{-a_i}
  for (int r = 0; r < P; ++r) {
    if (g.root_system.height(g.root_system.positive_roots[r]) != 1) continue;
    set_img(g.e_index(r, false), g.basis_vec(g.e_index(r, true)));
    set_img(g.e_index(r, true), g.basis_vec(g.e_index(r, false)));
  }
  // extend along root strings by increasing height
  int max_h = g.root_system.height(g.root_system.highest_root);
  for (int h = 2; h <= max_h; ++h) {
    for (int r = 0; r < P; ++r) {
      if (g.root_system.height(g.root_system.positive_roots[r]) != h) continue;
      // find a simple root s and positive root q with beta = alpha_s + q
      bool done = false;
      for (int s = 0; s < P && !done; ++s) {
        if (g.root_system.height(g.root_system.positive_roots[s]) != 1)
          continue;
        RootVec diff = g.root_system.positive_roots[r];
        for (int j = 0; j < g.rank(); ++j)
          diff[j] -= g.root_system.positive_roots[s][j];
        auto qi = g.root_system.positive_index(diff);
        if (!qi) continue;
        int es = g.e_index(s, false), eq = g.e_index(*qi, false);
        int eb = g.e_index(r, false);
        if (!known[es] || !known[eq]) continue;
        // [e_s, e_q] = N e_b
        Rat N(0);
        for (const auto& [k, c] : g.bracket(es, eq))
          if (k == eb) N = c;
        if (N == 0) continue;
        GVec v = g.bracket_vec(img[es], img[eq]);
        for (auto& x : v) x /= N;
        set_img(eb, std::move(v));
        // and the mirror: [e_{-s}, e_{-q}] = N' e_{-b}
        int fs = g.e_index(s, true), fq = g.e_index(*qi, true);
        int fb = g.e_index(r, true);
        Rat Np(0);
        for (const auto& [k, c] : g.bracket(fs, fq))
          if (k == fb) Np = c;
        if (Np == 0) throw ExtensionFailure("missing negative root string");
        GVec w = g.bracket_vec(img[fs], img[fq]);
        for (auto& x : w) x /= Np;
        set_img(fb, std::move(w));
        done = true;
      }
      if (!done)
        throw ExtensionFailure("root not reachable from simple roots");
    }
  }

  BasisMap sigma{std::move(img)};
  // verify the multiplicative extension really is an automorphism
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      GVec lhs = sigma.apply(g.bracket_vec(g.basis_vec(i), g.basis_vec(j)));
      GVec rhs = g.bracket_vec(sigma.images[i], sigma.images[j]);
      if (lhs != rhs)
        throw ExtensionFailure("Cartan involution failed on " + g.labels[i] +
                               ", " + g.labels[j]);
    }
  return sigma;
}

GVec BasisMap::apply(const GVec& v) const {
  GVec out(v.size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t k = 0; k < out.size(); ++k) out[k] += v[i] * images[i][k];
  }
  return out;
}

}  // namespace liecurrent
