/*
  root_datum.cpp
*/

#include "hecke/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace hecke {

using std::int64_t;

int64_t dot(const Vec& a, const Vec& b) {
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(int64_t c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------
// small exact integer matrix utilities (Smith / Hermite forms)

namespace {

using Mat = std::vector<Vec>; // rows

Mat identity_mat(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Smith normal form of a (rows x cols) matrix: U*A*V = D with U, V
// unimodular.  A is destroyed; returns the diagonal of D, padded with
// zeros to min(rows, cols).
std::vector<int64_t> smith(Mat a, Mat* u_out, Mat* v_out) {
  int rows = (int)a.size();
  int cols = rows ? (int)a[0].size() : 0;
  Mat u = identity_mat(rows), v = identity_mat(cols);
  auto row_op = [&](int i, int j, int64_t c) { // row_i += c*row_j
    for (int k = 0; k < cols; ++k) a[i][k] += c * a[j][k];
    for (int k = 0; k < rows; ++k) u[i][k] += c * u[j][k];
  };
  auto col_op = [&](int i, int j, int64_t c) { // col_i += c*col_j
    for (int k = 0; k < rows; ++k) a[k][i] += c * a[k][j];
    for (int k = 0; k < cols; ++k) v[k][i] += c * v[k][j];
  };
  auto row_swap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int k = 0; k < rows; ++k) std::swap(a[k][i], a[k][j]);
    for (int k = 0; k < cols; ++k) std::swap(v[k][i], v[k][j]);
  };
  int t = 0;
  int n = std::min(rows, cols);
  while (t < n) {
    // find pivot: smallest nonzero absolute value in the remaining block
    int pi = -1, pj = -1;
    int64_t best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi < 0 || std::abs(a[i][j]) < best)) {
          best = std::abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool clean = true;
    for (int i = t + 1; i < rows; ++i)
      if (a[i][t] != 0) {
        row_op(i, t, -(a[i][t] / a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
    for (int j = t + 1; j < cols; ++j)
      if (a[t][j] != 0) {
        col_op(j, t, -(a[t][j] / a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
    if (!clean) continue;
    // divisibility condition d_t | a[i][j]
    bool redo = false;
    for (int i = t + 1; i < rows && !redo; ++i)
      for (int j = t + 1; j < cols && !redo; ++j)
        if (a[i][j] % a[t][t] != 0) {
          row_op(t, i, 1);
          redo = true;
        }
    if (redo) continue;
    if (a[t][t] < 0) {
      for (int k = 0; k < cols; ++k) a[t][k] = -a[t][k];
      for (int k = 0; k < rows; ++k) u[t][k] = -u[t][k];
    }
    ++t;
  }
  std::vector<int64_t> d(n, 0);
  for (int i = 0; i < t; ++i) d[i] = a[i][i];
  if (u_out) *u_out = u;
  if (v_out) *v_out = v;
  return d;
}

// Hermite-style reduction basis: returns rows spanning the same lattice,
// in echelon form (each row has a positive pivot, pivots in increasing
// column order), suitable for canonical coset reduction.
Mat hnf_rows(Mat rows) {
  Mat out;
  int cols = rows.empty() ? 0 : (int)rows[0].size();
  int col = 0;
  while (col < cols && !rows.empty()) {
    // gather rows with nonzero entry at col; gcd them into one pivot row
    int piv = -1;
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i][col] != 0 && (piv < 0 || std::abs(rows[i][col]) < std::abs(rows[piv][col])))
        piv = (int)i;
    if (piv < 0) {
      ++col;
      continue;
    }
    bool again = false;
    for (size_t i = 0; i < rows.size(); ++i) {
      if ((int)i == piv || rows[i][col] == 0) continue;
      int64_t c = rows[i][col] / rows[piv][col];
      for (int k = 0; k < cols; ++k) rows[i][k] -= c * rows[piv][k];
      if (rows[i][col] != 0) again = true;
    }
    if (again) continue;
    Vec prow = rows[piv];
    if (prow[col] < 0) prow = scale(-1, prow);
    out.push_back(prow);
    rows.erase(rows.begin() + piv);
    // drop zero rows
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const Vec& r) {
                                return std::all_of(r.begin(), r.end(),
                                                   [](int64_t x) { return x == 0; });
                              }),
               rows.end());
    ++col;
  }
  // reduce entries above pivots for a canonical form
  for (size_t i = 0; i < out.size(); ++i) {
    int p = 0;
    while (out[i][p] == 0) ++p;
    for (size_t j = 0; j < i; ++j) {
      int64_t c = out[j][p] / out[i][p];
      if (out[j][p] % out[i][p] < 0) c -= 1;
      if (c != 0)
        for (int k = 0; k < (int)out[j].size(); ++k) out[j][k] -= c * out[i][k];
    }
  }
  return out;
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

} // namespace

// ---------------------------------------------------------------------
// OmegaElt / LatticeQuotient

bool OmegaElt::is_trivial() const {
  return std::all_of(canon.begin(), canon.end(), [](int64_t x) { return x == 0; });
}

std::optional<int64_t> OmegaElt::label() const {
  if (canon.empty()) return 0;
  if (canon.size() == 1) return canon[0];
  return std::nullopt;
}

std::string OmegaElt::str() const {
  if (auto k = label()) return std::to_string(*k);
  return vec_str(canon);
}

LatticeQuotient::LatticeQuotient(int n, const std::vector<Vec>& columns) : n_(n) {
  Mat a(n, Vec(columns.size(), 0));
  for (size_t j = 0; j < columns.size(); ++j)
    for (int i = 0; i < n; ++i) a[i][j] = columns[j][i];
  Mat u;
  std::vector<int64_t> d;
  if (columns.empty()) {
    u = identity_mat(n);
    d = {};
  } else {
    d = smith(a, &u, nullptr);
  }
  d.resize(n, 0);
  for (int i = 0; i < n; ++i) {
    if (d[i] == 1) continue; // killed coordinate
    Vec row = u[i];
    if (d[i] == 0) {
      // free direction: fix sign so the first nonzero entry is positive
      for (int64_t x : row)
        if (x != 0) {
          if (x < 0) row = scale(-1, row);
          break;
        }
    }
    rows_.push_back(row);
    factors_.push_back(d[i]);
  }
}

OmegaElt LatticeQuotient::class_of(const Vec& x) const {
  OmegaElt w;
  for (size_t i = 0; i < rows_.size(); ++i) {
    int64_t v = dot(rows_[i], x);
    if (factors_[i] > 1) v -= factors_[i] * floor_div(v, factors_[i]);
    w.canon.push_back(v);
  }
  return w;
}

// ---------------------------------------------------------------------
// RootDatum

std::shared_ptr<const RootDatum> RootDatum::custom(int rank, std::vector<Vec> roots,
                                                   std::vector<Vec> coroots,
                                                   std::string name) {
  if (rank <= 0) throw std::invalid_argument("root datum: rank must be positive");
  if (roots.size() != coroots.size())
    throw std::invalid_argument("root datum: #simple_roots != #simple_coroots");
  for (const auto& v : roots)
    if ((int)v.size() != rank)
      throw std::invalid_argument("root datum: simple root of wrong dimension");
  for (const auto& v : coroots)
    if ((int)v.size() != rank)
      throw std::invalid_argument("root datum: simple coroot of wrong dimension");
  auto rd = std::shared_ptr<RootDatum>(new RootDatum());
  rd->rank_ = rank;
  rd->simple_roots_ = std::move(roots);
  rd->simple_coroots_ = std::move(coroots);
  rd->name_ = std::move(name);
  rd->validate_and_build();
  return rd;
}

std::shared_ptr<const RootDatum> RootDatum::preset(const std::string& family, int n) {
  if (family == "GL") return preset(Family::GL, n);
  if (family == "SL") return preset(Family::SL, n);
  if (family == "PGL") return preset(Family::PGL, n);
  if (family == "Sp") return preset(Family::Sp, n);
  if (family == "GSp") return preset(Family::GSp, n);
  throw std::invalid_argument("unknown preset family: " + family);
}

std::shared_ptr<const RootDatum> RootDatum::preset(Family f, int n) {
  auto e = [](int rank, int i) {
    Vec v(rank, 0);
    v[i] = 1;
    return v;
  };
  std::vector<Vec> roots, coroots;
  switch (f) {
    case Family::GL: {
      if (n < 1 || n > 6) throw std::invalid_argument("preset GL_n supports 1 <= n <= 6");
      for (int i = 0; i + 1 < n; ++i) {
        Vec r = sub(e(n, i), e(n, i + 1));
        roots.push_back(r);
        coroots.push_back(r);
      }
      return custom(n, roots, coroots, "GL" + std::to_string(n));
    }
    case Family::SL: {
      if (n < 2 || n > 5) throw std::invalid_argument("preset SL_n supports 2 <= n <= 5");
      int r = n - 1;
      for (int i = 0; i < r; ++i) {
        coroots.push_back(e(r, i));
        Vec a(r, 0);
        a[i] = 2;
        if (i > 0) a[i - 1] = -1;
        if (i + 1 < r) a[i + 1] = -1;
        roots.push_back(a);
      }
      return custom(r, roots, coroots, "SL" + std::to_string(n));
    }
    case Family::PGL: {
      if (n < 2 || n > 4) throw std::invalid_argument("preset PGL_n supports 2 <= n <= 4");
      int r = n - 1;
      for (int i = 0; i < r; ++i) {
        roots.push_back(e(r, i));
        Vec a(r, 0);
        a[i] = 2;
        if (i > 0) a[i - 1] = -1;
        if (i + 1 < r) a[i + 1] = -1;
        coroots.push_back(a);
      }
      return custom(r, roots, coroots, "PGL" + std::to_string(n));
    }
    case Family::Sp: {
      if (n != 4) throw std::invalid_argument("preset Sp supports only Sp_4");
      roots = {{1, -1}, {0, 2}};
      coroots = {{1, -1}, {0, 1}};
      return custom(2, roots, coroots, "Sp4");
    }
    case Family::GSp: {
      if (n != 4) throw std::invalid_argument("preset GSp supports only GSp_4");
      roots = {{1, -1, 0}, {0, 2, -1}};
      coroots = {{1, -1, 0}, {0, 1, 0}};
      return custom(3, roots, coroots, "GSp4");
    }
    default:
      throw std::invalid_argument("unsupported preset");
  }
}

namespace {

// Exact symmetric positive-definiteness via leading principal minors.
bool sym_positive_definite(const std::vector<std::vector<Rat>>& s) {
  int n = (int)s.size();
  auto m = s;
  for (int k = 0; k < n; ++k) {
    // leading minor via fraction elimination
    if (m[k][k] <= Rat(0)) return false;
    for (int i = k + 1; i < n; ++i) {
      Rat f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

} // namespace

void RootDatum::validate_and_build() {
  int s = num_simple();
  // generalized Cartan matrix checks
  std::vector<std::vector<int64_t>> cartan(s, std::vector<int64_t>(s, 0));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) cartan[i][j] = dot(simple_roots_[i], simple_coroots_[j]);
  for (int i = 0; i < s; ++i) {
    if (cartan[i][i] != 2)
      throw std::invalid_argument("root datum: <alpha_" + std::to_string(i + 1) +
                                  ", alpha_" + std::to_string(i + 1) + "^vee> != 2");
    for (int j = 0; j < s; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0)
        throw std::invalid_argument("root datum: positive off-diagonal Cartan entry at (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw std::invalid_argument("root datum: Cartan zero pattern not symmetric at (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  // connected components of the diagram
  std::vector<int> comp(s, -1);
  int nc = 0;
  for (int i = 0; i < s; ++i) {
    if (comp[i] >= 0) continue;
    std::queue<int> q;
    q.push(i);
    comp[i] = nc;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b = 0; b < s; ++b)
        if (comp[b] < 0 && cartan[a][b] != 0) {
          comp[b] = nc;
          q.push(b);
        }
    }
    ++nc;
  }
  components_.assign(nc, {});
  for (int i = 0; i < s; ++i) components_[comp[i]].push_back(i);

  // finite-type criterion: symmetrize (d_i a_ij = d_j a_ji) and require
  // positive definiteness per component
  for (const auto& cmp : components_) {
    int m = (int)cmp.size();
    std::vector<Rat> d(m, Rat(0));
    d[0] = Rat(1);
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b = 0; b < m; ++b) {
        int64_t ab = cartan[cmp[a]][cmp[b]], ba = cartan[cmp[b]][cmp[a]];
        if (ab == 0) continue;
        Rat want = d[a] * Rat(ab) / Rat(ba);
        if (d[b] == Rat(0)) {
          d[b] = want;
          q.push(b);
        } else if (d[b] != want) {
          throw std::invalid_argument("root datum: Cartan matrix not symmetrizable");
        }
      }
    }
    std::vector<std::vector<Rat>> sym(m, std::vector<Rat>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) sym[a][b] = d[a] * Rat(cartan[cmp[a]][cmp[b]]);
    if (!sym_positive_definite(sym))
      throw std::invalid_argument("root datum: Cartan matrix not of finite type");
  }

  // positive roots: closure under simple reflections, tracking the
  // expansion over simple roots to read off positivity and height
  struct RootRec {
    Vec root, coroot, expansion;
  };
  std::vector<RootRec> all;
  std::map<Vec, int> seen;
  for (int i = 0; i < s; ++i) {
    Vec ex(s, 0);
    ex[i] = 1;
    all.push_back({simple_roots_[i], simple_coroots_[i], ex});
    seen[simple_roots_[i]] = i;
  }
  for (size_t head = 0; head < all.size(); ++head) {
    for (int i = 0; i < s; ++i) {
      RootRec cur = all[head];
      int64_t c = dot(cur.root, simple_coroots_[i]);   // <beta, alpha_i^vee>
      int64_t cc = dot(simple_roots_[i], cur.coroot);  // <alpha_i, beta^vee>
      RootRec nxt;
      nxt.root = sub(cur.root, scale(c, simple_roots_[i]));
      nxt.coroot = sub(cur.coroot, scale(cc, simple_coroots_[i]));
      nxt.expansion = cur.expansion;
      nxt.expansion[i] -= c;
      if (!seen.count(nxt.root)) {
        seen[nxt.root] = (int)all.size();
        all.push_back(nxt);
        if (all.size() > 10000)
          throw std::invalid_argument("root datum: root system closure exceeded cap");
      }
    }
  }
  two_rho_ = Vec(rank_, 0);
  two_rho_check_ = Vec(rank_, 0);
  std::vector<RootRec> positives;
  for (const auto& r : all) {
    bool pos = std::all_of(r.expansion.begin(), r.expansion.end(),
                           [](int64_t x) { return x >= 0; });
    if (!pos) continue;
    positives.push_back(r);
  }
  std::sort(positives.begin(), positives.end(),
            [](const RootRec& a, const RootRec& b) { return a.root < b.root; });
  for (const auto& r : positives) {
    pos_roots_.push_back(r.root);
    pos_coroots_.push_back(r.coroot);
    pos_root_set_.insert(r.root);
    two_rho_ = add(two_rho_, r.root);
    two_rho_check_ = add(two_rho_check_, r.coroot);
  }

  // highest root per component (maximal height)
  comp_theta_.assign(nc, {});
  comp_theta_check_.assign(nc, {});
  std::vector<int64_t> best_h(nc, -1);
  for (const auto& r : positives) {
    int c = -1;
    for (int i = 0; i < s; ++i)
      if (r.expansion[i] != 0) {
        c = comp[i];
        break;
      }
    int64_t h = std::accumulate(r.expansion.begin(), r.expansion.end(), int64_t(0));
    if (c >= 0 && h > best_h[c]) {
      best_h[c] = h;
      comp_theta_[c] = r.root;
      comp_theta_check_[c] = r.coroot;
    }
  }

  omega_ = LatticeQuotient(rank_, simple_coroots_);

  // central lattice: integer kernel of x -> (<alpha_i, x>)_i
  if (s == 0) {
    central_basis_ = identity_mat(rank_);
  } else {
    Mat a(s, Vec(rank_));
    for (int i = 0; i < s; ++i) a[i] = simple_roots_[i];
    Mat v;
    auto d = smith(a, nullptr, &v);
    int rk = 0;
    for (auto x : d)
      if (x != 0) ++rk;
    Mat kernel;
    for (int j = rk; j < rank_; ++j) {
      Vec col(rank_);
      for (int i = 0; i < rank_; ++i) col[i] = v[i][j];
      kernel.push_back(col);
    }
    central_basis_ = hnf_rows(kernel);
  }

  enumerate_weyl();
}

Vec RootDatum::reflect_simple(int i, const Vec& cw) const {
  return sub(cw, scale(dot(simple_roots_[i], cw), simple_coroots_[i]));
}

Vec RootDatum::reflect_simple_char(int i, const Vec& ch) const {
  return sub(ch, scale(dot(ch, simple_coroots_[i]), simple_roots_[i]));
}

int RootDatum::intern(const std::vector<Vec>& mat, const std::vector<Vec>& cmat) {
  auto it = w_index_.find(mat);
  if (it != w_index_.end()) return it->second;
  int id = (int)w_matrix_.size();
  w_index_[mat] = id;
  w_matrix_.push_back(mat);
  w_cmatrix_.push_back(cmat);
  return id;
}

void RootDatum::enumerate_weyl() {
  const int s = num_simple();
  const long cap = 2000000;
  // matrices act on column coweights: rows of mat are images evaluated...
  // store as row-major: mat[i] = image of basis vector e_i under w, for X_*.
  // apply: w(x) = sum_i x_i * mat[i].
  std::vector<Vec> id = identity_mat(rank_);
  intern(id, id);
  std::vector<std::vector<Vec>> smat(s), scmat(s);
  w_simple_.assign(s, 0);
  for (int i = 0; i < s; ++i) {
    smat[i].resize(rank_);
    scmat[i].resize(rank_);
    for (int k = 0; k < rank_; ++k) {
      Vec e(rank_, 0);
      e[k] = 1;
      smat[i][k] = reflect_simple(i, e);
      scmat[i][k] = reflect_simple_char(i, e);
    }
  }
  std::vector<int> level = {0};
  std::vector<int> lengths = {0};
  auto mul_mats = [&](const std::vector<Vec>& a, const std::vector<Vec>& b) {
    // (a then b)? our convention: apply(w, x) = sum_i x_i * mat[i] = M^T x.
    // For w = u*v (u after v): w(x) = u(v(x)); mat_w[i] = u(v(e_i)) = apply(u, mat_v[i]).
    std::vector<Vec> r(rank_);
    for (int i = 0; i < rank_; ++i) {
      Vec acc(rank_, 0);
      for (int k = 0; k < rank_; ++k)
        if (b[i][k] != 0) acc = add(acc, scale(b[i][k], a[k]));
      r[i] = acc;
    }
    return r;
  };
  w_lmul_.assign(s, std::vector<int>());
  size_t head = 0;
  std::vector<int> order = {0};
  while (head < order.size()) {
    int w = order[head++];
    for (int i = 0; i < s; ++i) {
      auto m = mul_mats(smat[i], w_matrix_[w]);
      auto cm = mul_mats(scmat[i], w_cmatrix_[w]);
      int before = (int)w_matrix_.size();
      int id2 = intern(m, cm);
      if (id2 == before) {
        order.push_back(id2);
        if ((long)order.size() > cap)
          throw std::invalid_argument("root datum: Weyl group enumeration exceeded cap");
      }
    }
  }
  int n = (int)w_matrix_.size();
  // simple generators
  for (int i = 0; i < s; ++i) w_simple_[i] = w_index_.at(smat[i]);
  // left multiplication table
  for (int i = 0; i < s; ++i) {
    w_lmul_[i].resize(n);
    for (int w = 0; w < n; ++w)
      w_lmul_[i][w] = w_index_.at(mul_mats(smat[i], w_matrix_[w]));
  }
  // lengths via inversion counting on X^*
  std::set<Vec> pos_set(pos_roots_.begin(), pos_roots_.end());
  auto apply_cmat = [&](int w, const Vec& ch) {
    Vec acc(rank_, 0);
    for (int k = 0; k < rank_; ++k)
      if (ch[k] != 0) acc = add(acc, scale(ch[k], w_cmatrix_[w][k]));
    return acc;
  };
  std::vector<int> len(n, 0);
  for (int w = 0; w < n; ++w) {
    int l = 0;
    for (const auto& a : pos_roots_)
      if (!pos_set.count(apply_cmat(w, a))) ++l;
    len[w] = l;
  }
  // canonical lexicographically least reduced word, greedy on least left
  // descent: l(s_i w) < l(w) for the least i
  w_word_.assign(n, {});
  for (int w = 0; w < n; ++w) {
    std::vector<int> word;
    int cur = w;
    while (len[cur] > 0) {
      for (int i = 0; i < s; ++i) {
        int nw = w_lmul_[i][cur];
        if (len[nw] < len[cur]) {
          word.push_back(i);
          cur = nw;
          break;
        }
      }
    }
    w_word_[w] = word;
  }
  // inverses: w = s_{i1}...s_{ik} gives w^{-1} = s_{ik}...s_{i1}
  w_inv_.assign(n, 0);
  for (int w = 0; w < n; ++w) {
    int inv = 0;
    for (int i : w_word_[w]) inv = w_lmul_[i][inv];
    w_inv_[w] = inv;
  }
}

FiniteWeylElt RootDatum::w_mul(FiniteWeylElt a, FiniteWeylElt b) const {
  // fold a's word onto b from the left
  int cur = b.idx;
  const auto& word = w_word_[a.idx];
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = w_lmul_[*it][cur];
  return {cur};
}

Vec RootDatum::w_apply(FiniteWeylElt a, const Vec& cw) const {
  Vec acc(rank_, 0);
  const auto& m = w_matrix_[a.idx];
  for (int k = 0; k < rank_; ++k)
    if (cw[k] != 0) acc = add(acc, scale(cw[k], m[k]));
  return acc;
}

Vec RootDatum::w_apply_char(FiniteWeylElt a, const Vec& ch) const {
  Vec acc(rank_, 0);
  const auto& m = w_cmatrix_[a.idx];
  for (int k = 0; k < rank_; ++k)
    if (ch[k] != 0) acc = add(acc, scale(ch[k], m[k]));
  return acc;
}

bool RootDatum::is_positive_root(const Vec& ch) const {
  return pos_root_set_.count(ch) > 0;
}

FiniteWeylElt RootDatum::reflection(const Vec& root, const Vec& coroot) const {
  std::vector<Vec> m(rank_);
  for (int k = 0; k < rank_; ++k) {
    Vec e(rank_, 0);
    e[k] = 1;
    m[k] = sub(e, scale(root[k], coroot));
  }
  auto it = w_index_.find(m);
  if (it == w_index_.end())
    throw std::logic_error("reflection not found in the Weyl group table");
  return {it->second};
}

bool RootDatum::is_dominant(const Vec& cw) const {
  for (const auto& a : simple_roots_)
    if (dot(a, cw) < 0) return false;
  return true;
}

std::pair<Vec, FiniteWeylElt> RootDatum::dominate(const Vec& cw) const {
  Vec x = cw;
  FiniteWeylElt w = w_identity();
  for (;;) {
    int i = -1;
    for (int j = 0; j < num_simple(); ++j)
      if (dot(simple_roots_[j], x) < 0) {
        i = j;
        break;
      }
    if (i < 0) break;
    x = reflect_simple(i, x);
    w = w_mul(w_simple(i), w);
  }
  return {x, w};
}

std::vector<Vec> RootDatum::weyl_orbit(const Vec& cw) const {
  std::set<Vec> seen = {cw};
  std::vector<Vec> queue = {cw};
  for (size_t head = 0; head < queue.size(); ++head) {
    Vec cur = queue[head];
    for (int i = 0; i < num_simple(); ++i) {
      Vec nxt = reflect_simple(i, cur);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

bool RootDatum::dominance_leq(const Vec& la, const Vec& mu) const {
  Vec diff = sub(mu, la);
  int s = num_simple();
  if (s == 0)
    return std::all_of(diff.begin(), diff.end(), [](int64_t x) { return x == 0; });
  // solve diff = sum c_j alpha_j^vee with c_j in Z_{>=0}; the simple
  // coroots are linearly independent, so the rational solution is unique
  std::vector<std::vector<Rat>> m(rank_, std::vector<Rat>(s + 1));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < s; ++j) m[i][j] = Rat(simple_coroots_[j][i]);
    m[i][s] = Rat(diff[i]);
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < s && row < rank_; ++col) {
    int p = -1;
    for (int i = row; i < rank_; ++i)
      if (m[i][col] != Rat(0)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    for (int i = 0; i < rank_; ++i) {
      if (i == row || m[i][col] == Rat(0)) continue;
      Rat f = m[i][col] / m[row][col];
      for (int k = col; k <= s; ++k) m[i][k] -= f * m[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < rank_; ++i)
    if (m[i][s] != Rat(0)) return false; // inconsistent
  std::vector<Rat> c(s, Rat(0));
  for (int i = 0; i < row; ++i) c[pivot_col[i]] = m[i][s] / m[i][pivot_col[i]];
  for (const auto& x : c) {
    if (x < Rat(0)) return false;
    if (x.denominator() != Int(1)) return false;
  }
  return true;
}

std::shared_ptr<const RootDatum> RootDatum::levi_datum(const StandardLevi& levi) const {
  std::vector<Vec> roots, coroots;
  std::string suffix;
  for (int i : levi) {
    if (i < 0 || i >= num_simple())
      throw std::invalid_argument("levi: simple root index out of range");
    roots.push_back(simple_roots_[i]);
    coroots.push_back(simple_coroots_[i]);
    suffix += (suffix.empty() ? "" : ".") + std::to_string(i + 1);
  }
  return custom(rank_, roots, coroots, name_ + ":levi[" + suffix + "]");
}

LatticeQuotient RootDatum::levi_quotient(const StandardLevi& levi) const {
  std::vector<Vec> cols;
  for (int i : levi) cols.push_back(simple_coroots_[i]);
  return LatticeQuotient(rank_, cols);
}

Vec RootDatum::two_rho_levi(const StandardLevi& levi) const {
  auto m = levi_datum(levi);
  return m->two_rho();
}

Vec RootDatum::canonical_mod_central(const Vec& cw) const {
  Vec x = cw;
  for (const auto& row : central_basis_) {
    int p = 0;
    while (p < rank_ && row[p] == 0) ++p;
    if (p == rank_) continue;
    int64_t c = floor_div(x[p], row[p]);
    if (c != 0) x = sub(x, scale(c, row));
  }
  return x;
}

std::vector<Vec> RootDatum::dominant_coweights_upto(int64_t dmax) const {
  int64_t bound = 2 * dmax + 2;
  std::set<Vec> out;
  Vec cur(rank_, -bound);
  for (;;) {
    if (is_dominant(cur) && two_rho_pairing(cur) <= dmax) {
      Vec canon = canonical_mod_central(cur);
      if (is_dominant(canon)) out.insert(canon);
    }
    int i = 0;
    while (i < rank_ && cur[i] == bound) {
      cur[i] = -bound;
      ++i;
    }
    if (i == rank_) break;
    ++cur[i];
  }
  return {out.begin(), out.end()};
}

} // namespace hecke
