/*
  affine_weyl.cpp
*/

#include "hecke/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

using std::int64_t;

AffineElt aff_identity(const RootDatum& rd) {
  return {Vec(rd.rank(), 0), rd.w_identity()};
}

AffineElt aff_translation(const Vec& cw) {
  return {cw, FiniteWeylElt{0}};
}

AffineElt aff_from_finite(const RootDatum& rd, FiniteWeylElt w) {
  return {Vec(rd.rank(), 0), w};
}

AffineElt aff_mul(const RootDatum& rd, const AffineElt& x, const AffineElt& y) {
  // (t_a u)(t_b v) = t_{a + u(b)} (uv)
  return {add(x.tr, rd.w_apply(x.w, y.tr)), rd.w_mul(x.w, y.w)};
}

AffineElt aff_inv(const RootDatum& rd, const AffineElt& x) {
  FiniteWeylElt wi = rd.w_inverse(x.w);
  return {scale(-1, rd.w_apply(wi, x.tr)), wi};
}

int num_affine_simple(const RootDatum& rd) {
  return rd.num_simple() + (int)rd.components().size();
}

AffineElt affine_simple(const RootDatum& rd, int i) {
  int s = rd.num_simple();
  if (i < 0 || i >= num_affine_simple(rd))
    throw std::invalid_argument("affine simple reflection index out of range");
  if (i < s) return aff_from_finite(rd, rd.w_simple(i));
  int c = i - s;
  const Vec& theta = rd.highest_roots()[c];
  const Vec& theta_check = rd.highest_coroots()[c];
  return {theta_check, rd.reflection(theta, theta_check)};
}

std::string affine_simple_name(const RootDatum& rd, int i) {
  int s = rd.num_simple();
  if (i < s) return "s" + std::to_string(i + 1);
  int c = i - s;
  if (rd.components().size() == 1) return "s0";
  return "s0_" + std::to_string(c + 1);
}

int affine_simple_from_name(const RootDatum& rd, const std::string& name) {
  std::string t = name;
  if (!t.empty() && (t[0] == 's' || t[0] == 'S')) t = t.substr(1);
  auto us = t.find('_');
  int comp = 0;
  if (us != std::string::npos) {
    comp = std::stoi(t.substr(us + 1)) - 1;
    t = t.substr(0, us);
  }
  int k = std::stoi(t);
  int s = rd.num_simple();
  if (k == 0) {
    if (comp < 0 || comp >= (int)rd.components().size())
      throw std::invalid_argument("facet: no such affine node: " + name);
    return s + comp;
  }
  if (k < 1 || k > s) throw std::invalid_argument("facet: no such reflection: " + name);
  return k - 1;
}

int64_t length(const RootDatum& rd, const AffineElt& x) {
  // l(t_la w) = sum_{a>0, w^{-1}a>0} |<a,la>| + sum_{a>0, w^{-1}a<0} |<a,la>-1|
  int64_t l = 0;
  FiniteWeylElt wi = rd.w_inverse(x.w);
  for (const auto& a : rd.positive_roots()) {
    int64_t pairing = dot(a, x.tr);
    if (rd.is_positive_root(rd.w_apply_char(wi, a)))
      l += pairing < 0 ? -pairing : pairing;
    else
      l += pairing - 1 < 0 ? 1 - pairing : pairing - 1;
  }
  return l;
}

ParamSystem ParamSystem::equal(const RootDatum& rd) {
  return ParamSystem(rd, std::vector<int>(num_affine_simple(rd), 1));
}

namespace {

// braid order m(i,j) between distinct affine simple reflections; 0 = infinity
int braid_order(const RootDatum& rd, int i, int j) {
  int s = rd.num_simple();
  auto root_of = [&](int k) {
    return k < s ? rd.simple_roots()[k] : scale(-1, rd.highest_roots()[k - s]);
  };
  auto coroot_of = [&](int k) {
    return k < s ? rd.simple_coroots()[k] : scale(-1, rd.highest_coroots()[k - s]);
  };
  int64_t n = dot(root_of(i), coroot_of(j)) * dot(root_of(j), coroot_of(i));
  switch (n) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

} // namespace

ParamSystem::ParamSystem(const RootDatum& rd, std::vector<int> values)
    : vals_(std::move(values)) {
  int m = num_affine_simple(rd);
  if ((int)vals_.size() != m)
    throw std::invalid_argument("parameter system: wrong number of values");
  for (int v : vals_)
    if (v <= 0) throw std::invalid_argument("parameter system: values must be positive");
  // conjugation invariance on generators: odd braid edges ...
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int b = braid_order(rd, i, j);
      if (b % 2 == 1 && vals_[i] != vals_[j])
        throw std::invalid_argument(
            "parameter system: L must agree on odd-braid-linked reflections " +
            affine_simple_name(rd, i) + "," + affine_simple_name(rd, j));
    }
  // ... and under conjugation by Omega lifts of the lattice basis
  for (int k = 0; k < rd.rank(); ++k) {
    Vec e(rd.rank(), 0);
    e[k] = 1;
    AffineElt om = omega_lift(rd, e);
    AffineElt omi = aff_inv(rd, om);
    for (int i = 0; i < m; ++i) {
      AffineElt c = aff_mul(rd, aff_mul(rd, om, affine_simple(rd, i)), omi);
      int j = -1;
      for (int t = 0; t < m; ++t)
        if (c == affine_simple(rd, t)) {
          j = t;
          break;
        }
      if (j < 0) throw std::logic_error("Omega conjugation does not permute simples");
      if (vals_[i] != vals_[j])
        throw std::invalid_argument(
            "parameter system: L must be Omega-conjugation invariant on " +
            affine_simple_name(rd, i));
    }
  }
}

int64_t length_weighted(const RootDatum& rd, const AffineElt& x, const ParamSystem& L) {
  auto rw = reduced_word(rd, x);
  int64_t l = 0;
  for (int i : rw.word) l += L[i];
  return l;
}

namespace {

// least i with l(s_i x) < l(x), or -1
int least_left_descent(const RootDatum& rd, const AffineElt& x, int64_t lx) {
  int m = num_affine_simple(rd);
  for (int i = 0; i < m; ++i) {
    AffineElt sx = aff_mul(rd, affine_simple(rd, i), x);
    if (length(rd, sx) < lx) return i;
  }
  return -1;
}

} // namespace

ReducedWord reduced_word(const RootDatum& rd, const AffineElt& x) {
  // strip to the length-zero factor
  AffineElt y = x;
  int64_t ly = length(rd, y);
  while (ly > 0) {
    int i = least_left_descent(rd, y, ly);
    y = aff_mul(rd, affine_simple(rd, i), y);
    --ly;
  }
  ReducedWord out;
  out.omega = y;
  out.omega_class = rd.omega_class(y.tr);
  // x = omega * w_aff; greedy least left descent yields the lex-least word
  AffineElt w = aff_mul(rd, aff_inv(rd, y), x);
  int64_t lw = length(rd, w);
  while (lw > 0) {
    int i = least_left_descent(rd, w, lw);
    out.word.push_back(i);
    w = aff_mul(rd, affine_simple(rd, i), w);
    --lw;
  }
  return out;
}

OmegaElt omega_component(const RootDatum& rd, const AffineElt& x) {
  return rd.omega_class(x.tr);
}

AffineElt omega_lift(const RootDatum& rd, const Vec& cw) {
  AffineElt y = aff_translation(cw);
  int64_t ly = length(rd, y);
  while (ly > 0) {
    int i = least_left_descent(rd, y, ly);
    y = aff_mul(rd, affine_simple(rd, i), y);
    --ly;
  }
  return y;
}

bool bruhat_leq(const RootDatum& rd, const AffineElt& x, const AffineElt& y) {
  if (omega_component(rd, x) != omega_component(rd, y)) return false;
  auto rwy = reduced_word(rd, y);
  AffineElt omi = aff_inv(rd, rwy.omega);
  AffineElt u = aff_mul(rd, omi, x);
  int64_t lu = length(rd, u);
  // subword test along the reduced word of omega^{-1} y
  size_t pos = 0;
  while (lu > 0) {
    if (rwy.word.size() - pos < (size_t)lu) return false;
    int s = rwy.word[pos++];
    AffineElt su = aff_mul(rd, affine_simple(rd, s), u);
    int64_t lsu = length(rd, su);
    if (lsu < lu) {
      u = su;
      lu = lsu;
    }
  }
  return true;
}

bool adm_less(const RootDatum& rd, const AffineElt& a, const AffineElt& b) {
  int64_t la = length(rd, a), lb = length(rd, b);
  if (la != lb) return la < lb;
  auto wa = reduced_word(rd, a).word, wb = reduced_word(rd, b).word;
  if (wa != wb) return wa < wb;
  return a < b;
}

namespace {

// sort with precomputed (length, word) keys
std::vector<AffineElt> sorted_by_adm(const RootDatum& rd, std::vector<AffineElt> v) {
  struct Key {
    int64_t len;
    std::vector<int> word;
    AffineElt x;
  };
  std::vector<Key> keys;
  keys.reserve(v.size());
  for (auto& x : v) keys.push_back({length(rd, x), reduced_word(rd, x).word, x});
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.len != b.len) return a.len < b.len;
    if (a.word != b.word) return a.word < b.word;
    return a.x < b.x;
  });
  std::vector<AffineElt> out;
  out.reserve(keys.size());
  for (auto& k : keys) out.push_back(k.x);
  return out;
}

} // namespace

std::vector<AffineElt> lower_cone(const RootDatum& rd, const AffineElt& y) {
  auto rw = reduced_word(rd, y);
  std::set<AffineElt> result;
  // DFS over subwords, left to right, with (position, element) memoization
  std::set<std::pair<size_t, AffineElt>> seen;
  std::vector<std::pair<size_t, AffineElt>> stack = {{0, aff_identity(rd)}};
  while (!stack.empty()) {
    auto [pos, u] = stack.back();
    stack.pop_back();
    if (!seen.insert({pos, u}).second) continue;
    if (pos == rw.word.size()) {
      result.insert(aff_mul(rd, rw.omega, u));
      continue;
    }
    stack.push_back({pos + 1, u});
    stack.push_back({pos + 1, aff_mul(rd, u, affine_simple(rd, rw.word[pos]))});
  }
  return sorted_by_adm(rd, {result.begin(), result.end()});
}

std::vector<AffineElt> admissible_set(const RootDatum& rd, const Vec& mu) {
  std::set<AffineElt> result;
  for (const auto& la : rd.weyl_orbit(mu)) {
    auto cone = lower_cone(rd, aff_translation(la));
    result.insert(cone.begin(), cone.end());
  }
  return sorted_by_adm(rd, {result.begin(), result.end()});
}

std::vector<AffineElt> facet_group(const RootDatum& rd, const Facet& f, std::size_t cap) {
  std::set<AffineElt> seen = {aff_identity(rd)};
  std::vector<AffineElt> queue = {aff_identity(rd)};
  for (size_t head = 0; head < queue.size(); ++head) {
    AffineElt cur = queue[head];
    for (int i : f.gens) {
      AffineElt nxt = aff_mul(rd, cur, affine_simple(rd, i));
      if (seen.insert(nxt).second) {
        queue.push_back(nxt);
        if (seen.size() > cap)
          throw std::invalid_argument(
              "facet: generated subgroup exceeds the finiteness cap");
      }
    }
  }
  return queue;
}

Laurent poincare_poly(const RootDatum& rd, const Facet& f, const ParamSystem& L,
                      std::size_t cap) {
  Laurent p;
  for (const auto& w : facet_group(rd, f, cap))
    p += Laurent::v_pow(2 * (int)length_weighted(rd, w, L));
  return p;
}

AffineElt double_coset_min(const RootDatum& rd, const AffineElt& x, const Facet& f) {
  AffineElt cur = x;
  int64_t lc = length(rd, cur);
  for (;;) {
    bool moved = false;
    for (int i : f.gens) {
      AffineElt sx = aff_mul(rd, affine_simple(rd, i), cur);
      if (length(rd, sx) < lc) {
        cur = sx;
        --lc;
        moved = true;
        break;
      }
      AffineElt xs = aff_mul(rd, cur, affine_simple(rd, i));
      if (length(rd, xs) < lc) {
        cur = xs;
        --lc;
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
}

std::vector<AffineElt> double_coset_orbit(const RootDatum& rd, const AffineElt& x,
                                          const Facet& f) {
  std::set<AffineElt> seen = {x};
  std::vector<AffineElt> queue = {x};
  for (size_t head = 0; head < queue.size(); ++head) {
    AffineElt cur = queue[head];
    for (int i : f.gens) {
      for (AffineElt nxt : {aff_mul(rd, affine_simple(rd, i), cur),
                            aff_mul(rd, cur, affine_simple(rd, i))})
        if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<AffineElt> admissible_set_parahoric(const RootDatum& rd, const Vec& mu,
                                                const Facet& f) {
  facet_group(rd, f); // validates finiteness
  std::set<AffineElt> reps;
  for (const auto& x : admissible_set(rd, mu)) reps.insert(double_coset_min(rd, x, f));
  return sorted_by_adm(rd, {reps.begin(), reps.end()});
}

std::vector<AffineElt> elements_up_to_length(const RootDatum& rd, const AffineElt& omega,
                                             int64_t maxlen) {
  std::set<AffineElt> seen = {omega};
  std::vector<AffineElt> queue = {omega};
  for (size_t head = 0; head < queue.size(); ++head) {
    AffineElt cur = queue[head];
    if (length(rd, cur) >= maxlen) continue;
    for (int i = 0; i < num_affine_simple(rd); ++i) {
      AffineElt nxt = aff_mul(rd, cur, affine_simple(rd, i));
      if (length(rd, nxt) <= maxlen && seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return sorted_by_adm(rd, {seen.begin(), seen.end()});
}

std::string aff_str(const RootDatum& rd, const AffineElt& x) {
  std::ostringstream os;
  os << "t" << vec_str(x.tr);
  const auto& word = rd.w_word(x.w);
  if (!word.empty()) {
    os << "*";
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) os << ".";
      os << "s" << (word[i] + 1);
    }
  }
  return os.str();
}

std::string aff_word_str(const RootDatum& rd, const AffineElt& x) {
  auto rw = reduced_word(rd, x);
  std::ostringstream os;
  for (size_t i = 0; i < rw.word.size(); ++i) {
    if (i) os << ".";
    os << affine_simple_name(rd, rw.word[i]);
  }
  if (!rw.omega_class.is_trivial() || rw.word.empty()) {
    if (!rw.word.empty()) os << ".";
    os << "w[" << rw.omega_class.str() << "]";
  }
  return os.str();
}

} // namespace hecke
