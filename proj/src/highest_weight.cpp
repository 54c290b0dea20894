/*
  highest_weight.cpp
*/

#include "hecke/highest_weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

using std::int64_t;

namespace {

// W-invariant form on X_*: B(x,y) = sum_{roots a > 0} <a,x><a,y>.
// Any W-invariant form works per irreducible component; both sides of
// the Freudenthal relation are homogeneous of degree one in B.
int64_t form_b(const RootDatum& rd, const Vec& x, const Vec& y) {
  int64_t s = 0;
  for (const auto& a : rd.positive_roots()) s += dot(a, x) * dot(a, y);
  return s;
}

} // namespace

WeightMultiset freudenthal(const RootDatum& rd, const Vec& mu) {
  if (!rd.is_dominant(mu))
    throw std::invalid_argument("freudenthal requires a dominant coweight");
  WeightMultiset wm;
  wm.highest = mu;
  if (rd.num_simple() == 0) {
    wm.mults[mu] = 1;
    return wm;
  }
  // dominant weights la <= mu: la = mu - sum c_i alpha_i^vee with
  // sum c_i <= <2rho, mu>/2
  int s = rd.num_simple();
  int64_t budget = rd.two_rho_pairing(mu) / 2;
  std::vector<Vec> dominants;
  std::set<Vec> seen;
  Vec c(s, 0);
  for (;;) {
    int64_t tot = 0;
    for (auto x : c) tot += x;
    if (tot <= budget) {
      Vec la = mu;
      for (int i = 0; i < s; ++i) la = sub(la, scale(c[i], rd.simple_coroots()[i]));
      if (rd.is_dominant(la) && seen.insert(la).second) dominants.push_back(la);
    }
    int i = 0;
    while (i < s && c[i] == budget) {
      c[i] = 0;
      ++i;
    }
    if (i == s) break;
    ++c[i];
  }
  // process by increasing depth below mu
  std::sort(dominants.begin(), dominants.end(), [&](const Vec& a, const Vec& b) {
    int64_t pa = rd.two_rho_pairing(a), pb = rd.two_rho_pairing(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });

  std::map<Vec, bool> weight_cache;
  auto is_weight = [&](const Vec& v) {
    auto it = weight_cache.find(v);
    if (it != weight_cache.end()) return it->second;
    bool w = rd.dominance_leq(rd.dominate(v).first, mu);
    weight_cache[v] = w;
    return w;
  };
  auto mult_of = [&](const WeightMultiset& m, const Vec& v) -> Int {
    Vec d = rd.dominate(v).first;
    auto it = m.mults.find(d);
    return it == m.mults.end() ? Int(0) : it->second;
  };

  const Vec& two_rho_hat = rd.two_rho_check(); // 2 * (half sum of dual roots)
  for (const auto& la : dominants) {
    if (la == mu) {
      wm.mults[mu] = 1;
      continue;
    }
    if (!is_weight(la)) continue;
    // denom = |mu+rho|^2 - |la+rho|^2, doubled consistently with the rhs
    Vec diff = sub(mu, la);
    int64_t denom = form_b(rd, add(add(mu, la), two_rho_hat), diff);
    Int num = 0;
    for (const auto& ac : rd.positive_coroots()) {
      for (int64_t k = 1;; ++k) {
        Vec v = add(la, scale(k, ac));
        if (!is_weight(v)) break;
        Int m = mult_of(wm, v);
        num += m * Int(form_b(rd, v, ac));
      }
    }
    num *= 2;
    if (denom <= 0) throw std::logic_error("freudenthal: nonpositive denominator");
    if (num % Int(denom) != 0) throw std::logic_error("freudenthal: non-exact division");
    Int m = num / Int(denom);
    if (m < 0) throw std::logic_error("freudenthal: negative multiplicity");
    if (m > 0) wm.mults[la] = m;
  }
  return wm;
}

Int weyl_dim(const RootDatum& rd, const Vec& mu) {
  if (!rd.is_dominant(mu))
    throw std::invalid_argument("weyl_dim requires a dominant coweight");
  Int num = 1, den = 1;
  const Vec& two_rho_hat = rd.two_rho_check();
  for (const auto& a : rd.positive_roots()) {
    num *= Int(2 * dot(a, mu) + dot(a, two_rho_hat));
    den *= Int(dot(a, two_rho_hat));
  }
  if (num % den != 0) throw std::logic_error("weyl_dim: non-exact division");
  return num / den;
}

std::map<Vec, Int> full_weight_multiset(const RootDatum& rd, const WeightMultiset& wm) {
  std::map<Vec, Int> out;
  for (const auto& [la, m] : wm.mults)
    for (const auto& v : rd.weyl_orbit(la)) out[v] = m;
  return out;
}

std::map<Vec, Int> branch_to_levi(const RootDatum& rd, const Vec& mu,
                                  const StandardLevi& levi) {
  if (!rd.is_dominant(mu))
    throw std::invalid_argument("branch_to_levi requires a dominant coweight");
  auto mdat = rd.levi_datum(levi);
  Vec two_rho_m = mdat->two_rho();
  std::map<Vec, Int> rest = full_weight_multiset(rd, freudenthal(rd, mu));
  std::map<Vec, Int> out;
  while (!rest.empty()) {
    // the <2rho_M>-maximal weight is an M-highest weight of a constituent
    const Vec* pick = nullptr;
    int64_t best = 0;
    for (const auto& [v, m] : rest) {
      int64_t p = dot(two_rho_m, v);
      if (!pick || p > best || (p == best && v < *pick)) {
        pick = &v;
        best = p;
      }
    }
    Vec hw = *pick;
    Int mult = rest[hw];
    if (!mdat->is_dominant(hw))
      throw std::logic_error("branch_to_levi: maximal weight not Levi-dominant");
    out[hw] += mult;
    for (const auto& [v, m] : full_weight_multiset(*mdat, freudenthal(*mdat, hw))) {
      auto it = rest.find(v);
      if (it == rest.end() || it->second < mult * m)
        throw std::logic_error("branch_to_levi: negative intermediate multiplicity");
      it->second -= mult * m;
      if (it->second == 0) rest.erase(it);
    }
  }
  return out;
}

int parity(const RootDatum& rd, const Vec& mu) {
  return (int)(((rd.two_rho_pairing(rd.dominate(mu).first) % 2) + 2) % 2);
}

OmegaElt omega_of_rep(const RootDatum& rd, const Vec& mu) {
  return rd.omega_class(mu);
}

bool is_minuscule(const RootDatum& rd, const Vec& mu) {
  return freudenthal(rd, mu).mults.size() == 1;
}

} // namespace hecke
