/*
  bernstein.cpp
*/

#include "hecke/bernstein.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hecke {

using std::int64_t;

StandardLevi full_levi_of(const RootDatum& rd) {
  StandardLevi l(rd.num_simple());
  std::iota(l.begin(), l.end(), 0);
  return l;
}

HeckeElt theta(std::shared_ptr<const RootDatum> rd, const Vec& la, const ParamSystem& L) {
  const RootDatum& r = *rd;
  // smallest k >= 0 with la + k * 2rho^vee dominant
  int64_t k = 0;
  for (const auto& a : r.simple_roots()) {
    int64_t p = dot(a, la);
    if (p < 0) k = std::max(k, (-p + 1) / 2);
  }
  Vec la2 = scale(k, r.two_rho_check());
  Vec la1 = add(la, la2);
  AffineElt t1 = aff_translation(la1);
  HeckeElt out = HeckeElt::basis(rd, t1, Laurent::v_pow(-(int)length(r, t1)));
  if (k > 0) {
    AffineElt t2 = aff_translation(la2);
    out = out.scaled(Laurent::v_pow((int)length(r, t2)));
    out = mul_inverse_basis(out, t2, L);
  }
  return out;
}

HeckeElt bernstein_z(std::shared_ptr<const RootDatum> rd, const Vec& la,
                     const ParamSystem& L) {
  const RootDatum& r = *rd;
  if (!r.is_dominant(la))
    throw std::invalid_argument("bernstein_z requires a dominant coweight");
  HeckeElt out(rd);
  for (const auto& m : r.weyl_orbit(la)) out = out + theta(rd, m, L);
  return out;
}

void BernsteinCoords::add(const Vec& la, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(la);
  if (it == coeffs.end()) {
    coeffs.emplace(la, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

BernsteinCoords bernstein_expand(const HeckeElt& h, const ParamSystem& L) {
  if (!is_central(h, L))
    throw std::invalid_argument("bernstein_expand requires a central element");
  auto rd = h.datum();
  const RootDatum& r = *rd;
  BernsteinCoords out{rd, full_levi_of(r), {}};
  HeckeElt rem = h;
  int64_t prev_max = -1;
  std::size_t guard = 4 * h.support().size() + 16;
  while (!rem.is_zero()) {
    if (guard-- == 0)
      throw std::logic_error("bernstein_expand: peeling failed to terminate");
    int64_t maxlen = -1;
    for (const auto& [x, c] : rem.support()) maxlen = std::max(maxlen, length(r, x));
    if (prev_max >= 0 && maxlen > prev_max)
      throw std::logic_error("bernstein_expand: support length increased");
    prev_max = maxlen;
    // a dominant translation of maximal length must exist in the support
    const Vec* pick = nullptr;
    for (const auto& [x, c] : rem.support()) {
      if (x.w != r.w_identity() || length(r, x) != maxlen) continue;
      if (!r.is_dominant(x.tr)) continue;
      if (!pick || x.tr < *pick) pick = &x.tr;
    }
    if (!pick)
      throw std::logic_error(
          "bernstein_expand: no dominant translation at maximal support length");
    Vec la = *pick;
    Laurent a = rem.coeff(aff_translation(la)) * Laurent::v_pow((int)maxlen);
    out.add(la, a);
    rem = rem - bernstein_z(rd, la, L).scaled(a);
  }
  return out;
}

BernsteinCoords constant_term(const BernsteinCoords& c, const StandardLevi& m) {
  const RootDatum& r = *c.rd;
  if ((int)c.levi.size() != r.num_simple())
    throw std::invalid_argument("constant_term expects coordinates at the full group");
  auto mdat = r.levi_datum(m);
  BernsteinCoords out{c.rd, m, {}};
  for (const auto& [la, a] : c.coeffs) {
    std::set<Vec> reps;
    for (const auto& x : r.weyl_orbit(la)) reps.insert(mdat->dominate(x).first);
    for (const auto& rep : reps) out.add(rep, a);
  }
  return out;
}

BernsteinCoords signed_constant_term(const BernsteinCoords& c, const StandardLevi& m) {
  const RootDatum& r = *c.rd;
  BernsteinCoords ct = constant_term(c, m);
  Vec two_rho_n = sub(r.two_rho(), r.two_rho_levi(m));
  BernsteinCoords out{c.rd, m, {}};
  for (const auto& [la, a] : ct.coeffs) {
    bool odd = ((dot(two_rho_n, la) % 2) + 2) % 2 == 1;
    out.add(la, odd ? -a : a);
  }
  return out;
}

BernsteinCoords as_levi_group(const BernsteinCoords& c) {
  auto mdat = c.rd->levi_datum(c.levi);
  return BernsteinCoords{mdat, full_levi_of(*mdat), c.coeffs};
}

} // namespace hecke
