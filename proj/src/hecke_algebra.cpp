/*
  hecke_algebra.cpp
*/

#include "hecke/hecke_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

HeckeElt HeckeElt::basis(std::shared_ptr<const RootDatum> rd, const AffineElt& x,
                         Laurent c) {
  HeckeElt h(std::move(rd));
  h.add_term(x, c);
  return h;
}

HeckeElt HeckeElt::unit(std::shared_ptr<const RootDatum> rd) {
  auto& r = *rd;
  return basis(rd, aff_identity(r));
}

Laurent HeckeElt::coeff(const AffineElt& x) const {
  auto it = a_.find(x);
  return it == a_.end() ? Laurent() : it->second;
}

void HeckeElt::add_term(const AffineElt& x, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = a_.find(x);
  if (it == a_.end()) {
    a_.emplace(x, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) a_.erase(it);
  }
}

namespace {

void check_same_datum(const HeckeElt& a, const HeckeElt& b) {
  if (a.datum() && b.datum() && a.datum() != b.datum())
    throw std::invalid_argument("Hecke elements over different root data");
}

} // namespace

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  check_same_datum(*this, o);
  HeckeElt r = *this;
  if (!r.rd_) r.rd_ = o.rd_;
  for (const auto& [x, c] : o.a_) r.add_term(x, c);
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  check_same_datum(*this, o);
  HeckeElt r = *this;
  if (!r.rd_) r.rd_ = o.rd_;
  for (const auto& [x, c] : o.a_) r.add_term(x, -c);
  return r;
}

HeckeElt HeckeElt::scaled(const Laurent& c) const {
  HeckeElt r(rd_);
  if (c.is_zero()) return r;
  for (const auto& [x, t] : a_) r.add_term(x, t * c);
  return r;
}

namespace {

// h * T_s for a simple affine reflection s
HeckeElt mul_simple_right(const HeckeElt& h, int i, const ParamSystem& L) {
  const RootDatum& rd = *h.datum();
  AffineElt s = affine_simple(rd, i);
  Laurent qs = L.q_s(i);
  Laurent qs1 = qs - Laurent(1);
  HeckeElt r(h.datum());
  for (const auto& [x, c] : h.support()) {
    AffineElt xs = aff_mul(rd, x, s);
    if (length(rd, xs) > length(rd, x)) {
      r.add_term(xs, c);
    } else {
      // T_x T_s = (q_s - 1) T_x + q_s T_{xs}
      r.add_term(x, c * qs1);
      r.add_term(xs, c * qs);
    }
  }
  return r;
}

// h * T_om for a length-zero element om
HeckeElt mul_length_zero_right(const HeckeElt& h, const AffineElt& om) {
  const RootDatum& rd = *h.datum();
  HeckeElt r(h.datum());
  for (const auto& [x, c] : h.support()) r.add_term(aff_mul(rd, x, om), c);
  return r;
}

// h * T_s^{-1}: T_x T_s^{-1} = T_{xs} when l(xs) < l(x), and
// q_s^{-1} T_{xs} + (q_s^{-1} - 1) T_x otherwise
HeckeElt mul_simple_inverse_right(const HeckeElt& h, int i, const ParamSystem& L) {
  const RootDatum& rd = *h.datum();
  AffineElt s = affine_simple(rd, i);
  Laurent qsi = Laurent::v_pow(-2 * L[i]);
  Laurent qsi1 = qsi - Laurent(1);
  HeckeElt r(h.datum());
  for (const auto& [x, c] : h.support()) {
    AffineElt xs = aff_mul(rd, x, s);
    if (length(rd, xs) < length(rd, x)) {
      r.add_term(xs, c);
    } else {
      r.add_term(xs, c * qsi);
      r.add_term(x, c * qsi1);
    }
  }
  return r;
}

} // namespace

HeckeElt mul_inverse_basis(const HeckeElt& a, const AffineElt& w, const ParamSystem& L) {
  const RootDatum& rd = *a.datum();
  auto rw = reduced_word(rd, w);
  // w = om s_1 ... s_k  =>  T_w^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1} T_{om^{-1}}
  HeckeElt acc = a;
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it)
    acc = mul_simple_inverse_right(acc, *it, L);
  return mul_length_zero_right(acc, aff_inv(rd, rw.omega));
}

HeckeElt hk_mul(const HeckeElt& a, const HeckeElt& b, const ParamSystem& L) {
  check_same_datum(a, b);
  auto rd = a.datum() ? a.datum() : b.datum();
  HeckeElt out(rd);
  if (a.is_zero() || b.is_zero()) return out;
  const RootDatum& r = *rd;
  for (const auto& [y, c] : b.support()) {
    // T_y = T_om T_{s_1} ... T_{s_k}
    auto rw = reduced_word(r, y);
    HeckeElt acc = mul_length_zero_right(a.scaled(c), rw.omega);
    for (int i : rw.word) acc = mul_simple_right(acc, i, L);
    out = out + acc;
  }
  return out;
}

HeckeElt hk_inverse_basis(std::shared_ptr<const RootDatum> rd, const AffineElt& w,
                          const ParamSystem& L) {
  return mul_inverse_basis(HeckeElt::unit(rd), w, L);
}

bool is_central(const HeckeElt& h, const ParamSystem& L) {
  if (h.is_zero()) return true;
  auto rd = h.datum();
  const RootDatum& r = *rd;
  for (int i = 0; i < num_affine_simple(r); ++i) {
    HeckeElt t = HeckeElt::basis(rd, affine_simple(r, i));
    if (hk_mul(h, t, L) != hk_mul(t, h, L)) return false;
  }
  for (int k = 0; k < r.rank(); ++k) {
    Vec e(r.rank(), 0);
    e[k] = 1;
    HeckeElt t = HeckeElt::basis(rd, omega_lift(r, e));
    if (hk_mul(h, t, L) != hk_mul(t, h, L)) return false;
  }
  return true;
}

ParahoricFn compress_to_parahoric(const HeckeElt& h, const Facet& f,
                                  const ParamSystem& L) {
  if (!is_central(h, L))
    throw std::invalid_argument("compress_to_parahoric requires a central element");
  auto rd = h.datum();
  const RootDatum& r = *rd;
  ParahoricFn out;
  out.facet = f;
  out.poincare = poincare_poly(r, f, L);

  HeckeElt sum(rd);
  for (const auto& w : facet_group(r, f)) sum.add_term(w, Laurent(1));
  HeckeElt g = hk_mul(h, sum, L);

  std::set<AffineElt> done;
  for (const auto& [x, c] : g.support()) {
    if (done.count(x)) continue;
    AffineElt rep = double_coset_min(r, x, f);
    Laurent val;
    bool first = true;
    for (const auto& y : double_coset_orbit(r, rep, f)) {
      done.insert(y);
      Laurent cy = g.coeff(y);
      if (first) {
        val = cy;
        first = false;
      } else if (cy != val) {
        throw std::logic_error(
            "parahoric compression: coefficient not constant on the double coset of " +
            aff_str(r, rep));
      }
    }
    if (!val.is_zero())
      out.entries.push_back({rep, LaurentFraction(val, out.poincare), val});
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [&](const ParahoricFn::Entry& a, const ParahoricFn::Entry& b) {
              return adm_less(r, a.rep, b.rep);
            });
  return out;
}

} // namespace hecke
