/*
  hecke_algebra.hpp

  The Iwahori-Hecke algebra of (W, L) over Z[v, v^{-1}] in the T_w basis.
  The coefficient of T_w is identified with the function value on the
  Iwahori double coset of w (Iwahori volume 1), so value tables below are
  literally coefficient tables.  Relations: T_s^2 = (q_s - 1) T_s + q_s
  with q_s = v^{2 L(s)}, braid relations, and T_om T_x = T_{om x} for
  length-zero om.
*/

#pragma once

#include "hecke/affine_weyl.hpp"

#include <map>
#include <memory>

namespace hecke {

class HeckeElt {
public:
  HeckeElt() = default;
  explicit HeckeElt(std::shared_ptr<const RootDatum> rd) : rd_(std::move(rd)) {}

  static HeckeElt basis(std::shared_ptr<const RootDatum> rd, const AffineElt& x,
                        Laurent c = Laurent(1));
  static HeckeElt unit(std::shared_ptr<const RootDatum> rd);

  const std::shared_ptr<const RootDatum>& datum() const { return rd_; }
  const std::map<AffineElt, Laurent>& support() const { return a_; }
  bool is_zero() const { return a_.empty(); }
  Laurent coeff(const AffineElt& x) const;

  void add_term(const AffineElt& x, const Laurent& c);
  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt scaled(const Laurent& c) const;
  bool operator==(const HeckeElt& o) const { return a_ == o.a_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

private:
  std::shared_ptr<const RootDatum> rd_;
  std::map<AffineElt, Laurent> a_;
};

HeckeElt hk_mul(const HeckeElt& a, const HeckeElt& b, const ParamSystem& L);
// T_w^{-1} along a reduced word of w
HeckeElt hk_inverse_basis(std::shared_ptr<const RootDatum> rd, const AffineElt& w,
                          const ParamSystem& L);
// a * T_w^{-1} without materializing T_w^{-1}
HeckeElt mul_inverse_basis(const HeckeElt& a, const AffineElt& w, const ParamSystem& L);
// commutes with every T_s (s simple affine) and with T_om for Omega
// generators; these generate the algebra
bool is_central(const HeckeElt& h, const ParamSystem& L);

// value table of h * e_f at parahoric level f, with e_f the normalized
// idempotent P_f(q)^{-1} sum_{w in W_f} T_w
struct ParahoricFn {
  Facet facet;
  Laurent poincare; // P_f(q)
  struct Entry {
    AffineElt rep;          // minimal-length double coset representative
    LaurentFraction value;  // coefficient of h * e_f on the coset
    Laurent normalized;     // P_f(q) * value, an exact Laurent polynomial
  };
  std::vector<Entry> entries; // sorted by (length, word)
};

// pre: is_central(h); throws std::logic_error when coefficients fail to
// be constant on a double coset (convention bug guard)
ParahoricFn compress_to_parahoric(const HeckeElt& h, const Facet& f,
                                  const ParamSystem& L);

} // namespace hecke
