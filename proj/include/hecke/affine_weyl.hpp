/*
  affine_weyl.hpp

  The extended affine (Iwahori-)Weyl group W = X_*(T) x| W_0.  Elements
  are canonically represented by (translation, finite) pairs; reduced
  words are derived data.  Lengths follow the Iwahori-Matsumoto formula
  for the base alcove in the dominant chamber, so l(t_lambda) =
  <2rho, lambda> for dominant lambda.  The decomposition used throughout
  is x = omega * s_{i_1} ... s_{i_k} with omega the length-zero part and
  the word lexicographically least.
*/

#pragma once

#include "hecke/root_datum.hpp"

#include <cstdint>

namespace hecke {

// t_lambda * w
struct AffineElt {
  Vec tr;
  FiniteWeylElt w;
  bool operator==(const AffineElt& o) const { return tr == o.tr && w == o.w; }
  bool operator!=(const AffineElt& o) const { return !(*this == o); }
  bool operator<(const AffineElt& o) const {
    return tr != o.tr ? tr < o.tr : w < o.w;
  }
};

AffineElt aff_identity(const RootDatum& rd);
AffineElt aff_translation(const Vec& cw);
AffineElt aff_from_finite(const RootDatum& rd, FiniteWeylElt w);
AffineElt aff_mul(const RootDatum& rd, const AffineElt& x, const AffineElt& y);
AffineElt aff_inv(const RootDatum& rd, const AffineElt& x);

// Affine simple reflections are indexed 0..s-1 for the finite simple
// reflections s_1..s_s, then one affine node per irreducible component.
int num_affine_simple(const RootDatum& rd);
AffineElt affine_simple(const RootDatum& rd, int i);
std::string affine_simple_name(const RootDatum& rd, int i);
// parse "s1", "s0", "s0_2", or a bare integer as on the command line
int affine_simple_from_name(const RootDatum& rd, const std::string& name);

std::int64_t length(const RootDatum& rd, const AffineElt& x);

// weighted length function; L is indexed by affine simple reflections
class ParamSystem {
public:
  // all L(s) = 1 (the split equal-parameter case)
  static ParamSystem equal(const RootDatum& rd);
  ParamSystem(const RootDatum& rd, std::vector<int> values);
  int operator[](int i) const { return vals_[i]; }
  int size() const { return (int)vals_.size(); }
  Laurent q_s(int i) const { return Laurent::v_pow(2 * vals_[i]); }

private:
  std::vector<int> vals_;
};

std::int64_t length_weighted(const RootDatum& rd, const AffineElt& x,
                             const ParamSystem& L);

struct ReducedWord {
  std::vector<int> word;  // affine simple indices, x = omega * product
  AffineElt omega;        // the length-zero factor
  OmegaElt omega_class;
};

ReducedWord reduced_word(const RootDatum& rd, const AffineElt& x);
OmegaElt omega_component(const RootDatum& rd, const AffineElt& x);
// the unique length-zero element whose translation class equals that of cw
AffineElt omega_lift(const RootDatum& rd, const Vec& cw);

bool bruhat_leq(const RootDatum& rd, const AffineElt& x, const AffineElt& y);

std::vector<AffineElt> lower_cone(const RootDatum& rd, const AffineElt& y);
std::vector<AffineElt> admissible_set(const RootDatum& rd, const Vec& mu);

// deterministic order used for reported sets: (length, word, translation)
bool adm_less(const RootDatum& rd, const AffineElt& a, const AffineElt& b);

struct Facet {
  std::vector<int> gens; // affine simple indices, sorted
};

// enumerates W_f; throws std::invalid_argument when the cap is exceeded
std::vector<AffineElt> facet_group(const RootDatum& rd, const Facet& f,
                                   std::size_t cap = 200000);
Laurent poincare_poly(const RootDatum& rd, const Facet& f, const ParamSystem& L,
                      std::size_t cap = 200000);
AffineElt double_coset_min(const RootDatum& rd, const AffineElt& x, const Facet& f);
std::vector<AffineElt> double_coset_orbit(const RootDatum& rd, const AffineElt& x,
                                          const Facet& f);
std::vector<AffineElt> admissible_set_parahoric(const RootDatum& rd, const Vec& mu,
                                                const Facet& f);

// all x = omega * w_aff with l(x) <= maxlen (test/oracle helper)
std::vector<AffineElt> elements_up_to_length(const RootDatum& rd,
                                             const AffineElt& omega,
                                             std::int64_t maxlen);

std::string aff_str(const RootDatum& rd, const AffineElt& x);       // "t[1,0]*s1"
std::string aff_word_str(const RootDatum& rd, const AffineElt& x);  // "s1.w[1]"

} // namespace hecke
