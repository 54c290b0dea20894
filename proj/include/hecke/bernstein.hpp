/*
  bernstein.hpp

  Bernstein presentation of the center: theta elements via the
  dominant-difference decomposition, the central basis z_{la-bar}
  attached to W_0-orbits of cocharacters, expansion of central elements
  in that basis, and the constant-term homomorphisms on Bernstein
  coordinates.

  Convention (pinned by the centrality self-tests): base alcove in the
  dominant chamber and theta_la = v^{-l(t_la)} T_{t_la} for dominant la.
*/

#pragma once

#include "hecke/hecke_algebra.hpp"

namespace hecke {

// theta_la = v^{-l(t_{la1})} T_{t_{la1}} * v^{l(t_{la2})} T_{t_{la2}}^{-1}
// for la = la1 - la2 with both la_i dominant; independent of the choice.
HeckeElt theta(std::shared_ptr<const RootDatum> rd, const Vec& la, const ParamSystem& L);

// z_{la-bar} = sum of theta over the W_0-orbit of la; la must be dominant
HeckeElt bernstein_z(std::shared_ptr<const RootDatum> rd, const Vec& la,
                     const ParamSystem& L);

// Coordinates of a central element in the Bernstein / monomial basis:
// finitely supported map from levi-dominant orbit representatives to
// Z[v,v^{-1}].  levi = all simple indices means G itself.
struct BernsteinCoords {
  std::shared_ptr<const RootDatum> rd;
  StandardLevi levi;
  std::map<Vec, Laurent> coeffs;

  bool operator==(const BernsteinCoords& o) const { return coeffs == o.coeffs; }
  void add(const Vec& la, const Laurent& c);
};

StandardLevi full_levi_of(const RootDatum& rd);

// inverse of la-bar -> z_{la-bar} on central elements; triangular peeling
// from maximal-length translations.  Rejects non-central input.
BernsteinCoords bernstein_expand(const HeckeElt& h, const ParamSystem& L);

// c^G_M on Bernstein coordinates: each G-orbit key expands to its
// W_0(G)-orbit and regroups into W_0(M)-orbits; coefficients unchanged.
BernsteinCoords constant_term(const BernsteinCoords& c, const StandardLevi& m);

// ^p c^G_M: constant_term followed by the sign (-1)^{<2rho_N, la>},
// 2rho_N = 2rho_G - 2rho_M.
BernsteinCoords signed_constant_term(const BernsteinCoords& c, const StandardLevi& m);

// reinterpret Levi coordinates over the Levi's own root datum, so that
// constant terms can be iterated along a chain of Levis
BernsteinCoords as_levi_group(const BernsteinCoords& c);

} // namespace hecke
