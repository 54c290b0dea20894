/*
  highest_weight.hpp

  Highest-weight combinatorics of the dual group.  The dual group is
  never materialized: weights live in X_*(T) and the roots of the dual
  group are the coroots of the given datum.  Multiplicities come from
  the Freudenthal recursion, run in exact integer arithmetic.
*/

#pragma once

#include "hecke/root_datum.hpp"

#include <map>

namespace hecke {

struct WeightMultiset {
  Vec highest;
  std::map<Vec, Int> mults; // dominant weights la <= highest, m > 0
};

// exact multiplicities of dominant weights of the dual-group irreducible
// with highest weight mu; mu must be dominant
WeightMultiset freudenthal(const RootDatum& rd, const Vec& mu);

// dim of the same irreducible, by the Weyl dimension formula
Int weyl_dim(const RootDatum& rd, const Vec& mu);

// orbit expansion of a dominant-weight table to all weights
std::map<Vec, Int> full_weight_multiset(const RootDatum& rd, const WeightMultiset& wm);

// multiplicities of dual-M irreducible constituents of V_mu restricted
// to the Levi; keys are M-dominant highest weights
std::map<Vec, Int> branch_to_levi(const RootDatum& rd, const Vec& mu,
                                  const StandardLevi& levi);

// d_V mod 2 = <2rho, mu_dom> mod 2, constant on the W_0-orbit
int parity(const RootDatum& rd, const Vec& mu);

// common image of the weights of V_mu in X_*/Q^vee
OmegaElt omega_of_rep(const RootDatum& rd, const Vec& mu);

// all weights extreme (single dominant weight)
bool is_minuscule(const RootDatum& rd, const Vec& mu);

} // namespace hecke
