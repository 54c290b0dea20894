/*
  oracles.hpp

  Independent brute-force oracles used only by the tests.  Each one
  recomputes a library quantity along a different route: Kostant's
  alternating sum for weight multiplicities, covering-relation closure
  for the Bruhat order, and a fraction-free linear solve for the center
  of the Hecke algebra.
*/

#pragma once

#include "hecke/hecke_algebra.hpp"
#include "hecke/highest_weight.hpp"

namespace hecke::oracles {

// multiplicity of la in V_mu via the Kostant partition function:
// m = sum_w (-1)^{l(w)} P(w(mu + rho) - (la + rho))
Int kostant_multiplicity(const RootDatum& rd, const Vec& mu, const Vec& la);

// Bruhat order as the transitive closure of covering relations
// y = x * r, l(y) = l(x) + 1, r a reflection; elements restricted to the
// slice of omega with length <= maxlen
struct BruhatOracle {
  std::vector<AffineElt> elements;
  std::vector<std::vector<bool>> leq; // leq[i][j] : elements[i] <= elements[j]
};
BruhatOracle bruhat_closure(const RootDatum& rd, const AffineElt& omega,
                            std::int64_t maxlen);

// rank of a matrix over Z[v, v^{-1}] by fraction-free (Bareiss) elimination
int laurent_matrix_rank(std::vector<std::vector<Laurent>> m);

// dimension of { x in span{T_w : w in slice} : x commutes with all
// generators }, solved as a linear system over the fraction field
int central_solution_dim(const std::shared_ptr<const RootDatum>& rd,
                         const std::vector<AffineElt>& slice, const ParamSystem& L);

} // namespace hecke::oracles
