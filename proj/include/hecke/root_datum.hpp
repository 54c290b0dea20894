/*
  root_datum.hpp

  Based root data of split reductive groups.  Lattices are concrete:
  X_*(T) = Z^rank with explicit simple roots (in X^*) and simple coroots
  (in X_*).  The finite Weyl group is enumerated and interned at
  construction; a FiniteWeylElt is a handle into that table.  All data
  is immutable after validation.
*/

#pragma once

#include "hecke/laurent.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hecke {

using Vec = std::vector<std::int64_t>; // lattice vector, length = rank

std::int64_t dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(std::int64_t c, const Vec& a);
std::string vec_str(const Vec& v);

// Finite Weyl group element: a handle into the group table cached on the
// RootDatum that created it.  The table row stores the integer matrix of
// the action on X_*(T) and the lexicographically least reduced word.
struct FiniteWeylElt {
  int idx = 0; // 0 = identity
  bool operator==(const FiniteWeylElt& o) const { return idx == o.idx; }
  bool operator!=(const FiniteWeylElt& o) const { return idx != o.idx; }
  bool operator<(const FiniteWeylElt& o) const { return idx < o.idx; }
};

// Class of a coweight in X_*(T)/Q^vee, in canonical Smith-form coordinates.
struct OmegaElt {
  Vec canon; // torsion coordinates reduced mod invariant factors, then free
  bool operator==(const OmegaElt& o) const { return canon == o.canon; }
  bool operator!=(const OmegaElt& o) const { return canon != o.canon; }
  bool operator<(const OmegaElt& o) const { return canon < o.canon; }
  bool is_trivial() const;
  // Single-integer label when the quotient is cyclic (all presets).
  std::optional<std::int64_t> label() const;
  std::string str() const;
};

// Quotient of Z^n by the column span of an integer matrix, via Smith
// normal form.  Used for Omega = X_*/Q^vee and for the Levi quotients
// Lambda_M = X_*/Q^vee_M.
class LatticeQuotient {
public:
  LatticeQuotient() = default;
  // columns: generators of the sublattice inside Z^n.
  LatticeQuotient(int n, const std::vector<Vec>& columns);

  OmegaElt class_of(const Vec& x) const;
  int n() const { return n_; }
  // invariant factor per retained coordinate; 0 = free
  const std::vector<std::int64_t>& factors() const { return factors_; }
  const std::vector<Vec>& rows() const { return rows_; }
  bool trivial() const { return factors_.empty(); }

private:
  int n_ = 0;
  std::vector<Vec> rows_;               // retained rows of U (one per factor)
  std::vector<std::int64_t> factors_;   // d_i > 1 torsion, 0 free
};

using StandardLevi = std::vector<int>; // sorted subset of simple root indices

class RootDatum {
public:
  enum class Family { GL, SL, PGL, Sp, GSp, Custom };

  static std::shared_ptr<const RootDatum> preset(Family f, int n);
  static std::shared_ptr<const RootDatum> preset(const std::string& family, int n);
  static std::shared_ptr<const RootDatum> custom(int rank,
                                                 std::vector<Vec> simple_roots,
                                                 std::vector<Vec> simple_coroots,
                                                 std::string name);

  int rank() const { return rank_; }
  int num_simple() const { return (int)simple_roots_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Vec>& simple_roots() const { return simple_roots_; }
  const std::vector<Vec>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Vec>& positive_roots() const { return pos_roots_; }
  const std::vector<Vec>& positive_coroots() const { return pos_coroots_; }
  const Vec& two_rho() const { return two_rho_; }             // in X^*
  const Vec& two_rho_check() const { return two_rho_check_; } // in X_*

  std::int64_t two_rho_pairing(const Vec& cw) const { return dot(two_rho_, cw); }
  bool is_dominant(const Vec& cw) const;

  // Connected components of the Coxeter diagram (indices of simple roots),
  // and the highest root of each component.
  const std::vector<std::vector<int>>& components() const { return components_; }
  const std::vector<Vec>& highest_roots() const { return comp_theta_; }
  const std::vector<Vec>& highest_coroots() const { return comp_theta_check_; }

  // --- finite Weyl group -------------------------------------------------
  int weyl_order() const { return (int)w_matrix_.size(); }
  FiniteWeylElt w_identity() const { return {0}; }
  FiniteWeylElt w_simple(int i) const { return {w_simple_[i]}; }
  FiniteWeylElt w_mul(FiniteWeylElt a, FiniteWeylElt b) const;
  FiniteWeylElt w_inverse(FiniteWeylElt a) const { return {w_inv_[a.idx]}; }
  int w_length(FiniteWeylElt a) const { return (int)w_word_[a.idx].size(); }
  const std::vector<int>& w_word(FiniteWeylElt a) const { return w_word_[a.idx]; }
  const std::vector<Vec>& w_matrix(FiniteWeylElt a) const { return w_matrix_[a.idx]; }
  Vec w_apply(FiniteWeylElt a, const Vec& cw) const;
  Vec w_apply_char(FiniteWeylElt a, const Vec& ch) const; // action on X^*
  bool is_positive_root(const Vec& ch) const;
  // the reflection with the given root/coroot pair (must lie in W_0)
  FiniteWeylElt reflection(const Vec& root, const Vec& coroot) const;

  Vec reflect_simple(int i, const Vec& cw) const; // s_i on X_*
  Vec reflect_simple_char(int i, const Vec& ch) const; // s_i on X^*

  // minimal-length w with w(cw) dominant
  std::pair<Vec, FiniteWeylElt> dominate(const Vec& cw) const;
  // full orbit, deduplicated, lexicographic order
  std::vector<Vec> weyl_orbit(const Vec& cw) const;
  // mu - la is a nonnegative integer combination of simple coroots
  bool dominance_leq(const Vec& la, const Vec& mu) const;

  // --- lattice quotients ---------------------------------------------
  const LatticeQuotient& omega_quotient() const { return omega_; }
  OmegaElt omega_class(const Vec& cw) const { return omega_.class_of(cw); }

  // Standard Levi: subset of simple root indices, same lattices.
  std::shared_ptr<const RootDatum> levi_datum(const StandardLevi& levi) const;
  bool full_levi(const StandardLevi& levi) const {
    return (int)levi.size() == num_simple();
  }
  // quotient X_* -> X_*/Q^vee_M
  LatticeQuotient levi_quotient(const StandardLevi& levi) const;
  Vec two_rho_levi(const StandardLevi& levi) const; // 2 rho_M in X^*

  // canonical representative of cw modulo the central sublattice
  // { x : <alpha_i, x> = 0 for all i }
  Vec canonical_mod_central(const Vec& cw) const;
  // dominant coweights with <2rho, mu> <= dmax, one per central class
  std::vector<Vec> dominant_coweights_upto(std::int64_t dmax) const;

private:
  RootDatum() = default;
  void validate_and_build();
  void enumerate_weyl();
  int intern(const std::vector<Vec>& mat, const std::vector<Vec>& cmat);

  int rank_ = 0;
  std::string name_;
  std::vector<Vec> simple_roots_;   // in X^*
  std::vector<Vec> simple_coroots_; // in X_*
  std::vector<Vec> pos_roots_, pos_coroots_;
  Vec two_rho_, two_rho_check_;
  std::vector<std::vector<int>> components_;
  std::vector<Vec> comp_theta_, comp_theta_check_;
  LatticeQuotient omega_;
  std::vector<Vec> central_basis_; // HNF rows spanning the central lattice
  std::set<Vec> pos_root_set_;

  // Weyl group table: matrices act on X_* (and cmatrices on X^*).
  std::vector<std::vector<Vec>> w_matrix_, w_cmatrix_;
  std::vector<std::vector<int>> w_word_;
  std::vector<int> w_inv_;
  std::vector<std::vector<int>> w_lmul_; // [generator][idx] -> s_i * w
  std::vector<int> w_simple_;
  std::map<std::vector<Vec>, int> w_index_;
};

} // namespace hecke
