/*
  test_function.cpp
*/

#include "hecke/test_function.hpp"

#include <algorithm>

namespace hecke {

using std::int64_t;

TestFunction test_function(std::shared_ptr<const RootDatum> rd, const Vec& mu) {
  const RootDatum& r = *rd;
  if (!r.is_dominant(mu))
    throw std::invalid_argument("test_function requires a dominant coweight");
  ParamSystem L = ParamSystem::equal(r);
  WeightMultiset wm = freudenthal(r, mu);
  TestFunction tf;
  tf.rd = rd;
  tf.mu = mu;
  tf.d_mu = r.two_rho_pairing(mu);
  tf.coords = BernsteinCoords{rd, full_levi_of(r), {}};
  tf.element = HeckeElt(rd);
  for (const auto& [la, m] : wm.mults) {
    tf.coords.add(la, Laurent(Int(m)));
    tf.element = tf.element + bernstein_z(rd, la, L).scaled(Laurent(Int(m)));
  }
  return tf;
}

std::vector<NormalizedEntry> normalized_table(const TestFunction& tf) {
  std::vector<NormalizedEntry> out;
  for (const auto& [x, c] : tf.element.support()) {
    if (!c.in_q_after_shift((int)tf.d_mu))
      throw theorem_violation("normalized value at " + aff_str(*tf.rd, x) +
                              " is not in Z[q]: v^" + std::to_string(tf.d_mu) + " * (" +
                              c.str() + ")");
    out.push_back({x, c, c * Laurent::v_pow((int)tf.d_mu)});
  }
  std::sort(out.begin(), out.end(), [&](const NormalizedEntry& a, const NormalizedEntry& b) {
    return adm_less(*tf.rd, a.elt, b.elt);
  });
  return out;
}

SupportReport support_check(const TestFunction& tf, const Facet& f) {
  const RootDatum& r = *tf.rd;
  ParamSystem L = ParamSystem::equal(r);
  SupportReport rep;
  rep.facet = f;
  if (f.gens.empty()) {
    for (const auto& [x, c] : tf.element.support()) rep.support.push_back(x);
    std::sort(rep.support.begin(), rep.support.end(),
              [&](const AffineElt& a, const AffineElt& b) { return adm_less(r, a, b); });
  } else {
    ParahoricFn pf = compress_to_parahoric(tf.element, f, L);
    for (const auto& e : pf.entries) rep.support.push_back(e.rep);
  }
  rep.admissible = admissible_set_parahoric(r, tf.mu, f);
  std::set<AffineElt> adm(rep.admissible.begin(), rep.admissible.end());
  rep.contained = true;
  for (const auto& x : rep.support)
    if (!adm.count(x)) {
      rep.contained = false;
      throw theorem_violation("support element " + aff_str(r, x) +
                              " lies outside the admissible set");
    }
  rep.equal = rep.support.size() == rep.admissible.size();
  return rep;
}

Laurent lefschetz_pairing(const TestFunction& tf, const ParamSystem& L) {
  const RootDatum& r = *tf.rd;
  Laurent sum;
  for (const auto& [x, c] : tf.element.support())
    sum += c * Laurent::v_pow(2 * (int)length_weighted(r, x, L));
  return sum;
}

namespace {

void check_invariant_rows(const RootDatum& rd, const std::vector<Vec>& rows,
                          const std::vector<int>& reflections, const char* what) {
  for (int i : reflections) {
    for (const auto& row : rows) {
      // row is W-invariant iff row(s_i x) = row(x) for all x, i.e. the
      // row kills the coroot direction scaled by <alpha_i, .>
      for (int k = 0; k < rd.rank(); ++k) {
        Vec e(rd.rank(), 0);
        e[k] = 1;
        if (dot(row, rd.reflect_simple(i, e)) != dot(row, e))
          throw std::invalid_argument(std::string(what) +
                                      ": quotient not invariant under s_" +
                                      std::to_string(i + 1));
      }
    }
  }
}

} // namespace

AnisotropicTransfer anisotropic_transfer(std::shared_ptr<const RootDatum> rd,
                                         const Vec& mu,
                                         const std::vector<Vec>* quotient) {
  const RootDatum& r = *rd;
  if (!r.is_dominant(mu))
    throw std::invalid_argument("anisotropic_transfer requires a dominant coweight");
  if (quotient) {
    std::vector<int> all(r.num_simple());
    for (int i = 0; i < r.num_simple(); ++i) all[i] = i;
    check_invariant_rows(r, *quotient, all, "anisotropic_transfer");
  }
  TestFunction tf = test_function(rd, mu);
  AnisotropicTransfer out;
  out.omega = omega_of_rep(r, mu);
  out.value = lefschetz_pairing(tf, ParamSystem::equal(r));
  return out;
}

namespace {

template <class Project>
std::map<Vec, Laurent> transfer_core(const RootDatum& rd, const Vec& nu,
                                     const StandardLevi& levi, Project project) {
  if (!rd.is_dominant(nu))
    throw std::invalid_argument("transfer_coefficients requires a dominant coweight");
  Vec two_rho_n = sub(rd.two_rho(), rd.two_rho_levi(levi));
  auto orbit = rd.weyl_orbit(nu);
  // the quotient must be constant on W_0(M)-orbits
  for (const auto& t : orbit)
    for (int i : levi)
      if (project(rd.reflect_simple(i, t)) != project(t))
        throw std::invalid_argument(
            "transfer_coefficients: quotient not constant on W_0(M)-orbits");
  std::map<Vec, std::vector<Vec>> fibers;
  for (const auto& t : orbit) fibers[project(t)].push_back(t);
  std::map<Vec, Laurent> out;
  for (const auto& [m, fiber] : fibers) {
    int64_t e = dot(two_rho_n, fiber.front());
    for (const auto& t : fiber)
      if (dot(two_rho_n, t) != e)
        throw std::invalid_argument(
            "transfer_coefficients: <2rho_N, .> not constant on the fiber of " +
            vec_str(m));
    Laurent c;
    for (const auto& t : fiber)
      c += Laurent::v_pow((int)(rd.two_rho_pairing(t) - e));
    out[m] = c;
  }
  return out;
}

} // namespace

std::map<Vec, Laurent> transfer_coefficients(const RootDatum& rd, const Vec& nu,
                                             const StandardLevi& levi,
                                             const std::vector<Vec>& quotient_rows) {
  return transfer_core(rd, nu, levi, [&](const Vec& x) {
    Vec m;
    m.reserve(quotient_rows.size());
    for (const auto& row : quotient_rows) m.push_back(dot(row, x));
    return m;
  });
}

std::map<Vec, Laurent> transfer_coefficients(const RootDatum& rd, const Vec& nu,
                                             const StandardLevi& levi,
                                             const LatticeQuotient& quotient) {
  return transfer_core(rd, nu, levi,
                       [&](const Vec& x) { return quotient.class_of(x).canon; });
}

} // namespace hecke
