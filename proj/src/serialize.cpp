/*
  serialize.cpp
*/

#include "hecke/serialize.hpp"

#include <fstream>

namespace hecke {

namespace {

json int_to_json(const Int& c) {
  // int64 when it fits, decimal string otherwise
  if (c >= Int(std::numeric_limits<std::int64_t>::min()) &&
      c <= Int(std::numeric_limits<std::int64_t>::max()))
    return (std::int64_t)c;
  return c.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or integer string");
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Vec vec_from_json(const json& j, const char* field) {
  if (!j.is_array())
    throw std::invalid_argument(std::string("field '") + field + "': expected an array");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument(std::string("field '") + field +
                                  "': expected integer entries");
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

} // namespace

json laurent_to_json(const Laurent& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(json::array({e, int_to_json(c)}));
  return a;
}

Laurent laurent_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("laurent: expected an array of pairs");
  Laurent p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2)
      throw std::invalid_argument("laurent: expected [exponent, coefficient] pairs");
    p += Laurent::term(int_from_json(t[1]), t[0].get<int>());
  }
  return p;
}

json omega_to_json(const OmegaElt& w) {
  if (auto k = w.label()) return *k;
  return vec_to_json(w.canon);
}

json affine_to_json(const RootDatum& rd, const AffineElt& x) {
  auto rw = reduced_word(rd, x);
  json word = json::array();
  for (int i : rw.word) word.push_back(affine_simple_name(rd, i));
  json j;
  j["translation"] = vec_to_json(x.tr);
  j["word"] = word;
  j["omega"] = omega_to_json(rw.omega_class);
  j["length"] = (std::int64_t)rw.word.size();
  return j;
}

json hecke_to_json(const RootDatum& rd, const HeckeElt& h) {
  std::vector<AffineElt> supp;
  for (const auto& [x, c] : h.support()) supp.push_back(x);
  std::sort(supp.begin(), supp.end(),
            [&](const AffineElt& a, const AffineElt& b) { return adm_less(rd, a, b); });
  json a = json::array();
  for (const auto& x : supp) {
    json e;
    e["element"] = affine_to_json(rd, x);
    e["coeff"] = laurent_to_json(h.coeff(x));
    a.push_back(e);
  }
  return a;
}

json bernstein_to_json(const BernsteinCoords& c) {
  json entries = json::array();
  std::vector<Vec> keys;
  for (const auto& [la, a] : c.coeffs) keys.push_back(la);
  std::sort(keys.begin(), keys.end(), [&](const Vec& a, const Vec& b) {
    auto pa = c.rd->two_rho_pairing(a), pb = c.rd->two_rho_pairing(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  for (const auto& la : keys) {
    json e;
    e["lambda"] = vec_to_json(la);
    e["coeff"] = laurent_to_json(c.coeffs.at(la));
    entries.push_back(e);
  }
  json levi = json::array();
  for (int i : c.levi) levi.push_back(i + 1);
  json j;
  j["group"] = c.rd->name();
  j["levi"] = levi;
  j["entries"] = entries;
  return j;
}

json multiset_to_json(const RootDatum& rd, const WeightMultiset& wm) {
  std::vector<Vec> keys;
  for (const auto& [la, m] : wm.mults) keys.push_back(la);
  std::sort(keys.begin(), keys.end(), [&](const Vec& a, const Vec& b) {
    auto pa = rd.two_rho_pairing(a), pb = rd.two_rho_pairing(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });
  json mults = json::array();
  for (const auto& la : keys) {
    json e;
    e["lambda"] = vec_to_json(la);
    e["m"] = int_to_json(wm.mults.at(la));
    mults.push_back(e);
  }
  json j;
  j["highest"] = vec_to_json(wm.highest);
  j["mults"] = mults;
  return j;
}

json parahoric_to_json(const RootDatum& rd, const ParahoricFn& pf) {
  json gens = json::array();
  for (int i : pf.facet.gens) gens.push_back(affine_simple_name(rd, i));
  json entries = json::array();
  for (const auto& e : pf.entries) {
    json x;
    x["rep"] = affine_to_json(rd, e.rep);
    x["value_num"] = laurent_to_json(e.value.num());
    x["value_den"] = laurent_to_json(e.value.den());
    x["normalized"] = laurent_to_json(e.normalized);
    entries.push_back(x);
  }
  json j;
  j["facet"] = gens;
  j["poincare"] = laurent_to_json(pf.poincare);
  j["entries"] = entries;
  return j;
}

json testfn_report_json(const TestFunction& tf, const SupportReport& sup,
                        const std::vector<NormalizedEntry>& table,
                        const Laurent& lefschetz, bool central) {
  json entries = json::array();
  for (const auto& e : table) {
    json x;
    x["element"] = affine_to_json(*tf.rd, e.elt);
    x["value"] = laurent_to_json(e.value);
    x["normalized"] = laurent_to_json(e.normalized);
    entries.push_back(x);
  }
  json checks;
  checks["central"] = central;
  checks["support_contained"] = sup.contained;
  checks["support_equal"] = sup.equal;
  checks["integral"] = true; // normalized_table would have thrown otherwise
  json j;
  j["group"] = tf.rd->name();
  j["mu"] = vec_to_json(tf.mu);
  j["d_mu"] = tf.d_mu;
  j["omega"] = omega_to_json(omega_of_rep(*tf.rd, tf.mu));
  j["entries"] = entries;
  j["checks"] = checks;
  j["lefschetz"] = laurent_to_json(lefschetz);
  return j;
}

std::shared_ptr<const RootDatum> root_datum_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("root datum file: expected an object");
  for (const char* f : {"rank", "simple_roots", "simple_coroots"})
    if (!j.contains(f))
      throw std::invalid_argument(std::string("root datum file: missing field '") + f + "'");
  if (!j["rank"].is_number_integer())
    throw std::invalid_argument("field 'rank': expected an integer");
  int rank = j["rank"].get<int>();
  std::vector<Vec> roots, coroots;
  for (const auto& r : j["simple_roots"]) roots.push_back(vec_from_json(r, "simple_roots"));
  for (const auto& r : j["simple_coroots"])
    coroots.push_back(vec_from_json(r, "simple_coroots"));
  std::string name = j.contains("name") ? j["name"].get<std::string>() : "custom";
  return RootDatum::custom(rank, roots, coroots, name);
}

std::shared_ptr<const RootDatum> root_datum_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw file_error("cannot open root datum file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw file_error("root datum file " + path + ": " + e.what());
  }
  return root_datum_from_json(j);
}

json root_datum_to_json(const RootDatum& rd) {
  json roots = json::array(), coroots = json::array();
  for (const auto& r : rd.simple_roots()) roots.push_back(vec_to_json(r));
  for (const auto& r : rd.simple_coroots()) coroots.push_back(vec_to_json(r));
  json j;
  j["rank"] = rd.rank();
  j["simple_roots"] = roots;
  j["simple_coroots"] = coroots;
  j["name"] = rd.name();
  return j;
}

} // namespace hecke
