/*
  serialize.hpp

  JSON forms of the library types and ingestion of custom root datum
  files.  Field order is fixed so identical inputs serialize to
  byte-identical output.
*/

#pragma once

#include "hecke/test_function.hpp"

#include <json.hpp>

namespace hecke {

using json = nlohmann::ordered_json;

// I/O failure (missing or unreadable file); the CLI maps this to exit 3
class file_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json laurent_to_json(const Laurent& p); // [[exponent, coefficient], ...]
Laurent laurent_from_json(const json& j);

json omega_to_json(const OmegaElt& w); // integer when cyclic, else array

json affine_to_json(const RootDatum& rd, const AffineElt& x);
// {translation, word, omega, length}

json hecke_to_json(const RootDatum& rd, const HeckeElt& h);
// [{element, coeff}] sorted by (length, word)

json bernstein_to_json(const BernsteinCoords& c);
// {group, levi, entries: [{lambda, coeff}]}

json multiset_to_json(const RootDatum& rd, const WeightMultiset& wm);
// {highest, mults: [{lambda, m}]} in descending order

json parahoric_to_json(const RootDatum& rd, const ParahoricFn& pf);

json testfn_report_json(const TestFunction& tf, const SupportReport& sup,
                        const std::vector<NormalizedEntry>& table,
                        const Laurent& lefschetz, bool central);

// {rank, simple_roots, simple_coroots, name}; throws std::invalid_argument
// with a field diagnostic on malformed input
std::shared_ptr<const RootDatum> root_datum_from_json(const json& j);
std::shared_ptr<const RootDatum> root_datum_from_file(const std::string& path);
json root_datum_to_json(const RootDatum& rd);

} // namespace hecke
