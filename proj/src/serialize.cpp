#include "qucode/serialize.hpp"

#include "qucode/named_groups.hpp"
#include "qucode/selection.hpp"

namespace qucode {

json code_to_json(const QuasiUniformCode& code)
{
  json j;
  j["n"] = code.length();
  if (const auto& prov = code.provenance()) {
    j["group_spec"] = prov->group.label();
    json specs = json::array();
    for (const auto& h : prov->subgroups)
      specs.push_back(gens_spec(h));
    j["subgroup_specs"] = std::move(specs);
  } else {
    j["group_spec"] = nullptr;
    j["subgroup_specs"] = json::array();
  }
  json alphabets = json::array();
  for (const auto& a : code.alphabets()) {
    json aj{{"kind", to_string(a.kind)}, {"size", a.size}};
    if (a.kind == AlphabetKind::CanonicalAbelian)
      aj["factors"] = a.factors;
    alphabets.push_back(std::move(aj));
  }
  j["alphabets"] = std::move(alphabets);
  j["codewords"] = code.codewords();
  return j;
}

SerializedCode code_from_json(const json& j)
{
  try {
    std::optional<std::string> group_spec;
    if (j.contains("group_spec") && !j.at("group_spec").is_null())
      group_spec = j.at("group_spec").get<std::string>();
    std::vector<std::string> subgroup_specs;
    if (j.contains("subgroup_specs"))
      subgroup_specs = j.at("subgroup_specs").get<std::vector<std::string>>();

    std::vector<CoordinateAlphabet> alphabets;
    for (const auto& aj : j.at("alphabets")) {
      CoordinateAlphabet a;
      a.kind = alphabet_kind_from_string(aj.at("kind").get<std::string>());
      a.size = aj.at("size").get<std::size_t>();
      if (a.kind == AlphabetKind::CanonicalAbelian) {
        a.factors = aj.at("factors").get<std::vector<std::uint64_t>>();
        std::vector<FiniteGroup> cyclics;
        std::uint64_t product = 1;
        for (auto d : a.factors) {
          cyclics.push_back(cyclic_group(d));
          product *= d;
        }
        if (product != a.size)
          throw ParseError("alphabet factors do not multiply to its size");
        if (cyclics.empty())
          cyclics.push_back(cyclic_group(1));
        a.law = direct_product(cyclics);
        a.label_names = a.law->names();
      } else {
        for (std::size_t s = 0; s < a.size; ++s)
          a.label_names.push_back(std::to_string(s));
      }
      alphabets.push_back(std::move(a));
    }
    if (j.contains("n") && j.at("n").get<std::size_t>() != alphabets.size())
      throw ParseError("field n disagrees with the number of alphabets");

    auto words = j.at("codewords").get<std::vector<Word>>();
    return {std::move(group_spec), std::move(subgroup_specs),
            QuasiUniformCode::from_codewords(std::move(words), std::move(alphabets))};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed code JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid code: ") + e.what());
  }
}

json subset_to_json(CoordinateSet set)
{
  json out = json::array();
  for (auto i : coordinates_of(set))
    out.push_back(i + 1);
  return out;
}

json to_json(const QuasiUniformityReport& r)
{
  json j{{"ok", r.ok}};
  if (r.witness) {
    j["witness"] = {
        {"subset", subset_to_json(r.witness->subset)},
        {"tuples", {r.witness->first_tuple, r.witness->second_tuple}},
        {"multiplicities", {r.witness->first_count, r.witness->second_count}},
    };
  }
  return j;
}

json to_json(const EntropyProfile& p)
{
  json out = json::array();
  for (CoordinateSet a : subsets_by_size(p.n))
    out.push_back({{"subset", subset_to_json(a)}, {"support", p[a]}});
  return out;
}

json to_json(const AlmostAffineReport& r)
{
  json j{{"ok", r.ok}, {"q", r.q}};
  if (r.witness) {
    j["witness"] = subset_to_json(*r.witness);
    j["reason"] = r.reason;
  }
  return j;
}

json to_json(const RepresentationSearch& r)
{
  json j{{"representable", r.representation.has_value()},
         {"checked_candidates", r.checked_candidates},
         {"orders_searched", r.orders_searched}};
  if (r.representation) {
    json subs = json::array();
    for (const auto& h : r.representation->subgroups)
      subs.push_back(gens_spec(h));
    j["witness"] = {{"group_spec", r.representation->abelian_group.label()}, {"subgroups", subs}};
  }
  return j;
}

}  // namespace qucode
