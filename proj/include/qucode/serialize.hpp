#ifndef QUCODE_SERIALIZE_HPP
#define QUCODE_SERIALIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qucode/analysis.hpp"
#include "qucode/quasi_uniform.hpp"
#include "qucode/representability.hpp"

namespace qucode {

using nlohmann::json;

/// {n, group_spec, subgroup_specs, alphabets:[{kind,size,factors?}], codewords}
/// group_spec is null and subgroup_specs empty for codes without provenance.
json code_to_json(const QuasiUniformCode& code);

struct SerializedCode {
  std::optional<std::string> group_spec;
  std::vector<std::string> subgroup_specs;
  QuasiUniformCode code;
};

/// Throws ParseError on schema violations or an invalid code.
SerializedCode code_from_json(const json& j);

json subset_to_json(CoordinateSet set);  // 1-based coordinate list
json to_json(const QuasiUniformityReport& r);
json to_json(const EntropyProfile& p);
json to_json(const AlmostAffineReport& r);
json to_json(const RepresentationSearch& r);

}  // namespace qucode

#endif  // QUCODE_SERIALIZE_HPP
