#ifndef QUCODE_SELECTION_HPP
#define QUCODE_SELECTION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qucode/group.hpp"

namespace qucode {

/**
 * Parses a subgroup selection. Items are separated by '|'; each item is
 *
 *   gens:<name>;<name>;...   subgroup generated by the named elements
 *   all-index:<k>            every subgroup of index k
 *   all-nontrivial           every subgroup other than {e} and G
 *   all-normal-proper        every normal subgroup other than G
 *
 * Selectors expand in canonical subgroup order. "gens:" alone is the trivial
 * subgroup. Throws ParseError on unknown items or element names.
 */
std::vector<Subgroup> select_subgroups(const FiniteGroup& g, std::string_view selection,
                                       const Limits& limits = {});

/// "gens:a;b" form of a subgroup, parseable by select_subgroups.
std::string gens_spec(const Subgroup& h);

}  // namespace qucode

#endif  // QUCODE_SELECTION_HPP
