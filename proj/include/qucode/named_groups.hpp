#ifndef QUCODE_NAMED_GROUPS_HPP
#define QUCODE_NAMED_GROUPS_HPP

#include <string_view>
#include <vector>

#include "qucode/group.hpp"

namespace qucode {

/**
 * Builds a group from a spec string:
 *
 *   spec := atom ("x" atom)*
 *   atom := "C" n | "D" n | "S" n | "A" n | "Q8" | "Dic" n
 *
 * Case-insensitive, no whitespace. Every family is named by its ORDER except
 * S n and A n (degree n):
 *
 *   C n    cyclic of order n, elements "0".."n-1"
 *   D n    dihedral of order n = 2m, <r,s | r^m = s^2 = 1, rs = sr^-1>,
 *          elements "1","r",...,"r^(m-1)","s","rs",...,"r^(m-1)s"
 *   S n    symmetric group on {1..n} in cycle notation, "()" first; products
 *          compose right to left ((12)(13) = (132))
 *   A n    alternating subgroup of S n
 *   Q8     quaternions "1","-1","i","-i","j","-j","k","-k"
 *   Dic n  dicyclic of order n = 4m, <a,x | a^2m = 1, x^2 = a^m, xax^-1 = a^-1>
 *
 * Products are ordered lexicographically, first factor most significant, and
 * elements are named "(g1,g2,...)".
 *
 * Throws ParseError on a malformed spec and CapExceeded when the order would
 * exceed limits.max_order.
 */
FiniteGroup build_named_group(std::string_view spec, const Limits& limits = {});

FiniteGroup cyclic_group(std::size_t n);

/// Direct product with lexicographic element order and "(a,b,...)" names.
/// A single factor is returned unchanged.
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors, std::string label = {});

}  // namespace qucode

#endif  // QUCODE_NAMED_GROUPS_HPP
