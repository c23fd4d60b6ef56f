#ifndef QUCODE_RENDER_HPP
#define QUCODE_RENDER_HPP

#include <string>

#include "qucode/quasi_uniform.hpp"

namespace qucode {

/// Rows are group elements, columns the subgroups. A cell shows the coset as
/// its member list, or the subgroup itself for the identity coset.
std::string render_coset_table(const CosetTable& t);

/// Alphabet header line followed by one row per codeword, labels by name.
std::string render_code(const QuasiUniformCode& code);

/// Short descriptor such as "C3", "C2xC4", "D12/<r^3> (nonabelian)" or "opaque[3]".
std::string describe_alphabet(const CoordinateAlphabet& a);

}  // namespace qucode

#endif  // QUCODE_RENDER_HPP
