#ifndef QUCODE_QUASI_UNIFORM_HPP
#define QUCODE_QUASI_UNIFORM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qucode/group.hpp"

namespace qucode {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// A set of coordinates {0..n-1} as a bitmask. Lengths are limited to 31.
using CoordinateSet = std::uint32_t;

constexpr std::size_t max_code_length = 31;

/// Nonempty subsets of {0..n-1}, by size and then lexicographically.
std::vector<CoordinateSet> subsets_by_size(std::size_t n);

/// Coordinates of a subset, ascending and 0-based.
std::vector<std::size_t> coordinates_of(CoordinateSet set);

/// "{1,2}" using 1-based coordinate numbers.
std::string format_subset(CoordinateSet set);

/// The |G| x n table whose (g, i) cell identifies the left coset gG_i.
struct CosetTable {
  FiniteGroup group;
  std::vector<Subgroup> subgroups;
  std::vector<Cosets> cosets;                // per column
  std::vector<std::vector<Symbol>> cells;    // cells[g][i] = coset id of g in column i

  std::size_t length() const { return subgroups.size(); }
};

enum class AlphabetKind { CanonicalAbelian, QuotientGroup, OpaqueLabels };

std::string to_string(AlphabetKind kind);
AlphabetKind alphabet_kind_from_string(const std::string& s);

struct CoordinateAlphabet {
  AlphabetKind kind = AlphabetKind::OpaqueLabels;
  std::size_t size = 0;
  std::vector<std::string> label_names;
  std::vector<std::uint64_t> factors;  // CanonicalAbelian only
  // Group law on symbols for CanonicalAbelian (componentwise addition) and
  // QuotientGroup (the quotient's table); empty for opaque labels.
  std::optional<FiniteGroup> law;
};

/// Where a code came from: the group, its subgroups, and for each codeword
/// the first group element (in index order) producing it.
struct Provenance {
  FiniteGroup group;
  std::vector<Subgroup> subgroups;
  std::vector<Element> representatives;
};

class QuasiUniformCode {
 public:
  /// An arbitrary code; codewords must be distinct and fit their alphabets.
  static QuasiUniformCode from_codewords(std::vector<Word> codewords,
                                         std::vector<CoordinateAlphabet> alphabets);

  std::size_t length() const { return alphabets_.size(); }
  std::size_t size() const { return codewords_.size(); }
  const std::vector<Word>& codewords() const { return codewords_; }
  const std::vector<CoordinateAlphabet>& alphabets() const { return alphabets_; }
  const std::optional<Provenance>& provenance() const { return provenance_; }
  /// True iff every defining subgroup is normal.
  bool group_structured() const { return group_structured_; }

 private:
  friend QuasiUniformCode reduce_code(const CosetTable& t);
  friend QuasiUniformCode label_coordinates(const QuasiUniformCode& code);

  QuasiUniformCode() = default;
  void check_invariants() const;

  std::vector<Word> codewords_;
  std::vector<CoordinateAlphabet> alphabets_;
  std::optional<Provenance> provenance_;
  bool group_structured_ = false;
};

/// Rejects duplicate subgroups, mixed parents and n outside [1, 31] with
/// std::invalid_argument.
CosetTable build_coset_table(const FiniteGroup& g, const std::vector<Subgroup>& subs);

/**
 * Distinct rows of the table, first occurrence kept. Symbols are coset ids
 * and the alphabets are opaque. Throws InvariantViolation if the number of
 * codewords differs from |G|/|G_N|, or (all subgroups normal, G_N nontrivial)
 * if rebuilding the code inside G/G_N gives a different word list.
 */
QuasiUniformCode reduce_code(const CosetTable& t);

/**
 * Relabels each coordinate whose subgroup G_i is normal by G/G_i: residue
 * tuples of its invariant-factor decomposition when the quotient is abelian
 * (so the identity coset becomes 0), quotient elements otherwise. Coordinates
 * with non-normal subgroups keep their coset ids. Codes without provenance
 * are returned unchanged.
 */
QuasiUniformCode label_coordinates(const QuasiUniformCode& code);

/// build_coset_table + reduce_code + label_coordinates.
QuasiUniformCode construct_code(const FiniteGroup& g, const std::vector<Subgroup>& subs);

/// Projection of the code onto `coords`, with the number of codewords
/// mapping to each tuple. Throws std::invalid_argument on an empty set or a
/// coordinate past the code length.
std::map<Word, std::size_t> induced_support(const QuasiUniformCode& code, CoordinateSet coords);

}  // namespace qucode

#endif  // QUCODE_QUASI_UNIFORM_HPP
