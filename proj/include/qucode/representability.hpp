#ifndef QUCODE_REPRESENTABILITY_HPP
#define QUCODE_REPRESENTABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qucode/group.hpp"
#include "qucode/quasi_uniform.hpp"

namespace qucode {

/// Indices [G : G_A] for every nonempty subset A of the chosen subgroups.
struct IndexVector {
  std::size_t n = 0;
  std::vector<std::uint64_t> indices;  // indexed by CoordinateSet; [0] = 1

  std::uint64_t operator[](CoordinateSet a) const { return indices.at(a); }
  friend bool operator==(const IndexVector&, const IndexVector&) = default;
};

/// An abelian group with subgroups reproducing a target index vector.
struct Representation {
  FiniteGroup abelian_group;
  std::vector<Subgroup> subgroups;
};

struct RepresentationSearch {
  std::optional<Representation> representation;
  std::uint64_t checked_candidates = 0;  // subgroup placements tried
  std::vector<std::size_t> orders_searched;
};

struct SearchOptions {
  Limits limits{};
  std::size_t max_subgroups = 5;
  // Candidate orders |A| are the divisors of order_multiple * |G| that are
  // multiples of [G : G_N], tried with |A| = |G| first. 1 restricts to |A| = |G|.
  std::size_t order_multiple = 1;
  // An abelian G is returned as its own representation without searching.
  bool self_representation = true;
};

IndexVector index_vector(const FiniteGroup& g, const std::vector<Subgroup>& subs);

/// One abelian group per isomorphism class, named by invariant factors
/// ("C2xC4"). Classes are listed by per-prime exponent partitions, the
/// smallest prime's partitions varying slowest, each partition in reverse
/// lexicographic order (m = 8 gives C8, C2xC4, C2xC2xC2).
std::vector<FiniteGroup> abelian_groups_of_order(std::size_t m, const Limits& limits = {});

/**
 * Exhaustive backtracking search for (A, A_1..A_n) with [A : A_S] = [G : G_S]
 * for all nonempty S. Coordinates are placed in order; after placing
 * coordinate i every subset whose largest member is i is checked. Where a
 * transposition of coordinates leaves the target invariant, the tuple is
 * searched in non-decreasing subgroup order only. Throws CapExceeded above
 * limits.max_search or max_subgroups.
 */
RepresentationSearch find_abelian_representation(const FiniteGroup& g,
                                                 const std::vector<Subgroup>& subs,
                                                 const SearchOptions& options = {});

struct NonNilpotentWitness {
  std::vector<Subgroup> subgroups;
  IndexVector indices;
  std::uint64_t families_checked = 0;
};

struct WitnessOptions {
  SearchOptions search{};
  std::size_t max_family = 3;
  std::uint64_t family_budget = 2000;
};

/**
 * Looks for a subgroup family of a non-nilpotent group with no abelian
 * representation. Families of conjugates of the first non-normal Sylow
 * subgroup are tried first, largest families first; then families of
 * proper nontrivial subgroups of increasing size. Returns nullopt when the
 * budget runs out. Throws std::invalid_argument for nilpotent input.
 */
std::optional<NonNilpotentWitness> check_non_nilpotent_witness(const FiniteGroup& g,
                                                               const WitnessOptions& options = {});

}  // namespace qucode

#endif  // QUCODE_REPRESENTABILITY_HPP
