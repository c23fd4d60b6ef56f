#ifndef QUCODE_GROUP_HPP
#define QUCODE_GROUP_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qucode/error.hpp"

namespace qucode {

/// Row/column index into a Cayley table.
using Element = std::uint32_t;

/**
 * A finite group given by its full Cayley table.
 *
 * The table is validated on construction: it must be a Latin square with a
 * two-sided identity, and the operation must be associative. Associativity is
 * checked with Light's test over a generating set, which is exhaustive (it
 * implies associativity for every triple) at O(|G|^2 * |gens|) cost.
 *
 * Instances are cheap handles to shared immutable data; copies compare equal
 * under same_as().
 */
class FiniteGroup {
 public:
  /// cayley is row-major, cayley[a * n + b] = a*b. label is a display name
  /// such as "C3xC3"; names must be unique.
  FiniteGroup(std::vector<Element> cayley, std::vector<std::string> names,
              std::string label = {});

  std::size_t order() const { return data_->order; }
  Element identity() const { return data_->identity; }
  Element mul(Element a, Element b) const { return data_->cayley[a * data_->order + b]; }
  Element inv(Element a) const { return data_->inverse[a]; }
  Element conjugate(Element h, Element g) const { return mul(mul(g, h), inv(g)); }

  const std::string& name(Element a) const { return data_->names.at(a); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& label() const { return data_->label; }
  std::span<const Element> table() const { return data_->cayley; }

  /// Looks up an element by display name, ignoring ASCII case and whitespace.
  std::optional<Element> find(std::string_view name) const;

  std::size_t element_order(Element a) const;
  bool is_abelian() const { return data_->abelian; }

  /// True when both handles refer to the same underlying table.
  bool same_as(const FiniteGroup& other) const { return data_ == other.data_; }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> cayley;
    std::vector<Element> inverse;
    std::vector<std::string> names;
    std::string label;
    Element identity = 0;
    bool abelian = true;
  };
  std::shared_ptr<const Data> data_;
};

/// A subgroup of a parent group, stored as a sorted member list.
class Subgroup {
 public:
  /// Validates identity, closure and inverses. Members need not be sorted.
  Subgroup(FiniteGroup parent, std::vector<Element> members);

  /// For member sets produced by closure; skips the O(|H|^2) validation.
  static Subgroup from_closure(FiniteGroup parent, std::vector<Element> members);

  const FiniteGroup& parent() const { return parent_; }
  std::span<const Element> members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_.order() / members_.size(); }
  bool contains(Element a) const { return a < mask_.size() && mask_[a]; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_.order(); }
  bool is_subset_of(const Subgroup& other) const;

  /// Equal iff same parent table and same members.
  friend bool operator==(const Subgroup& a, const Subgroup& b);
  /// Canonical order: by order, then lexicographically by members.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  struct Trusted {};
  Subgroup(FiniteGroup parent, std::vector<Element> members, Trusted);

  FiniteGroup parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

/// Left cosets gH in canonical order (sorted by smallest member index).
struct Cosets {
  std::vector<std::vector<Element>> blocks;
  std::vector<std::uint32_t> coset_of;  // element -> block index
};

struct QuotientGroup {
  FiniteGroup parent;
  Subgroup modulus;
  Cosets cosets;
  FiniteGroup group;  // element k of `group` is cosets.blocks[k]
};

/// Invariant-factor decomposition d_1 | d_2 | ... | d_k of an abelian group.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;
  std::vector<Element> generators;                   // generator of each cyclic factor
  std::vector<std::vector<std::uint64_t>> residues;  // element -> residue tuple

  /// Mixed-radix code of a residue tuple, last factor least significant.
  std::uint64_t encode(std::span<const std::uint64_t> tuple) const;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

/// Smallest subgroup containing gens. Throws std::out_of_range on bad indices.
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);

/// Every subgroup of g in canonical order. Throws CapExceeded above
/// limits.max_enumeration.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

/// Throws std::invalid_argument on an empty list or mixed parents.
Subgroup intersect_subgroups(std::span<const Subgroup> subs);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

Cosets left_cosets(const FiniteGroup& g, const Subgroup& h);

/// Throws std::invalid_argument when h is not normal.
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& h);

/// Throws std::invalid_argument when g is not abelian.
AbelianInvariants abelian_invariants(const FiniteGroup& g);

bool is_nilpotent(const FiniteGroup& g, const Limits& limits = {});

/// Sylow p-subgroups of g for a prime p dividing |g|, canonical order.
std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, std::uint64_t p,
                                      const Limits& limits = {});

/// A short generating set, picked greedily in element order.
std::vector<Element> generators_of(const Subgroup& h);

/// Display form like "<(1,0)>" or "<r^2,s>".
std::string describe(const Subgroup& h);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

}  // namespace qucode

#endif  // QUCODE_GROUP_HPP
