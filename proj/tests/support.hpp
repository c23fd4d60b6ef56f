#ifndef QUCODE_TESTS_SUPPORT_HPP
#define QUCODE_TESTS_SUPPORT_HPP

// Independent oracles and a seeded instance generator shared by the unit,
// property and acceptance tests. Nothing here calls the library routine it
// is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qucode/group.hpp"
#include "qucode/named_groups.hpp"
#include "qucode/quasi_uniform.hpp"

namespace qucode::testing {

/// Number of subsets of G closed under multiplication; each one that holds
/// the identity is a subgroup since G is finite.
inline std::size_t count_subgroups_by_closure(const FiniteGroup& g)
{
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> g.identity() & 1))
      continue;
    bool closed = true;
    for (Element a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1))
        continue;
      for (Element b = 0; b < n && closed; ++b)
        closed = !(mask >> b & 1) || (mask >> g.mul(a, b) & 1);
    }
    count += closed;
  }
  return count;
}

/// Rows of the coset table as explicit sets of elements, deduplicated.
inline std::set<std::vector<std::vector<Element>>> coset_rows_oracle(const FiniteGroup& g,
                                                                     const std::vector<Subgroup>& subs)
{
  std::set<std::vector<std::vector<Element>>> rows;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<std::vector<Element>> row;
    for (const auto& h : subs) {
      std::vector<Element> coset;
      for (auto m : h.members())
        coset.push_back(g.mul(x, m));
      std::sort(coset.begin(), coset.end());
      row.push_back(std::move(coset));
    }
    rows.insert(std::move(row));
  }
  return rows;
}

inline std::size_t hamming(const Word& a, const Word& b)
{
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d += a[i] != b[i];
  return d;
}

/// Pairwise Hamming census divided by |C|.
inline std::vector<std::int64_t> census_oracle(const std::vector<Word>& words, std::size_t n)
{
  std::vector<std::int64_t> counts(n + 1, 0);
  for (const auto& a : words)
    for (const auto& b : words)
      ++counts[hamming(a, b)];
  for (auto& c : counts)
    c /= static_cast<std::int64_t>(words.size());
  return counts;
}

inline std::size_t projection_size_oracle(const std::vector<Word>& words, CoordinateSet a)
{
  std::set<Word> seen;
  for (const auto& w : words) {
    Word p;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (a >> i & 1)
        p.push_back(w[i]);
    seen.insert(p);
  }
  return seen.size();
}

/// Order of the intersection of the selected subgroups, counted element by element.
inline std::size_t intersection_order_oracle(const FiniteGroup& g, const std::vector<Subgroup>& subs,
                                             CoordinateSet a)
{
  std::size_t count = 0;
  for (Element x = 0; x < g.order(); ++x) {
    bool in_all = true;
    for (std::size_t i = 0; i < subs.size() && in_all; ++i)
      if (a >> i & 1)
        in_all = subs[i].contains(x);
    count += in_all;
  }
  return count;
}

inline bool normal_oracle(const FiniteGroup& g, const Subgroup& h)
{
  for (Element x = 0; x < g.order(); ++x)
    for (auto m : h.members())
      if (!h.contains(g.mul(g.mul(x, m), g.inv(x))))
        return false;
  return true;
}

inline bool is_prime_power(std::size_t n)
{
  if (n < 2)
    return false;
  std::size_t p = 2;
  while (n % p)
    ++p;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

inline std::size_t smallest_prime_factor(std::size_t n)
{
  std::size_t p = 2;
  while (n % p)
    ++p;
  return p;
}

enum class Family { Arbitrary, AllNormal, IndexP };

inline const char* family_name(Family f)
{
  switch (f) {
    case Family::Arbitrary: return "arbitrary";
    case Family::AllNormal: return "all-normal";
    case Family::IndexP: return "index-p";
  }
  return "?";
}

struct Instance {
  std::string group_spec;
  Family family;
  FiniteGroup group;
  std::vector<Subgroup> subgroups;
};

/// Named groups of order at most 64 covering every family of the grammar.
inline const std::vector<std::string>& suite_groups()
{
  static const std::vector<std::string> specs{
      "c2",    "c5",    "c12",    "c2xc2", "c2xc4",  "c3xc3", "c2xc2xc2", "c4xc4", "c5xc5",
      "c2xc6", "c8xc8", "d6",     "d8",    "d12",    "d16",   "d20",      "d32",   "s3",
      "s4",    "a4",    "a5",     "q8",    "dic12",  "dic16", "dic20",    "c2xs3", "c3xs3",
      "c2xq8", "c2xd8", "c2xa4",  "c3xq8", "c27",    "c3xc9", "c2xc2xc4", "dic8",  "c7xc7"};
  return specs;
}

/// Seeded instances cycling through groups and subgroup families. The index-p
/// family is used for p-groups only; other groups draw an arbitrary family
/// in its place.
inline std::vector<Instance> make_suite(std::uint64_t seed, std::size_t count)
{
  std::mt19937_64 rng(seed);
  const auto& specs = suite_groups();
  std::map<std::string, std::pair<FiniteGroup, std::vector<Subgroup>>> cache;
  std::vector<Instance> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::string& spec = specs[k % specs.size()];
    auto it = cache.find(spec);
    if (it == cache.end()) {
      FiniteGroup g = build_named_group(spec);
      auto subs = all_subgroups(g);
      it = cache.emplace(spec, std::make_pair(g, std::move(subs))).first;
    }
    const FiniteGroup& g = it->second.first;
    const auto& lattice = it->second.second;

    Family fam = static_cast<Family>((k / specs.size() + k) % 3);
    if (fam == Family::IndexP && !is_prime_power(g.order()))
      fam = Family::Arbitrary;

    std::vector<Subgroup> pool;
    const std::size_t p = smallest_prime_factor(g.order());
    for (const auto& h : lattice) {
      if (fam == Family::AllNormal && !normal_oracle(g, h))
        continue;
      if (fam == Family::IndexP && h.index() != p)
        continue;
      pool.push_back(h);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t cap = fam == Family::IndexP ? 6 : 4;
    std::size_t take = std::min(pool.size(), cap);
    if (fam != Family::IndexP)
      take = std::uniform_int_distribution<std::size_t>(1, take)(rng);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(take), pool.end());
    out.push_back({spec, fam, g, std::move(pool)});
  }
  return out;
}

inline std::string describe_instance(const Instance& inst)
{
  std::string s = inst.group_spec + " [" + family_name(inst.family) + "]";
  for (const auto& h : inst.subgroups)
    s += " " + describe(h);
  return s;
}

}  // namespace qucode::testing

#endif  // QUCODE_TESTS_SUPPORT_HPP
