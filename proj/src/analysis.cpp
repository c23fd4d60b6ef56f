#include "qucode/analysis.hpp"

#include <bit>
#include <limits>
#include <set>
#include <stdexcept>

namespace qucode {

namespace {

__extension__ using wide = __int128;

bool is_power_of(std::uint64_t value, std::uint64_t q)
{
  if (value == 0)
    return false;
  while (value % q == 0)
    value /= q;
  return value == 1;
}

std::uint64_t projection_size(const QuasiUniformCode& code, CoordinateSet a)
{
  const auto idx = coordinates_of(a);
  std::set<Word> seen;
  Word key(idx.size());
  for (const auto& w : code.codewords()) {
    for (std::size_t j = 0; j < idx.size(); ++j)
      key[j] = w[idx[j]];
    seen.insert(key);
  }
  return seen.size();
}

// For each element, the set of subgroups containing it. |G_A| is then the
// number of elements whose mask covers A.
std::vector<CoordinateSet> containment_masks(const FiniteGroup& g, const std::vector<Subgroup>& subs)
{
  std::vector<CoordinateSet> masks(g.order(), 0);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (Element x : subs[i].members())
      masks[x] |= CoordinateSet{1} << i;
  }
  return masks;
}

std::uint64_t intersection_order(const std::vector<CoordinateSet>& masks, CoordinateSet a)
{
  std::uint64_t count = 0;
  for (auto m : masks)
    count += (m & a) == a;
  return count;
}

}  // namespace

QuasiUniformityReport verify_quasi_uniform(const QuasiUniformCode& code)
{
  for (CoordinateSet a : subsets_by_size(code.length())) {
    const auto support = induced_support(code, a);
    const auto& [first_tuple, first_count] = *support.begin();
    for (const auto& [tuple, count] : support) {
      if (count != first_count) {
        return {false, QuasiUniformityWitness{a, first_tuple, tuple, first_count, count}};
      }
    }
  }
  return {true, std::nullopt};
}

EntropyProfile entropy_profile(const QuasiUniformCode& code)
{
  const auto report = verify_quasi_uniform(code);
  if (!report.ok) {
    throw std::invalid_argument("code is not quasi-uniform: projection onto " +
                                format_subset(report.witness->subset) + " is not uniform");
  }

  const std::size_t n = code.length();
  EntropyProfile profile;
  profile.n = n;
  profile.support_sizes.assign(std::size_t{1} << n, 0);
  profile.support_sizes[0] = 1;
  for (CoordinateSet a : subsets_by_size(n))
    profile.support_sizes[a] = projection_size(code, a);

  if (const auto& prov = code.provenance()) {
    const auto masks = containment_masks(prov->group, prov->subgroups);
    for (CoordinateSet a : subsets_by_size(n)) {
      if (profile.support_sizes[a] * intersection_order(masks, a) != prov->group.order()) {
        throw InvariantViolation("support size of " + format_subset(a) + " differs from |G|/|G_A|");
      }
    }
  }
  return profile;
}

WeightEnumerator weight_enumerator_formula(const EntropyProfile& profile)
{
  const std::size_t n = profile.n;
  if (profile.support_sizes.size() != (std::size_t{1} << n))
    throw std::invalid_argument("entropy profile does not cover every subset");
  const std::uint64_t full = profile.full();

  // ratio sums per subset size, including the empty subset
  std::vector<wide> by_size(n + 1, 0);
  for (CoordinateSet a = 0; a < profile.support_sizes.size(); ++a) {
    const std::uint64_t s = profile.support_sizes[a];
    if (s == 0 || full % s != 0) {
      throw std::domain_error("support size " + std::to_string(s) + " of " + format_subset(a) +
                              " does not divide |C| = " + std::to_string(full));
    }
    by_size[static_cast<std::size_t>(std::popcount(a))] += full / s;
  }

  // binom[k][i] for k <= n
  std::vector<std::vector<wide>> binom(n + 1, std::vector<wide>(n + 1, 0));
  for (std::size_t k = 0; k <= n; ++k) {
    binom[k][0] = 1;
    for (std::size_t i = 1; i <= k; ++i)
      binom[k][i] = binom[k - 1][i - 1] + (i <= k - 1 ? binom[k - 1][i] : 0);
  }

  // (x-y)^k y^(n-k) = sum_i C(k,i) (-1)^(k-i) x^i y^(n-i)
  std::vector<wide> acc(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      const wide term = by_size[k] * binom[k][i];
      acc[n - i] += ((k - i) % 2) ? -term : term;
    }
  }

  WeightEnumerator w;
  for (auto c : acc) {
    if (c < 0 || c > std::numeric_limits<std::int64_t>::max())
      throw std::domain_error("weight enumerator coefficient out of range; profile is not quasi-uniform");
    w.coeffs.push_back(static_cast<std::int64_t>(c));
  }
  return w;
}

DistanceProfile distance_profile(const QuasiUniformCode& code, std::size_t center)
{
  if (center >= code.size())
    throw std::out_of_range("center index " + std::to_string(center) + " out of range for " +
                            std::to_string(code.size()) + " codewords");
  DistanceProfile p{center, std::vector<std::uint64_t>(code.length() + 1, 0)};
  const Word& c = code.codewords()[center];
  for (const auto& w : code.codewords()) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      d += w[i] != c[i];
    ++p.counts[d];
  }
  return p;
}

WeightEnumerator weight_enumerator_census(const QuasiUniformCode& code)
{
  const auto& words = code.codewords();
  std::vector<std::uint64_t> pairs(code.length() + 1, 0);
  for (const auto& a : words) {
    for (const auto& b : words) {
      std::size_t d = 0;
      for (std::size_t i = 0; i < code.length(); ++i)
        d += a[i] != b[i];
      ++pairs[d];
    }
  }
  WeightEnumerator w;
  for (auto c : pairs) {
    if (c % words.size() != 0)
      throw std::domain_error("distance census is not divisible by the code size");
    w.coeffs.push_back(static_cast<std::int64_t>(c / words.size()));
  }
  return w;
}

bool is_distance_invariant(const QuasiUniformCode& code)
{
  const auto first = distance_profile(code, 0).counts;
  for (std::size_t c = 1; c < code.size(); ++c) {
    if (distance_profile(code, c).counts != first)
      return false;
  }
  return true;
}

std::size_t min_distance(const QuasiUniformCode& code)
{
  if (code.size() < 2)
    throw std::invalid_argument("minimum distance needs at least two codewords");
  const auto& words = code.codewords();
  std::size_t best = code.length();
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      std::size_t d = 0;
      for (std::size_t i = 0; i < code.length() && d < best; ++i)
        d += words[a][i] != words[b][i];
      best = std::min(best, d);
    }
  }
  return best;
}

std::size_t min_distance_group(const FiniteGroup& g, const std::vector<Subgroup>& subs)
{
  if (subs.empty() || subs.size() > max_code_length)
    throw std::invalid_argument("min_distance_group needs between 1 and 31 subgroups");
  for (const auto& h : subs) {
    if (!h.parent().same_as(g))
      throw std::invalid_argument("subgroup belongs to a different group");
    if (!is_normal(g, h))
      throw std::invalid_argument("min_distance_group requires normal subgroups; " + describe(h) +
                                  " is not normal");
  }
  const std::size_t n = subs.size();
  const auto masks = containment_masks(g, subs);
  const CoordinateSet all = static_cast<CoordinateSet>((std::uint64_t{1} << n) - 1);
  const std::uint64_t meet = intersection_order(masks, all);

  std::size_t largest = 0;
  for (CoordinateSet a : subsets_by_size(n)) {
    const auto size = static_cast<std::size_t>(std::popcount(a));
    if (size > largest && intersection_order(masks, a) > meet)
      largest = size;
  }
  return n - largest;
}

AlmostAffineReport is_almost_affine(const QuasiUniformCode& code, std::uint64_t q)
{
  if (q < 2)
    throw std::invalid_argument("almost-affine check needs q >= 2");
  AlmostAffineReport r;
  r.q = q;
  for (std::size_t i = 0; i < code.length(); ++i) {
    if (!is_power_of(code.alphabets()[i].size, q)) {
      r.ok = false;
      r.witness = CoordinateSet{1} << i;
      r.reason = "alphabet of coordinate " + std::to_string(i + 1) + " has size " +
                 std::to_string(code.alphabets()[i].size) + ", not a power of " + std::to_string(q);
      return r;
    }
  }
  for (CoordinateSet a : subsets_by_size(code.length())) {
    const auto s = projection_size(code, a);
    if (!is_power_of(s, q)) {
      r.ok = false;
      r.witness = a;
      r.reason = "projection onto " + format_subset(a) + " has " + std::to_string(s) +
                 " words, not a power of " + std::to_string(q);
      return r;
    }
  }
  return r;
}

AlmostAffineReport is_almost_affine(const QuasiUniformCode& code)
{
  const std::size_t q = code.alphabets().front().size;
  for (const auto& a : code.alphabets()) {
    if (a.size != q)
      throw std::invalid_argument("alphabet sizes differ; pass q explicitly");
  }
  if (q < 2)
    throw std::invalid_argument("alphabet of size 1; pass q explicitly");
  return is_almost_affine(code, q);
}

std::string format_polynomial(const WeightEnumerator& w)
{
  const std::size_t n = w.length();
  std::string out;
  for (std::size_t j = 0; j <= n; ++j) {
    std::int64_t c = w.coeffs[j];
    if (c == 0)
      continue;
    if (!out.empty())
      out += c < 0 ? " - " : " + ";
    else if (c < 0)
      out += "-";
    const std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);

    std::vector<std::string> parts;
    const std::size_t xd = n - j, yd = j;
    if (mag != 1 || (xd == 0 && yd == 0))
      parts.push_back(std::to_string(mag));
    if (xd)
      parts.push_back(xd == 1 ? "x" : "x^" + std::to_string(xd));
    if (yd)
      parts.push_back(yd == 1 ? "y" : "y^" + std::to_string(yd));
    for (std::size_t k = 0; k < parts.size(); ++k)
      out += (k ? "*" : "") + parts[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace qucode
