#include "qucode/representability.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "qucode/named_groups.hpp"

namespace qucode {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const Subgroup& h)
{
  Bits b((h.parent().order() + 63) / 64, 0);
  for (Element x : h.members())
    b[x / 64] |= std::uint64_t{1} << (x % 64);
  return b;
}

std::size_t intersect_into(const Bits& a, const Bits& b, Bits& out)
{
  std::size_t count = 0;
  out.resize(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) {
    out[w] = a[w] & b[w];
    count += static_cast<std::size_t>(std::popcount(out[w]));
  }
  return count;
}

// Partitions of e with parts in non-increasing order, reverse lexicographic.
void partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out)
{
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

// Combinations of {0..count-1} of size k in lexicographic order.
bool for_each_combination(std::size_t count, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit)
{
  if (k > count)
    return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    if (!visit(idx))
      return false;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == count - k + pos - 1)
      --pos;
    if (pos == 0)
      return true;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

bool swap_preserves(const IndexVector& target, std::size_t i, std::size_t j)
{
  const CoordinateSet bi = CoordinateSet{1} << i, bj = CoordinateSet{1} << j;
  for (CoordinateSet s = 1; s < target.indices.size(); ++s) {
    CoordinateSet t = s & ~(bi | bj);
    if (s & bi)
      t |= bj;
    if (s & bj)
      t |= bi;
    if (target.indices[s] != target.indices[t])
      return false;
  }
  return true;
}

struct Backtracker {
  const IndexVector& target;
  std::size_t order;
  std::vector<Bits> candidates;                           // subgroups of A as bitsets
  std::vector<std::vector<std::size_t>> per_coordinate;   // candidate ids matching singleton index
  std::vector<std::optional<std::size_t>> symmetric_prev; // previous coordinate in the same class
  std::vector<std::vector<CoordinateSet>> lower_subsets;  // nonempty S' within {0..i-1}, by size
  std::vector<Bits> meet;                                 // intersection per placed subset
  std::vector<std::size_t> chosen;
  std::uint64_t checked = 0;

  bool place(std::size_t i)
  {
    const std::size_t n = target.n;
    if (i == n)
      return true;
    const std::size_t floor = symmetric_prev[i] ? chosen[*symmetric_prev[i]] : 0;
    const CoordinateSet bit = CoordinateSet{1} << i;
    for (std::size_t c : per_coordinate[i]) {
      if (c < floor)
        continue;
      ++checked;
      meet[bit] = candidates[c];
      bool ok = true;
      for (CoordinateSet s : lower_subsets[i]) {
        const std::size_t size = intersect_into(meet[s], candidates[c], meet[s | bit]);
        if (size * target[s | bit] != order) {
          ok = false;
          break;
        }
      }
      if (!ok)
        continue;
      chosen[i] = c;
      if (place(i + 1))
        return true;
    }
    return false;
  }
};

}  // namespace

IndexVector index_vector(const FiniteGroup& g, const std::vector<Subgroup>& subs)
{
  if (subs.empty() || subs.size() > max_code_length)
    throw std::invalid_argument("index_vector needs between 1 and 31 subgroups");
  std::vector<CoordinateSet> masks(g.order(), 0);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i].parent().same_as(g))
      throw std::invalid_argument("subgroup belongs to a different group");
    for (Element x : subs[i].members())
      masks[x] |= CoordinateSet{1} << i;
  }
  IndexVector v;
  v.n = subs.size();
  v.indices.assign(std::size_t{1} << v.n, 1);
  for (CoordinateSet a = 1; a < v.indices.size(); ++a) {
    std::uint64_t count = 0;
    for (auto m : masks)
      count += (m & a) == a;
    v.indices[a] = g.order() / count;
  }
  return v;
}

std::vector<FiniteGroup> abelian_groups_of_order(std::size_t m, const Limits& limits)
{
  if (m == 0)
    throw std::invalid_argument("group order must be positive");
  if (m > limits.max_order)
    throw CapExceeded("abelian groups of order " + std::to_string(m) + " exceed the order cap");
  if (m == 1)
    return {cyclic_group(1)};

  const auto primes = factorize(m);
  std::vector<std::vector<std::vector<unsigned>>> options;
  for (auto [p, e] : primes) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> current;
    partitions(e, e, current, parts);
    options.push_back(std::move(parts));
  }

  std::vector<FiniteGroup> out;
  std::vector<std::size_t> pick(primes.size(), 0);
  while (true) {
    std::size_t length = 0;
    for (std::size_t k = 0; k < primes.size(); ++k)
      length = std::max(length, options[k][pick[k]].size());
    // invariant factor t (from the largest) multiplies the t-th largest prime powers
    std::vector<std::size_t> factors(length, 1);
    for (std::size_t k = 0; k < primes.size(); ++k) {
      const auto& part = options[k][pick[k]];
      for (std::size_t t = 0; t < part.size(); ++t) {
        for (unsigned r = 0; r < part[t]; ++r)
          factors[length - 1 - t] *= primes[k].first;
      }
    }
    std::vector<FiniteGroup> cyclics;
    for (auto d : factors)
      cyclics.push_back(cyclic_group(d));
    out.push_back(direct_product(cyclics));

    std::size_t k = primes.size();
    while (k > 0 && ++pick[k - 1] == options[k - 1].size()) {
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0)
      break;
  }
  return out;
}

RepresentationSearch find_abelian_representation(const FiniteGroup& g,
                                                 const std::vector<Subgroup>& subs,
                                                 const SearchOptions& options)
{
  if (g.order() > options.limits.max_search) {
    throw CapExceeded("representability search limited to order " +
                      std::to_string(options.limits.max_search) + ", group has order " +
                      std::to_string(g.order()));
  }
  if (subs.size() > options.max_subgroups) {
    throw CapExceeded("representability search limited to " + std::to_string(options.max_subgroups) +
                      " subgroups");
  }
  if (options.order_multiple == 0)
    throw std::invalid_argument("order_multiple must be positive");

  const IndexVector target = index_vector(g, subs);
  const std::size_t n = target.n;
  RepresentationSearch result;
  if (g.is_abelian() && options.self_representation) {
    result.representation = Representation{g, subs};
    return result;
  }

  const std::uint64_t full_index = target.indices.back();
  std::vector<std::size_t> orders{g.order()};
  const std::size_t bound = options.order_multiple * g.order();
  for (std::size_t m = 1; m <= bound; ++m) {
    if (bound % m == 0 && m % full_index == 0 && m != g.order())
      orders.push_back(m);
  }

  // coordinates that can be swapped without changing the target
  std::vector<std::optional<std::size_t>> symmetric_prev(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      if (swap_preserves(target, i, j)) {
        symmetric_prev[j] = i;
        break;
      }
    }
  }
  std::vector<std::vector<CoordinateSet>> lower_subsets(n);
  for (std::size_t i = 0; i < n; ++i)
    lower_subsets[i] = i ? subsets_by_size(i) : std::vector<CoordinateSet>{};

  for (std::size_t m : orders) {
    result.orders_searched.push_back(m);
    for (const FiniteGroup& a : abelian_groups_of_order(m, options.limits)) {
      const auto a_subs = all_subgroups(a, options.limits);
      Backtracker bt{target, m, {}, {}, symmetric_prev, lower_subsets, {}, {}, 0};
      for (const auto& h : a_subs)
        bt.candidates.push_back(to_bits(h));
      bt.per_coordinate.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < a_subs.size(); ++c) {
          if (a_subs[c].index() == target[CoordinateSet{1} << i])
            bt.per_coordinate[i].push_back(c);
        }
      }
      bt.meet.assign(std::size_t{1} << n, Bits{});
      bt.chosen.assign(n, 0);

      const bool found = bt.place(0);
      result.checked_candidates += bt.checked;
      if (!found)
        continue;

      Representation rep{a, {}};
      for (auto c : bt.chosen)
        rep.subgroups.push_back(a_subs[c]);
      if (index_vector(rep.abelian_group, rep.subgroups) != target)
        throw InvariantViolation("representation does not reproduce the target index vector");
      result.representation = std::move(rep);
      return result;
    }
  }
  return result;
}

std::optional<NonNilpotentWitness> check_non_nilpotent_witness(const FiniteGroup& g,
                                                               const WitnessOptions& options)
{
  const Limits& limits = options.search.limits;
  if (g.order() > limits.max_search) {
    throw CapExceeded("witness search limited to order " + std::to_string(limits.max_search));
  }
  if (is_nilpotent(g, limits))
    throw std::invalid_argument(g.label() + " is nilpotent; every Sylow subgroup is normal");

  const auto subs = all_subgroups(g, limits);
  std::optional<Subgroup> sylow;
  for (auto [p, e] : factorize(g.order())) {
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i)
      power *= p;
    for (const auto& s : subs) {
      if (s.order() == power && !is_normal(g, s)) {
        sylow = s;
        break;
      }
    }
    if (sylow)
      break;
  }
  if (!sylow)
    throw InvariantViolation("non-nilpotent group without a non-normal Sylow subgroup");

  std::vector<Subgroup> conjugates;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> image;
    for (Element h : sylow->members())
      image.push_back(g.conjugate(h, x));
    Subgroup c = Subgroup::from_closure(g, std::move(image));
    if (std::find(conjugates.begin(), conjugates.end(), c) == conjugates.end())
      conjugates.push_back(std::move(c));
  }
  std::sort(conjugates.begin(), conjugates.end());

  std::optional<NonNilpotentWitness> witness;
  std::uint64_t checked = 0;
  auto try_family = [&](std::vector<Subgroup> family) -> bool {
    if (checked >= options.family_budget)
      return false;
    ++checked;
    auto search = find_abelian_representation(g, family, options.search);
    if (!search.representation) {
      auto indices = index_vector(g, family);
      witness = NonNilpotentWitness{std::move(family), std::move(indices), checked};
      return false;
    }
    return true;
  };

  const std::size_t top = std::min({options.max_family, conjugates.size(), options.search.max_subgroups});
  for (std::size_t k = top; k >= 1 && !witness && checked < options.family_budget; --k) {
    for_each_combination(conjugates.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Subgroup> family;
      for (auto i : idx)
        family.push_back(conjugates[i]);
      return try_family(std::move(family));
    });
  }

  std::vector<Subgroup> proper;
  for (const auto& s : subs) {
    if (!s.is_trivial() && !s.is_whole())
      proper.push_back(s);
  }
  const std::size_t widest = std::min(options.max_family, options.search.max_subgroups);
  for (std::size_t k = 1; k <= widest && !witness && checked < options.family_budget; ++k) {
    for_each_combination(proper.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Subgroup> family;
      bool all_conjugates = true;
      for (auto i : idx) {
        family.push_back(proper[i]);
        all_conjugates = all_conjugates &&
                         std::find(conjugates.begin(), conjugates.end(), proper[i]) != conjugates.end();
      }
      if (all_conjugates)
        return true;  // tried above
      return try_family(std::move(family));
    });
  }
  return witness;
}

}  // namespace qucode
