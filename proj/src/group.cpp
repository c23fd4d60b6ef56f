#include "qucode/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace qucode {

namespace {

std::string normalize_name(std::string_view s)
{
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

// Extends the subgroup held in (mask, members) by the elements in extra. The
// existing members must already form a subgroup generated by old_gens.
void extend_closure(const FiniteGroup& g, std::vector<bool>& mask,
                    std::vector<Element>& members,
                    std::span<const Element> old_gens,
                    std::span<const Element> extra)
{
  std::vector<Element> gens(old_gens.begin(), old_gens.end());
  bool grew = false;
  for (Element x : extra) {
    gens.push_back(x);
    grew = grew || !mask[x];
  }
  if (!grew)
    return;

  std::deque<Element> queue(members.begin(), members.end());
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (!mask[y]) {
        mask[y] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
}

struct BitKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept
  {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : v) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<std::uint64_t> bit_key(const std::vector<bool>& mask)
{
  std::vector<std::uint64_t> key((mask.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i])
      key[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return key;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<Element> cayley, std::vector<std::string> names,
                         std::string label)
{
  auto data = std::make_shared<Data>();
  const std::size_t n = names.size();
  if (n == 0)
    throw std::invalid_argument("group must have at least one element");
  if (cayley.size() != n * n)
    throw std::invalid_argument("Cayley table size does not match element count");

  {
    std::vector<std::string> normalized;
    normalized.reserve(n);
    for (const auto& s : names)
      normalized.push_back(normalize_name(s));
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end())
      throw std::invalid_argument("element names must be unique");
  }

  // Latin square
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      Element c = cayley[a * n + b];
      if (c >= n || seen[c] == stamp)
        throw std::invalid_argument("Cayley table is not a Latin square");
      seen[c] = stamp;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      Element c = cayley[a * n + b];
      if (seen[c] == stamp)
        throw std::invalid_argument("Cayley table is not a Latin square");
      seen[c] = stamp;
    }
  }

  // identity: in a Latin square, e*e = e pins down the only candidate
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    if (cayley[e * n + e] != e)
      continue;
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      ok = cayley[e * n + a] == a && cayley[a * n + e] == a;
    if (ok)
      identity = e;
  }
  if (!identity)
    throw std::invalid_argument("Cayley table has no two-sided identity");

  data->inverse.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    Element b = 0;
    while (cayley[a * n + b] != *identity)
      ++b;
    if (cayley[b * n + a] != *identity)
      throw std::invalid_argument("element has no two-sided inverse");
    data->inverse[a] = b;
  }

  // Light's associativity test over a greedily chosen generating set.
  std::vector<Element> gens;
  {
    std::vector<bool> reached(n, false);
    std::vector<Element> members{*identity};
    reached[*identity] = true;
    for (Element a = 0; a < n; ++a) {
      if (reached[a])
        continue;
      // plain right-multiplication closure: no associativity assumed
      gens.push_back(a);
      std::deque<Element> queue(members.begin(), members.end());
      while (!queue.empty()) {
        Element x = queue.front();
        queue.pop_front();
        for (Element s : gens) {
          Element y = cayley[x * n + s];
          if (!reached[y]) {
            reached[y] = true;
            members.push_back(y);
            queue.push_back(y);
          }
        }
      }
    }
  }
  for (Element s : gens) {
    for (Element x = 0; x < n; ++x) {
      const Element xs = cayley[x * n + s];
      for (Element y = 0; y < n; ++y) {
        if (cayley[xs * n + y] != cayley[x * n + cayley[s * n + y]])
          throw std::invalid_argument("Cayley table is not associative");
      }
    }
  }

  for (Element a = 0; a < n && data->abelian; ++a)
    for (Element b = a + 1; b < n && data->abelian; ++b)
      data->abelian = cayley[a * n + b] == cayley[b * n + a];

  data->order = n;
  data->identity = *identity;
  data->cayley = std::move(cayley);
  data->names = std::move(names);
  data->label = std::move(label);
  data_ = std::move(data);
}

std::optional<Element> FiniteGroup::find(std::string_view name) const
{
  const std::string key = normalize_name(name);
  for (Element a = 0; a < order(); ++a) {
    if (normalize_name(data_->names[a]) == key)
      return a;
  }
  return std::nullopt;
}

std::size_t FiniteGroup::element_order(Element a) const
{
  std::size_t k = 1;
  for (Element x = a; x != identity(); x = mul(x, a))
    ++k;
  return k;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> members, Trusted)
  : parent_(std::move(parent)), members_(std::move(members))
{
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(parent_.order(), false);
  for (Element a : members_)
    if (a < mask_.size())
      mask_[a] = true;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> members)
  : Subgroup(std::move(parent), std::move(members), Trusted{})
{
  if (!members_.empty() && members_.back() >= parent_.order())
    throw std::out_of_range("subgroup member index out of range");
  if (!contains(parent_.identity()))
    throw std::invalid_argument("subgroup does not contain the identity");
  for (Element a : members_) {
    if (!contains(parent_.inv(a)))
      throw std::invalid_argument("subgroup is not closed under inverses");
    for (Element b : members_) {
      if (!contains(parent_.mul(a, b)))
        throw std::invalid_argument("subgroup is not closed under the group law");
    }
  }
}

Subgroup Subgroup::from_closure(FiniteGroup parent, std::vector<Element> members)
{
  return Subgroup(std::move(parent), std::move(members), Trusted{});
}

bool Subgroup::is_subset_of(const Subgroup& other) const
{
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element a) { return other.contains(a); });
}

bool operator==(const Subgroup& a, const Subgroup& b)
{
  return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b)
{
  if (auto c = a.members_.size() <=> b.members_.size(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

Subgroup trivial_subgroup(const FiniteGroup& g)
{
  return Subgroup::from_closure(g, {g.identity()});
}

Subgroup whole_group(const FiniteGroup& g)
{
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup::from_closure(g, std::move(all));
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens)
{
  for (Element x : gens) {
    if (x >= g.order())
      throw std::out_of_range("generator index out of range");
  }
  std::vector<bool> mask(g.order(), false);
  std::vector<Element> members{g.identity()};
  mask[g.identity()] = true;
  extend_closure(g, mask, members, {}, gens);
  return Subgroup::from_closure(g, std::move(members));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits)
{
  if (g.order() > limits.max_enumeration) {
    throw CapExceeded("subgroup enumeration limited to order " +
                      std::to_string(limits.max_enumeration) + ", group has order " +
                      std::to_string(g.order()));
  }

  struct Found {
    std::vector<bool> mask;
    std::vector<Element> members;
    std::vector<Element> gens;
  };

  std::unordered_set<std::vector<std::uint64_t>, BitKeyHash> seen;
  std::vector<Found> found;

  auto record = [&](Found f) -> bool {
    if (!seen.insert(bit_key(f.mask)).second)
      return false;
    found.push_back(std::move(f));
    return true;
  };

  // trivial subgroup, then one generator per distinct cyclic subgroup
  {
    Found trivial{std::vector<bool>(g.order(), false), {g.identity()}, {}};
    trivial.mask[g.identity()] = true;
    record(std::move(trivial));
  }
  std::vector<Element> cyclic_gens;
  std::vector<std::size_t> layer;
  for (Element a = 0; a < g.order(); ++a) {
    if (a == g.identity())
      continue;
    Found f{std::vector<bool>(g.order(), false), {g.identity()}, {}};
    f.mask[g.identity()] = true;
    const Element gen[] = {a};
    extend_closure(g, f.mask, f.members, {}, gen);
    f.gens = {a};
    if (record(std::move(f))) {
      cyclic_gens.push_back(a);
      layer.push_back(found.size() - 1);
    }
  }

  // join each subgroup of the last layer with every cyclic subgroup it misses
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : layer) {
      for (Element z : cyclic_gens) {
        if (found[idx].mask[z])
          continue;
        Found f = found[idx];
        const Element gen[] = {z};
        extend_closure(g, f.mask, f.members, found[idx].gens, gen);
        f.gens.push_back(z);
        if (record(std::move(f)))
          next.push_back(found.size() - 1);
      }
    }
    layer = std::move(next);
  }

  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (auto& f : found)
    result.push_back(Subgroup::from_closure(g, std::move(f.members)));
  std::sort(result.begin(), result.end());
  return result;
}

Subgroup intersect_subgroups(std::span<const Subgroup> subs)
{
  if (subs.empty())
    throw std::invalid_argument("cannot intersect an empty list of subgroups");
  const FiniteGroup& parent = subs.front().parent();
  for (const auto& s : subs) {
    if (!s.parent().same_as(parent))
      throw std::invalid_argument("subgroups belong to different parent groups");
  }
  std::vector<Element> members;
  for (Element a : subs.front().members()) {
    if (std::all_of(subs.begin(), subs.end(), [a](const Subgroup& s) { return s.contains(a); }))
      members.push_back(a);
  }
  return Subgroup::from_closure(parent, std::move(members));
}

std::vector<Element> generators_of(const Subgroup& h)
{
  const FiniteGroup& g = h.parent();
  std::vector<bool> mask(g.order(), false);
  std::vector<Element> members{g.identity()};
  mask[g.identity()] = true;
  std::vector<Element> gens;
  for (Element a : h.members()) {
    if (mask[a])
      continue;
    const Element extra[] = {a};
    extend_closure(g, mask, members, gens, extra);
    gens.push_back(a);
  }
  return gens;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h)
{
  if (!h.parent().same_as(g))
    throw std::invalid_argument("subgroup does not belong to this group");
  if (h.is_trivial() || h.is_whole() || g.is_abelian())
    return true;
  // conjugation-invariance on generators of both sides is sufficient
  const auto g_gens = generators_of(whole_group(g));
  const auto h_gens = generators_of(h);
  for (Element x : g_gens) {
    for (Element s : h_gens) {
      if (!h.contains(g.conjugate(s, x)))
        return false;
    }
  }
  return true;
}

Cosets left_cosets(const FiniteGroup& g, const Subgroup& h)
{
  if (!h.parent().same_as(g))
    throw std::invalid_argument("subgroup does not belong to this group");
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  Cosets out;
  out.coset_of.assign(g.order(), unset);
  // scanning in index order makes each block's first element its minimum
  for (Element x = 0; x < g.order(); ++x) {
    if (out.coset_of[x] != unset)
      continue;
    const auto id = static_cast<std::uint32_t>(out.blocks.size());
    std::vector<Element> block;
    block.reserve(h.order());
    for (Element m : h.members()) {
      Element y = g.mul(x, m);
      out.coset_of[y] = id;
      block.push_back(y);
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& h)
{
  if (!is_normal(g, h))
    throw std::invalid_argument("quotient requires a normal subgroup, got " + describe(h));

  Cosets cosets = left_cosets(g, h);
  const std::size_t k = cosets.blocks.size();
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = cosets.coset_of[g.mul(cosets.blocks[i].front(), cosets.blocks[j].front())];
    }
  }
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (cosets.coset_of[g.mul(a, b)] != table[cosets.coset_of[a] * k + cosets.coset_of[b]])
        throw InvariantViolation("quotient multiplication depends on coset representatives");
    }
  }

  std::vector<std::string> names;
  names.reserve(k);
  for (const auto& block : cosets.blocks)
    names.push_back("[" + g.name(block.front()) + "]");
  FiniteGroup q(std::move(table), std::move(names), g.label() + "/" + describe(h));
  return QuotientGroup{g, h, std::move(cosets), std::move(q)};
}

std::uint64_t AbelianInvariants::encode(std::span<const std::uint64_t> tuple) const
{
  std::uint64_t code = 0;
  for (std::size_t j = 0; j < factors.size(); ++j)
    code = code * factors[j] + tuple[j];
  return code;
}

AbelianInvariants abelian_invariants(const FiniteGroup& g)
{
  if (!g.is_abelian())
    throw std::invalid_argument("abelian_invariants requires an abelian group");

  std::vector<Element> current(g.order());
  std::iota(current.begin(), current.end(), Element{0});
  std::vector<std::uint64_t> orders;
  std::vector<Element> gens;

  while (current.size() > 1) {
    Element best = g.identity();
    std::size_t best_order = 1;
    for (Element a : current) {
      std::size_t o = g.element_order(a);
      if (o > best_order) {
        best = a;
        best_order = o;
      }
    }
    const Element best_gen[] = {best};
    const Subgroup cyclic = subgroup_generated(g, best_gen);

    // Greedy maximal subgroup of `current` meeting <best> trivially. For an
    // element of maximal order this is always a complement.
    std::vector<bool> mask(g.order(), false);
    std::vector<Element> members{g.identity()};
    mask[g.identity()] = true;
    std::vector<Element> comp_gens;
    for (Element h : current) {
      if (mask[h])
        continue;
      auto trial_mask = mask;
      auto trial_members = members;
      const Element extra[] = {h};
      extend_closure(g, trial_mask, trial_members, comp_gens, extra);
      bool disjoint = std::none_of(trial_members.begin(), trial_members.end(), [&](Element x) {
        return x != g.identity() && cyclic.contains(x);
      });
      if (disjoint) {
        mask = std::move(trial_mask);
        members = std::move(trial_members);
        comp_gens.push_back(h);
      }
    }
    if (members.size() * best_order != current.size())
      throw InvariantViolation("no cyclic complement found for an element of maximal order");

    orders.push_back(best_order);
    gens.push_back(best);
    std::sort(members.begin(), members.end());
    current = std::move(members);
  }

  AbelianInvariants inv;
  inv.factors.assign(orders.rbegin(), orders.rend());
  inv.generators.assign(gens.rbegin(), gens.rend());
  for (std::size_t j = 0; j + 1 < inv.factors.size(); ++j) {
    if (inv.factors[j + 1] % inv.factors[j] != 0)
      throw InvariantViolation("invariant factors do not form a divisibility chain");
  }

  // enumerate every residue tuple and record the element it names
  const std::size_t k = inv.factors.size();
  inv.residues.assign(g.order(), {});
  std::vector<bool> hit(g.order(), false);
  std::vector<std::uint64_t> tuple(k, 0);
  for (std::size_t count = 0; count < g.order(); ++count) {
    Element x = g.identity();
    for (std::size_t j = 0; j < k; ++j) {
      for (std::uint64_t r = 0; r < tuple[j]; ++r)
        x = g.mul(x, inv.generators[j]);
    }
    if (hit[x])
      throw InvariantViolation("invariant-factor map is not injective");
    hit[x] = true;
    inv.residues[x] = tuple;
    for (std::size_t j = k; j-- > 0;) {
      if (++tuple[j] < inv.factors[j])
        break;
      tuple[j] = 0;
    }
  }
  return inv;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0)
      out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, std::uint64_t p, const Limits& limits)
{
  std::uint64_t power = 1;
  for (auto [q, e] : factorize(g.order())) {
    if (q == p) {
      for (unsigned i = 0; i < e; ++i)
        power *= p;
    }
  }
  if (power == 1)
    throw std::invalid_argument(std::to_string(p) + " does not divide the group order");
  if (power == g.order())
    return {whole_group(g)};

  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(g, limits)) {
    if (s.order() == power)
      out.push_back(std::move(s));
  }
  return out;
}

bool is_nilpotent(const FiniteGroup& g, const Limits& limits)
{
  if (g.is_abelian())
    return true;
  const auto primes = factorize(g.order());
  if (primes.size() == 1)
    return true;
  const auto subs = all_subgroups(g, limits);
  for (auto [p, e] : primes) {
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i)
      power *= p;
    for (const auto& s : subs) {
      if (s.order() == power && !is_normal(g, s))
        return false;
    }
  }
  return true;
}

std::string describe(const Subgroup& h)
{
  const FiniteGroup& g = h.parent();
  auto gens = generators_of(h);
  if (gens.empty())
    return "<" + g.name(g.identity()) + ">";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i)
      out += ",";
    out += g.name(gens[i]);
  }
  return out + ">";
}

}  // namespace qucode
