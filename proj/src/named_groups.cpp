#include "qucode/named_groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

namespace qucode {

namespace {

enum class Family { Cyclic, Dihedral, Symmetric, Alternating, Quaternion, Dicyclic };

struct Atom {
  Family family;
  std::size_t n;
};

std::string canonical_label(const Atom& a)
{
  switch (a.family) {
    case Family::Cyclic: return "C" + std::to_string(a.n);
    case Family::Dihedral: return "D" + std::to_string(a.n);
    case Family::Symmetric: return "S" + std::to_string(a.n);
    case Family::Alternating: return "A" + std::to_string(a.n);
    case Family::Quaternion: return "Q8";
    case Family::Dicyclic: return "Dic" + std::to_string(a.n);
  }
  return {};
}

std::size_t parse_number(std::string_view digits, std::string_view atom)
{
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError("expected a number in group atom '" + std::string(atom) + "'");
  return value;
}

Atom parse_atom(std::string_view atom)
{
  auto rest = [&](std::size_t skip) { return parse_number(atom.substr(skip), atom); };
  if (atom == "q8")
    return {Family::Quaternion, 8};
  if (atom.starts_with("dic")) {
    std::size_t n = rest(3);
    if (n < 4 || n % 4 != 0)
      throw ParseError("Dic n needs an order n divisible by 4, got " + std::to_string(n));
    return {Family::Dicyclic, n};
  }
  if (atom.empty())
    throw ParseError("empty group atom");
  const char head = atom.front();
  if (head == 'c') {
    std::size_t n = rest(1);
    if (n < 1)
      throw ParseError("C n needs n >= 1");
    return {Family::Cyclic, n};
  }
  if (head == 'd') {
    std::size_t n = rest(1);
    if (n < 2 || n % 2 != 0)
      throw ParseError("D n names the dihedral group of order n; n must be even, got " +
                       std::to_string(n));
    return {Family::Dihedral, n};
  }
  if (head == 's' || head == 'a') {
    std::size_t n = rest(1);
    if (n < 1)
      throw ParseError("permutation degree must be >= 1");
    return {head == 's' ? Family::Symmetric : Family::Alternating, n};
  }
  throw ParseError("unknown group atom '" + std::string(atom) + "'");
}

// Saturating order computation so huge specs fail the cap check cleanly.
std::size_t atom_order(const Atom& a, std::size_t cap)
{
  switch (a.family) {
    case Family::Symmetric:
    case Family::Alternating: {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= a.n; ++i) {
        f *= i;
        if (f > 2 * cap)
          return cap + 1;
      }
      return a.family == Family::Alternating && a.n >= 2 ? f / 2 : f;
    }
    default: return a.n;
  }
}

std::string power_name(const char* base, std::size_t k)
{
  if (k == 0)
    return "";
  if (k == 1)
    return base;
  return std::string(base) + "^" + std::to_string(k);
}

FiniteGroup dihedral_group(std::size_t order, std::string label)
{
  const std::size_t m = order / 2;
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % m, e = x / m;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t b = y % m, f = y / m;
      // s r^b = r^-b s
      const std::size_t k = e ? (a + m - b) % m : (a + b) % m;
      table[x * order + y] = static_cast<Element>(k + ((e ^ f) * m));
    }
  }
  std::vector<std::string> names;
  for (std::size_t e = 0; e < 2; ++e) {
    for (std::size_t k = 0; k < m; ++k) {
      std::string nm = power_name("r", k) + (e ? "s" : "");
      names.push_back(nm.empty() ? "1" : nm);
    }
  }
  return FiniteGroup(std::move(table), std::move(names), std::move(label));
}

FiniteGroup dicyclic_group(std::size_t order, std::string label)
{
  const std::size_t m = order / 4, half = 2 * m;
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % half, e = x / half;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y % half, f = y / half;
      std::size_t k, xpow;
      if (!e) {
        k = (i + j) % half;
        xpow = f;
      } else if (!f) {
        k = (i + half - j) % half;
        xpow = 1;
      } else {
        k = (i + half - j + m) % half;  // x^2 = a^m
        xpow = 0;
      }
      table[x * order + y] = static_cast<Element>(k + xpow * half);
    }
  }
  std::vector<std::string> names;
  for (std::size_t e = 0; e < 2; ++e) {
    for (std::size_t k = 0; k < half; ++k) {
      std::string nm = power_name("a", k) + (e ? "x" : "");
      names.push_back(nm.empty() ? "1" : nm);
    }
  }
  return FiniteGroup(std::move(table), std::move(names), std::move(label));
}

FiniteGroup quaternion_group()
{
  // index = 2 * unit + negative, unit in {1, i, j, k}
  static constexpr int unit_product[4][4][2] = {
      // {unit, negative}
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<Element> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const auto& p = unit_product[x / 2][y / 2];
      const int neg = (x % 2) ^ (y % 2) ^ p[1];
      table[x * 8 + y] = static_cast<Element>(2 * p[0] + neg);
    }
  }
  return FiniteGroup(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

std::string cycle_notation(const std::vector<std::uint8_t>& perm)
{
  const std::size_t n = perm.size();
  const bool separate = n >= 10;
  std::vector<bool> seen(n, false);
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i)
      continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first && separate)
        out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup permutation_group(std::size_t degree, bool even_only, std::string label)
{
  struct Perm {
    std::vector<std::uint8_t> image;
    std::size_t moved;
    std::string name;
  };
  std::vector<Perm> perms;
  std::vector<std::uint8_t> image(degree);
  std::iota(image.begin(), image.end(), std::uint8_t{0});
  do {
    std::size_t moved = 0, inversions = 0;
    for (std::size_t i = 0; i < degree; ++i) {
      moved += image[i] != i;
      for (std::size_t j = i + 1; j < degree; ++j)
        inversions += image[i] > image[j];
    }
    if (even_only && inversions % 2)
      continue;
    perms.push_back({image, moved, cycle_notation(image)});
  } while (std::next_permutation(image.begin(), image.end()));

  std::sort(perms.begin(), perms.end(), [](const Perm& a, const Perm& b) {
    return std::tie(a.moved, a.name) < std::tie(b.moved, b.name);
  });

  std::map<std::vector<std::uint8_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index.emplace(perms[i].image, static_cast<Element>(i));

  const std::size_t n = perms.size();
  std::vector<Element> table(n * n);
  std::vector<std::uint8_t> product(degree);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      // (xy)(i) = x(y(i))
      for (std::size_t i = 0; i < degree; ++i)
        product[i] = perms[x].image[perms[y].image[i]];
      table[x * n + y] = index.at(product);
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (auto& p : perms)
    names.push_back(std::move(p.name));
  return FiniteGroup(std::move(table), std::move(names), std::move(label));
}

FiniteGroup build_atom(const Atom& a)
{
  std::string label = canonical_label(a);
  switch (a.family) {
    case Family::Cyclic: return cyclic_group(a.n);
    case Family::Dihedral: return dihedral_group(a.n, std::move(label));
    case Family::Symmetric: return permutation_group(a.n, false, std::move(label));
    case Family::Alternating: return permutation_group(a.n, true, std::move(label));
    case Family::Quaternion: return quaternion_group();
    case Family::Dicyclic: return dicyclic_group(a.n, std::move(label));
  }
  throw ParseError("unknown group family");
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n)
{
  std::vector<Element> table(n * n);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(std::move(table), std::move(names), "C" + std::to_string(n));
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors, std::string label)
{
  if (factors.empty())
    throw std::invalid_argument("direct product of no factors");
  if (label.empty()) {
    for (std::size_t i = 0; i < factors.size(); ++i)
      label += (i ? "x" : "") + factors[i].label();
  }
  if (factors.size() == 1)
    return factors.front();

  std::size_t n = 1;
  for (const auto& f : factors)
    n *= f.order();

  // mixed radix, first factor most significant
  auto digits = [&](std::size_t x) {
    std::vector<Element> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = static_cast<Element>(x % factors[i].order());
      x /= factors[i].order();
    }
    return d;
  };
  std::vector<std::vector<Element>> coords(n);
  for (std::size_t x = 0; x < n; ++x)
    coords[x] = digits(x);

  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t z = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        z = z * factors[i].order() + factors[i].mul(coords[x][i], coords[y][i]);
      table[x * n + y] = static_cast<Element>(z);
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string nm = "(";
    for (std::size_t i = 0; i < factors.size(); ++i)
      nm += (i ? "," : "") + factors[i].name(coords[x][i]);
    names.push_back(nm + ")");
  }
  return FiniteGroup(std::move(table), std::move(names), std::move(label));
}

FiniteGroup build_named_group(std::string_view spec, const Limits& limits)
{
  std::string lowered;
  for (char c : spec) {
    if (std::isspace(static_cast<unsigned char>(c)))
      throw ParseError("group spec must not contain whitespace: '" + std::string(spec) + "'");
    lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (lowered.empty())
    throw ParseError("empty group spec");

  std::vector<Atom> atoms;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = lowered.find('x', start);
    atoms.push_back(parse_atom(std::string_view(lowered).substr(start, pos - start)));
    if (pos == std::string::npos)
      break;
    start = pos + 1;
  }

  std::size_t order = 1;
  std::string label;
  for (const auto& a : atoms) {
    order *= atom_order(a, limits.max_order);
    if (order > limits.max_order) {
      throw CapExceeded("group '" + std::string(spec) + "' exceeds the order cap of " +
                        std::to_string(limits.max_order));
    }
    label += (label.empty() ? "" : "x") + canonical_label(a);
  }

  std::vector<FiniteGroup> factors;
  for (const auto& a : atoms)
    factors.push_back(build_atom(a));
  return direct_product(factors, label);
}

}  // namespace qucode
