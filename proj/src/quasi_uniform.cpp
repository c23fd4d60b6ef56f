#include "qucode/quasi_uniform.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "qucode/named_groups.hpp"

namespace qucode {

std::vector<CoordinateSet> subsets_by_size(std::size_t n)
{
  if (n > max_code_length)
    throw std::invalid_argument("code length above " + std::to_string(max_code_length));
  std::vector<CoordinateSet> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
      idx[i] = i;
    while (true) {
      CoordinateSet s = 0;
      for (auto i : idx)
        s |= CoordinateSet{1} << i;
      out.push_back(s);
      // advance to the next combination in lexicographic order
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1)
        --pos;
      if (pos == 0)
        break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::vector<std::size_t> coordinates_of(CoordinateSet set)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; set; ++i, set >>= 1) {
    if (set & 1u)
      out.push_back(i);
  }
  return out;
}

std::string format_subset(CoordinateSet set)
{
  std::string out = "{";
  bool first = true;
  for (auto i : coordinates_of(set)) {
    out += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string to_string(AlphabetKind kind)
{
  switch (kind) {
    case AlphabetKind::CanonicalAbelian: return "canonical-abelian";
    case AlphabetKind::QuotientGroup: return "quotient-group";
    case AlphabetKind::OpaqueLabels: return "opaque-labels";
  }
  return "opaque-labels";
}

AlphabetKind alphabet_kind_from_string(const std::string& s)
{
  if (s == "canonical-abelian")
    return AlphabetKind::CanonicalAbelian;
  if (s == "quotient-group")
    return AlphabetKind::QuotientGroup;
  if (s == "opaque-labels")
    return AlphabetKind::OpaqueLabels;
  throw std::invalid_argument("unknown alphabet kind '" + s + "'");
}

namespace {

CoordinateAlphabet opaque_alphabet(std::size_t size)
{
  CoordinateAlphabet a;
  a.kind = AlphabetKind::OpaqueLabels;
  a.size = size;
  for (std::size_t s = 0; s < size; ++s)
    a.label_names.push_back(std::to_string(s));
  return a;
}

}  // namespace

void QuasiUniformCode::check_invariants() const
{
  const std::size_t n = alphabets_.size();
  if (n == 0 || n > max_code_length)
    throw std::invalid_argument("code length must be in [1, " + std::to_string(max_code_length) + "]");
  if (codewords_.empty())
    throw std::invalid_argument("a code needs at least one codeword");
  for (const auto& a : alphabets_) {
    if (a.size == 0)
      throw std::invalid_argument("alphabet size must be positive");
  }
  std::set<Word> distinct;
  for (const auto& w : codewords_) {
    if (w.size() != n)
      throw std::invalid_argument("codeword length does not match the number of alphabets");
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] >= alphabets_[i].size)
        throw std::invalid_argument("symbol " + std::to_string(w[i]) + " outside alphabet of coordinate " +
                                    std::to_string(i + 1));
    }
    if (!distinct.insert(w).second)
      throw std::invalid_argument("codewords must be pairwise distinct");
  }
  if (provenance_) {
    const auto meet = intersect_subgroups(provenance_->subgroups);
    if (codewords_.size() != provenance_->group.order() / meet.order())
      throw InvariantViolation("code size differs from |G|/|G_N|");
  }
}

QuasiUniformCode QuasiUniformCode::from_codewords(std::vector<Word> codewords,
                                                  std::vector<CoordinateAlphabet> alphabets)
{
  QuasiUniformCode code;
  code.codewords_ = std::move(codewords);
  code.alphabets_ = std::move(alphabets);
  code.check_invariants();
  return code;
}

CosetTable build_coset_table(const FiniteGroup& g, const std::vector<Subgroup>& subs)
{
  if (subs.empty())
    throw std::invalid_argument("at least one subgroup is required");
  if (subs.size() > max_code_length)
    throw std::invalid_argument("at most " + std::to_string(max_code_length) + " subgroups are supported");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i].parent().same_as(g))
      throw std::invalid_argument("subgroup " + std::to_string(i + 1) + " belongs to a different group");
    for (std::size_t j = 0; j < i; ++j) {
      if (subs[i] == subs[j]) {
        throw std::invalid_argument(
            "subgroups " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " are both " +
            describe(subs[i]) +
            "; a repeated subgroup only duplicates a coordinate, and the coset alphabet count "
            "assumes distinct subgroups");
      }
    }
  }

  CosetTable t{g, subs, {}, {}};
  for (const auto& h : subs)
    t.cosets.push_back(left_cosets(g, h));
  t.cells.assign(g.order(), std::vector<Symbol>(subs.size()));
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < subs.size(); ++i)
      t.cells[x][i] = t.cosets[i].coset_of[x];
  }
  return t;
}

QuasiUniformCode reduce_code(const CosetTable& t)
{
  const FiniteGroup& g = t.group;
  QuasiUniformCode code;
  Provenance prov{g, t.subgroups, {}};

  std::set<Word> seen;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen.insert(t.cells[x]).second) {
      code.codewords_.push_back(t.cells[x]);
      prov.representatives.push_back(x);
    }
  }
  for (const auto& c : t.cosets)
    code.alphabets_.push_back(opaque_alphabet(c.blocks.size()));

  const Subgroup meet = intersect_subgroups(t.subgroups);
  if (code.codewords_.size() * meet.order() != g.order()) {
    throw InvariantViolation("row deduplication produced " + std::to_string(code.codewords_.size()) +
                             " codewords, expected |G|/|G_N| = " +
                             std::to_string(g.order() / meet.order()));
  }

  code.group_structured_ = std::all_of(t.subgroups.begin(), t.subgroups.end(),
                                       [&](const Subgroup& h) { return is_normal(g, h); });

  // Rebuild the code inside G/G_N, where the intersection is trivial and
  // every row is already distinct.
  if (code.group_structured_ && !meet.is_trivial()) {
    const QuotientGroup q = quotient(g, meet);
    std::vector<Cosets> q_cosets;
    for (const auto& h : t.subgroups) {
      std::vector<Element> image;
      for (Element m : h.members())
        image.push_back(q.cosets.coset_of[m]);
      q_cosets.push_back(left_cosets(q.group, Subgroup(q.group, std::move(image))));
    }
    std::vector<Word> rebuilt;
    for (Element b = 0; b < q.group.order(); ++b) {
      Word w;
      for (const auto& c : q_cosets)
        w.push_back(c.coset_of[b]);
      rebuilt.push_back(std::move(w));
    }
    if (rebuilt != code.codewords_)
      throw InvariantViolation("quotient reconstruction disagrees with row deduplication");
  }

  code.provenance_ = std::move(prov);
  code.check_invariants();
  return code;
}

QuasiUniformCode label_coordinates(const QuasiUniformCode& code)
{
  if (!code.provenance_)
    return code;
  const Provenance& prov = *code.provenance_;
  const FiniteGroup& g = prov.group;

  QuasiUniformCode out = code;
  for (std::size_t i = 0; i < prov.subgroups.size(); ++i) {
    const Subgroup& h = prov.subgroups[i];
    if (!is_normal(g, h))
      continue;
    QuotientGroup q = quotient(g, h);
    CoordinateAlphabet alpha;
    alpha.size = q.group.order();
    if (q.group.is_abelian()) {
      const AbelianInvariants inv = abelian_invariants(q.group);
      std::vector<FiniteGroup> cyclics;
      for (auto d : inv.factors)
        cyclics.push_back(cyclic_group(d));
      if (cyclics.empty())
        cyclics.push_back(cyclic_group(1));
      alpha.kind = AlphabetKind::CanonicalAbelian;
      alpha.factors = inv.factors;
      alpha.law = direct_product(cyclics);
      alpha.label_names = alpha.law->names();
      // quotient element k is coset k of this column
      std::vector<Symbol> relabel(alpha.size);
      for (std::size_t k = 0; k < alpha.size; ++k)
        relabel[k] = static_cast<Symbol>(inv.encode(inv.residues[k]));
      for (auto& w : out.codewords_)
        w[i] = relabel[w[i]];
    } else {
      alpha.kind = AlphabetKind::QuotientGroup;
      alpha.label_names = q.group.names();
      alpha.law = q.group;
    }
    out.alphabets_[i] = std::move(alpha);
  }
  out.check_invariants();
  return out;
}

QuasiUniformCode construct_code(const FiniteGroup& g, const std::vector<Subgroup>& subs)
{
  return label_coordinates(reduce_code(build_coset_table(g, subs)));
}

std::map<Word, std::size_t> induced_support(const QuasiUniformCode& code, CoordinateSet coords)
{
  if (coords == 0)
    throw std::invalid_argument("induced_support needs a nonempty coordinate set");
  if (std::bit_width(coords) > code.length())
    throw std::invalid_argument("coordinate set " + format_subset(coords) + " exceeds the code length");
  const auto idx = coordinates_of(coords);
  std::map<Word, std::size_t> support;
  Word key(idx.size());
  for (const auto& w : code.codewords()) {
    for (std::size_t j = 0; j < idx.size(); ++j)
      key[j] = w[idx[j]];
    ++support[key];
  }
  return support;
}

}  // namespace qucode
