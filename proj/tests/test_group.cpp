#include <gtest/gtest.h>

#include <numeric>

#include "qucode/group.hpp"
#include "qucode/named_groups.hpp"
#include "support.hpp"

using namespace qucode;
using qucode::testing::count_subgroups_by_closure;
using qucode::testing::normal_oracle;

namespace {

Element el(const FiniteGroup& g, const std::string& name)
{
  auto e = g.find(name);
  EXPECT_TRUE(e.has_value()) << name;
  return *e;
}

Subgroup gen(const FiniteGroup& g, std::initializer_list<const char*> names)
{
  std::vector<Element> gens;
  for (auto n : names)
    gens.push_back(el(g, n));
  return subgroup_generated(g, gens);
}

}  // namespace

TEST(FiniteGroup, RejectsMalformedTables)
{
  EXPECT_THROW(FiniteGroup({}, {}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup({0, 1, 1, 1}, {"a", "b"}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup({0, 1, 1, 0}, {"a", "a"}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup({0, 1, 1, 0}, {"a"}), std::invalid_argument);
  // Latin square with an identity but not associative (a loop of order 5)
  std::vector<Element> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup(loop, {"e", "a", "b", "c", "d"}), std::invalid_argument);
}

TEST(FiniteGroup, AcceptsCyclicTable)
{
  FiniteGroup g({0, 1, 2, 1, 2, 0, 2, 0, 1}, {"e", "a", "b"}, "C3");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.inv(1), 2u);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g.find(" A "), Element{1});
  EXPECT_FALSE(g.find("z").has_value());
}

TEST(NamedGroups, OrdersAndAbelianness)
{
  struct Case {
    const char* spec;
    std::size_t order;
    bool abelian;
  };
  for (auto c : std::vector<Case>{{"C1", 1, true},     {"C7", 7, true},    {"C3xC3", 9, true},
                                  {"D4", 4, true},     {"D6", 6, false},   {"D12", 12, false},
                                  {"S3", 6, false},    {"S4", 24, false},  {"A4", 12, false},
                                  {"A5", 60, false},   {"Q8", 8, false},   {"Dic12", 12, false},
                                  {"Dic4", 4, true},   {"C2xS3", 12, false}}) {
    auto g = build_named_group(c.spec);
    EXPECT_EQ(g.order(), c.order) << c.spec;
    EXPECT_EQ(g.is_abelian(), c.abelian) << c.spec;
  }
}

TEST(NamedGroups, GrammarErrors)
{
  for (auto bad : {"", "X3", "C0", "D7", "Dic6", "C3 x C3", "Cx", "C3xx", "Q9"})
    EXPECT_THROW(build_named_group(bad), ParseError) << bad;
  Limits small;
  small.max_order = 100;
  EXPECT_THROW(build_named_group("S5", small), CapExceeded);
  EXPECT_THROW(build_named_group("C11xC11", small), CapExceeded);
}

TEST(NamedGroups, LabelsAreCanonical)
{
  EXPECT_EQ(build_named_group("c3xc3").label(), "C3xC3");
  EXPECT_EQ(build_named_group("dic12").label(), "Dic12");
  EXPECT_EQ(build_named_group("d12").label(), "D12");
}

TEST(NamedGroups, DihedralRelations)
{
  auto g = build_named_group("D12");
  const Element r = el(g, "r"), s = el(g, "s");
  EXPECT_EQ(g.element_order(r), 6u);
  EXPECT_EQ(g.element_order(s), 2u);
  // s r s^-1 = r^-1
  EXPECT_EQ(g.conjugate(r, s), g.inv(r));
}

TEST(NamedGroups, PermutationComposition)
{
  auto g = build_named_group("S3");
  std::vector<std::string> expected{"()", "(12)", "(13)", "(23)", "(123)", "(132)"};
  EXPECT_EQ(g.names(), expected);
  // right-to-left: apply (12) first, then (13)
  EXPECT_EQ(g.name(g.mul(el(g, "(13)"), el(g, "(12)"))), "(123)");
}

TEST(NamedGroups, QuaternionAndDicyclic)
{
  auto q = build_named_group("Q8");
  EXPECT_EQ(q.element_order(el(q, "i")), 4u);
  EXPECT_EQ(q.mul(el(q, "i"), el(q, "j")), el(q, "k"));
  EXPECT_EQ(q.mul(el(q, "i"), el(q, "i")), el(q, "-1"));
  // Q8 has a single element of order 2
  std::size_t involutions = 0;
  for (Element x = 0; x < q.order(); ++x)
    involutions += q.element_order(x) == 2;
  EXPECT_EQ(involutions, 1u);

  auto d = build_named_group("Dic12");
  std::size_t inv12 = 0;
  for (Element x = 0; x < d.order(); ++x)
    inv12 += d.element_order(x) == 2;
  EXPECT_EQ(inv12, 1u);
}

TEST(NamedGroups, DirectProductNames)
{
  auto g = build_named_group("C2xC3");
  EXPECT_EQ(g.name(0), "(0,0)");
  EXPECT_EQ(g.name(1), "(0,1)");
  EXPECT_EQ(g.name(3), "(1,0)");
  EXPECT_EQ(g.element_order(el(g, "(1,1)")), 6u);
}

TEST(Subgroups, CountsMatchClosureOracle)
{
  for (auto spec : {"C2xC2", "C3xC3", "S3", "D8", "Q8", "C12", "D12", "A4", "Dic12", "C2xC2xC2",
                    "C4xC4", "C2xC4", "D16", "Dic16"}) {
    auto g = build_named_group(spec);
    EXPECT_EQ(all_subgroups(g).size(), count_subgroups_by_closure(g)) << spec;
  }
}

TEST(Subgroups, KnownCountsForLargerGroups)
{
  // p^2 groups C_p x C_p have p + 3 subgroups
  EXPECT_EQ(all_subgroups(build_named_group("C5xC5")).size(), 8u);
  EXPECT_EQ(all_subgroups(build_named_group("C7xC7")).size(), 10u);
  EXPECT_EQ(all_subgroups(build_named_group("S4")).size(), 30u);
  EXPECT_EQ(all_subgroups(build_named_group("A5")).size(), 59u);
}

TEST(Subgroups, CanonicalOrderAndCap)
{
  auto g = build_named_group("C3xC3");
  auto subs = all_subgroups(g);
  EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
  EXPECT_TRUE(subs.front().is_trivial());
  EXPECT_TRUE(subs.back().is_whole());
  Limits tiny;
  tiny.max_enumeration = 4;
  EXPECT_THROW(all_subgroups(g, tiny), CapExceeded);
}

TEST(Subgroups, ValidatingConstructor)
{
  auto g = build_named_group("S3");
  EXPECT_NO_THROW(Subgroup(g, {el(g, "(12)"), el(g, "()")}));
  EXPECT_THROW(Subgroup(g, {el(g, "(12)")}), std::invalid_argument);
  EXPECT_THROW(Subgroup(g, {el(g, "()"), el(g, "(123)")}), std::invalid_argument);
  EXPECT_THROW(Subgroup(g, {el(g, "()"), el(g, "(12)"), el(g, "(13)")}), std::invalid_argument);
  EXPECT_THROW(Subgroup(g, {0, 99}), std::out_of_range);
}

TEST(Subgroups, IntersectionAndDescribe)
{
  auto g = build_named_group("D12");
  auto a = gen(g, {"r^3"});
  auto b = gen(g, {"r^2", "s"});
  std::vector<Subgroup> both{a, b};
  EXPECT_TRUE(intersect_subgroups(both).is_trivial());
  EXPECT_EQ(describe(a), "<r^3>");
  EXPECT_EQ(describe(trivial_subgroup(g)), "<1>");
  EXPECT_THROW(intersect_subgroups(std::vector<Subgroup>{}), std::invalid_argument);
  auto other = whole_group(build_named_group("D12"));
  std::vector<Subgroup> mixed{a, other};
  EXPECT_THROW(intersect_subgroups(mixed), std::invalid_argument);
}

TEST(Subgroups, NormalityMatchesConjugationOracle)
{
  for (auto spec : {"S3", "D8", "Q8", "D12", "A4", "S4", "Dic12", "C2xS3"}) {
    auto g = build_named_group(spec);
    for (const auto& h : all_subgroups(g))
      EXPECT_EQ(is_normal(g, h), normal_oracle(g, h)) << spec << " " << describe(h);
  }
}

TEST(Cosets, PartitionInCanonicalOrder)
{
  auto g = build_named_group("S4");
  for (const auto& h : all_subgroups(g)) {
    auto c = left_cosets(g, h);
    ASSERT_EQ(c.blocks.size(), h.index());
    Element prev_min = 0;
    for (std::size_t k = 0; k < c.blocks.size(); ++k) {
      const auto& b = c.blocks[k];
      EXPECT_EQ(b.size(), h.order());
      if (k)
        EXPECT_GT(b.front(), prev_min);
      prev_min = b.front();
      // block is x H for its smallest member x
      std::vector<Element> expect;
      for (auto m : h.members())
        expect.push_back(g.mul(b.front(), m));
      std::sort(expect.begin(), expect.end());
      EXPECT_EQ(b, expect);
      for (auto x : b)
        EXPECT_EQ(c.coset_of[x], k);
    }
  }
}

TEST(Quotients, DihedralQuotients)
{
  auto g = build_named_group("D12");
  auto q1 = quotient(g, gen(g, {"r^3"}));
  EXPECT_EQ(q1.group.order(), 6u);
  EXPECT_FALSE(q1.group.is_abelian());
  auto q2 = quotient(g, gen(g, {"r^2", "s"}));
  EXPECT_EQ(q2.group.order(), 2u);
  EXPECT_THROW(quotient(g, gen(g, {"s"})), std::invalid_argument);
}

TEST(Quotients, ProjectionIsHomomorphism)
{
  for (auto spec : {"S4", "D16", "Q8", "C2xA4"}) {
    auto g = build_named_group(spec);
    for (const auto& h : all_subgroups(g)) {
      if (!normal_oracle(g, h))
        continue;
      auto q = quotient(g, h);
      for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
          ASSERT_EQ(q.cosets.coset_of[g.mul(a, b)],
                    q.group.mul(q.cosets.coset_of[a], q.cosets.coset_of[b]));
    }
  }
}

TEST(AbelianInvariants, KnownDecompositions)
{
  struct Case {
    const char* spec;
    std::vector<std::uint64_t> factors;
  };
  for (const auto& c : std::vector<Case>{{"C12", {12}},
                                         {"C2xC6", {2, 6}},
                                         {"C4xC2", {2, 4}},
                                         {"C2xC3", {6}},
                                         {"C3xC3", {3, 3}},
                                         {"C2xC2xC4", {2, 2, 4}},
                                         {"C3xC9", {3, 9}},
                                         {"C1", {}},
                                         {"D4", {2, 2}}}) {
    EXPECT_EQ(abelian_invariants(build_named_group(c.spec)).factors, c.factors) << c.spec;
  }
  EXPECT_THROW(abelian_invariants(build_named_group("S3")), std::invalid_argument);
}

TEST(AbelianInvariants, TorsionCountsMatchFactors)
{
  // #{x : x^k = e} = prod gcd(k, d_i) pins down the invariant factors
  for (auto spec : {"C2xC4xC8", "C6xC10", "C4xC4", "C2xC2xC2xC3", "C9xC3", "C8xC8"}) {
    auto g = build_named_group(spec);
    auto inv = abelian_invariants(g);
    for (std::size_t k = 1; k <= g.order(); ++k) {
      if (g.order() % k)
        continue;
      std::size_t count = 0;
      for (Element x = 0; x < g.order(); ++x)
        count += k % g.element_order(x) == 0;
      std::size_t expect = 1;
      for (auto d : inv.factors)
        expect *= std::gcd<std::size_t>(k, d);
      EXPECT_EQ(count, expect) << spec << " k=" << k;
    }
  }
}

TEST(AbelianInvariants, ResiduesAreAnIsomorphism)
{
  auto g = build_named_group("C2xC6xC4");
  auto inv = abelian_invariants(g);
  std::set<std::uint64_t> codes;
  for (Element x = 0; x < g.order(); ++x)
    codes.insert(inv.encode(inv.residues[x]));
  EXPECT_EQ(codes.size(), g.order());
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      const auto ab = g.mul(a, b);
      for (std::size_t k = 0; k < inv.factors.size(); ++k)
        ASSERT_EQ(inv.residues[ab][k], (inv.residues[a][k] + inv.residues[b][k]) % inv.factors[k]);
    }
  }
}

TEST(Nilpotency, KnownFamilies)
{
  for (auto spec : {"C12", "D8", "Q8", "D16", "C2xD8", "Dic16", "C3xQ8", "C5xC5"})
    EXPECT_TRUE(is_nilpotent(build_named_group(spec))) << spec;
  for (auto spec : {"S3", "D12", "A4", "S4", "A5", "Dic12", "D20", "C2xS3"})
    EXPECT_FALSE(is_nilpotent(build_named_group(spec))) << spec;
}

TEST(Sylow, CountsMatchKnownValues)
{
  EXPECT_EQ(sylow_subgroups(build_named_group("S3"), 2).size(), 3u);
  EXPECT_EQ(sylow_subgroups(build_named_group("S4"), 2).size(), 3u);
  EXPECT_EQ(sylow_subgroups(build_named_group("S4"), 3).size(), 4u);
  EXPECT_EQ(sylow_subgroups(build_named_group("A5"), 5).size(), 6u);
  EXPECT_EQ(sylow_subgroups(build_named_group("A5"), 2).size(), 5u);
  EXPECT_EQ(sylow_subgroups(build_named_group("A4"), 2).size(), 1u);
  for (const auto& h : sylow_subgroups(build_named_group("S4"), 2))
    EXPECT_EQ(h.order(), 8u);
  EXPECT_THROW(sylow_subgroups(build_named_group("S3"), 5), std::invalid_argument);
}
