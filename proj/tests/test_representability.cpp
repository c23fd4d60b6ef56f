#include <gtest/gtest.h>

#include <bit>

#include "qucode/named_groups.hpp"
#include "qucode/representability.hpp"
#include "qucode/selection.hpp"
#include "support.hpp"

using namespace qucode;
namespace oracle = qucode::testing;

namespace {

/// Tries every n-tuple of subgroups of every abelian group of order m.
bool naive_representable(const IndexVector& target, std::size_t m)
{
  for (const auto& a : abelian_groups_of_order(m)) {
    const auto subs = all_subgroups(a);
    std::vector<std::size_t> pick(target.n, 0);
    while (true) {
      std::vector<Subgroup> chosen;
      for (auto k : pick)
        chosen.push_back(subs[k]);
      bool ok = true;
      for (CoordinateSet s = 1; s < target.indices.size() && ok; ++s)
        ok = a.order() / oracle::intersection_order_oracle(a, chosen, s) == target[s];
      if (ok)
        return true;
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == subs.size())
        pick[i++] = 0;
      if (i == pick.size())
        break;
    }
  }
  return false;
}

std::vector<std::string> labels(const std::vector<FiniteGroup>& gs)
{
  std::vector<std::string> out;
  for (const auto& g : gs)
    out.push_back(g.label());
  return out;
}

}  // namespace

TEST(IndexVector, PaperExample1)
{
  auto g = build_named_group("C3xC3");
  auto iv = index_vector(g, select_subgroups(g, "all-nontrivial"));
  EXPECT_EQ(iv.n, 4u);
  EXPECT_EQ(iv[0], 1u);
  for (CoordinateSet a : subsets_by_size(4))
    EXPECT_EQ(iv[a], std::popcount(a) == 1 ? 3u : 9u);
}

TEST(AbelianGroups, IsomorphismClasses)
{
  EXPECT_EQ(labels(abelian_groups_of_order(8)), (std::vector<std::string>{"C8", "C2xC4", "C2xC2xC2"}));
  EXPECT_EQ(labels(abelian_groups_of_order(12)), (std::vector<std::string>{"C12", "C2xC6"}));
  EXPECT_EQ(labels(abelian_groups_of_order(1)), (std::vector<std::string>{"C1"}));
  // partition counts: p(4) = 5, p(2)^2 = 4, p(6) = 11
  EXPECT_EQ(abelian_groups_of_order(16).size(), 5u);
  EXPECT_EQ(abelian_groups_of_order(36).size(), 4u);
  EXPECT_EQ(abelian_groups_of_order(64).size(), 11u);
  for (const auto& a : abelian_groups_of_order(72))
    EXPECT_TRUE(a.is_abelian());
}

TEST(Representation, S3TranspositionsHaveNone)
{
  auto g = build_named_group("S3");
  auto subs = select_subgroups(g, "all-index:3");
  ASSERT_EQ(subs.size(), 3u);
  auto r = find_abelian_representation(g, subs);
  EXPECT_FALSE(r.representation.has_value());
  EXPECT_EQ(r.orders_searched, (std::vector<std::size_t>{6}));
  EXPECT_FALSE(naive_representable(index_vector(g, subs), 6));
}

TEST(Representation, WiderOrderSearch)
{
  auto g = build_named_group("S3");
  auto subs = select_subgroups(g, "all-index:3");
  SearchOptions opts;
  opts.order_multiple = 4;
  auto r = find_abelian_representation(g, subs, opts);
  EXPECT_FALSE(r.representation.has_value());
  EXPECT_EQ(r.orders_searched, (std::vector<std::size_t>{6, 12, 24}));
}

TEST(Representation, D12FigurePair)
{
  auto g = build_named_group("D12");
  auto subs = select_subgroups(g, "gens:r^3|gens:r^2;s");
  auto r = find_abelian_representation(g, subs);
  ASSERT_TRUE(r.representation.has_value());
  EXPECT_EQ(r.representation->abelian_group.order(), 12u);
  EXPECT_EQ(index_vector(r.representation->abelian_group, r.representation->subgroups),
            index_vector(g, subs));
}

TEST(Representation, D8NormalFamilies)
{
  auto g = build_named_group("D8");
  auto normals = select_subgroups(g, "all-normal-proper");
  ASSERT_EQ(normals.size(), 5u);
  for (CoordinateSet pick = 1; pick < (1u << normals.size()); ++pick) {
    std::vector<Subgroup> subs;
    for (auto i : coordinates_of(pick))
      subs.push_back(normals[i]);
    auto r = find_abelian_representation(g, subs);
    ASSERT_TRUE(r.representation.has_value()) << format_subset(pick);
    EXPECT_EQ(index_vector(r.representation->abelian_group, r.representation->subgroups),
              index_vector(g, subs));
  }
}

TEST(Representation, AgreesWithNaiveSearch)
{
  for (auto [spec, sel] : std::vector<std::pair<const char*, const char*>>{
           {"S3", "gens:(12)|gens:(123)"},
           {"D8", "gens:s|gens:rs"},
           {"Q8", "gens:i|gens:j"},
           {"A4", "all-index:4"},
           {"D12", "gens:s|gens:r^2"},
           {"Dic12", "gens:x|gens:a^2"}}) {
    auto g = build_named_group(spec);
    auto subs = select_subgroups(g, sel);
    if (subs.size() > 3)
      subs.resize(3, subs.front());
    SearchOptions opts;
    auto r = find_abelian_representation(g, subs, opts);
    EXPECT_EQ(r.representation.has_value(), naive_representable(index_vector(g, subs), g.order()))
        << spec << " " << sel;
  }
}

TEST(Representation, AbelianSelfAndSearch)
{
  auto g = build_named_group("C2xC4");
  auto subs = select_subgroups(g, "all-index:2");
  auto self = find_abelian_representation(g, subs);
  ASSERT_TRUE(self.representation.has_value());
  EXPECT_TRUE(self.representation->abelian_group.same_as(g));

  SearchOptions opts;
  opts.self_representation = false;
  auto searched = find_abelian_representation(g, subs, opts);
  ASSERT_TRUE(searched.representation.has_value());
  EXPECT_EQ(index_vector(searched.representation->abelian_group, searched.representation->subgroups),
            index_vector(g, subs));
}

TEST(Representation, Caps)
{
  auto g = build_named_group("S4");
  SearchOptions opts;
  opts.limits.max_search = 12;
  EXPECT_THROW(find_abelian_representation(g, select_subgroups(g, "gens:(12)"), opts), CapExceeded);
  auto c = build_named_group("C2xC2xC2");
  EXPECT_THROW(find_abelian_representation(c, select_subgroups(c, "all-index:2")), CapExceeded);
  opts = {};
  opts.order_multiple = 0;
  auto s3 = build_named_group("S3");
  EXPECT_THROW(find_abelian_representation(s3, select_subgroups(s3, "gens:(12)"), opts),
               std::invalid_argument);
}

TEST(NonNilpotentWitness, KnownGroups)
{
  for (auto spec : {"S3", "D12", "A4", "Dic12"}) {
    auto g = build_named_group(spec);
    auto w = check_non_nilpotent_witness(g);
    ASSERT_TRUE(w.has_value()) << spec;
    EXPECT_FALSE(find_abelian_representation(g, w->subgroups).representation.has_value()) << spec;
    EXPECT_EQ(w->indices, index_vector(g, w->subgroups));
  }
  auto s3 = check_non_nilpotent_witness(build_named_group("S3"));
  EXPECT_EQ(s3->subgroups.size(), 3u);
  EXPECT_THROW(check_non_nilpotent_witness(build_named_group("D8")), std::invalid_argument);
}
