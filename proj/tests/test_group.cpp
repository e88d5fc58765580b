#include <gtest/gtest.h>

#include "frucht/group.hpp"
#include "oracles.hpp"

using namespace frucht;

namespace {

FiniteGroup s3() {
  std::vector<Permutation> gens{Permutation::parse_cycles("(0 1)", 3), Permutation::parse_cycles("(0 1 2)", 3)};
  return FiniteGroup::from_permutations(3, gens);
}

const CatalogEntry& entry(const std::vector<CatalogEntry>& cat, const std::string& name) {
  for (const auto& e : cat)
    if (e.name == name) return e;
  throw std::runtime_error("no catalog entry " + name);
}

}  // namespace

TEST(FiniteGroup, FromTable) {
  auto c3 = FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(c3, cyclic_group(3));
  EXPECT_EQ(c3.element_order(1), 3);
  EXPECT_EQ(c3.inverse(1), 2);
}

TEST(FiniteGroup, IdentityIsMovedToZero) {
  // Z/2 with the identity listed second.
  auto g = FiniteGroup::from_table({{1, 0}, {0, 1}});
  EXPECT_EQ(g.mul(0, 1), 1);
  EXPECT_EQ(g.mul(1, 1), 0);
}

TEST(FiniteGroup, TableValidation) {
  EXPECT_THROW(FiniteGroup::from_table({}), InputError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1}}), InputError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), InputError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 2}, {1, 0}}), InputError);
  // Latin square with identity 0 but not associative.
  EXPECT_THROW(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}}),
               InputError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 0}}, GroupOptions{1}), CapExceeded);
}

TEST(FiniteGroup, FromPermutations) {
  EXPECT_EQ(s3().order(), 6);
  std::vector<Permutation> d4{Permutation::parse_cycles("(0 1 2 3)", 4), Permutation::parse_cycles("(0 2)", 4)};
  EXPECT_EQ(FiniteGroup::from_permutations(4, d4).order(), 8);
  std::vector<Permutation> none;
  EXPECT_EQ(FiniteGroup::from_permutations(3, none).order(), 1);
  EXPECT_THROW(FiniteGroup::from_permutations(5, d4), InputError);
  EXPECT_THROW(symmetric_group(8), CapExceeded);
}

TEST(FiniteGroup, Constructors) {
  EXPECT_EQ(dihedral_group(4).order(), 8);
  EXPECT_FALSE(dihedral_group(4).is_abelian());
  EXPECT_EQ(dihedral_group(4).center().size(), 2u);
  EXPECT_EQ(quaternion_group().center(), (std::vector<int>{0, 4}));
  EXPECT_EQ(symmetric_group(4).order(), 24);
  EXPECT_EQ(alternating_group(4).order(), 12);
  EXPECT_TRUE(direct_product(cyclic_group(2), cyclic_group(2)).is_abelian());
  EXPECT_TRUE(are_isomorphic(dihedral_group(3), s3()));
  EXPECT_FALSE(are_isomorphic(dihedral_group(4), quaternion_group()));
}

TEST(GeneratingSets, Membership) {
  auto c4 = cyclic_group(4);
  EXPECT_TRUE(is_generating_set(c4, std::vector<int>{1}));
  EXPECT_FALSE(is_generating_set(c4, std::vector<int>{2}));
  EXPECT_TRUE(is_generating_set(s3(), std::vector<int>{1, 2}));
  EXPECT_THROW(is_generating_set(c4, std::vector<int>{0}), IdentityInGeneratingSet);
  EXPECT_THROW(is_generating_set(c4, std::vector<int>{4}), InputError);
  EXPECT_THROW(make_generating_set(c4, {2}), NotGenerating);
  EXPECT_EQ(make_generating_set(c4, {3, 1, 3}).elements, (std::vector<int>{1, 3}));
}

TEST(GeneratingSets, GreedyGeneratesEveryCatalogGroup) {
  for (const auto& e : group_catalog()) {
    auto s = greedy_generating_set(e.group);
    EXPECT_EQ(e.group.closure(s.elements).size(), static_cast<std::size_t>(e.group.order())) << e.name;
  }
}

TEST(Catalog, DocumentedGeneratingSets) {
  auto cat = group_catalog();
  EXPECT_EQ(cat.size(), 22u);
  for (const auto& e : cat) {
    EXPECT_EQ(e.group.closure(e.gens.elements).size(), static_cast<std::size_t>(e.group.order())) << e.name;
    EXPECT_LE(e.group.order(), 12) << e.name;
  }
  EXPECT_TRUE(entry(cat, "C1").gens.elements.empty());
  EXPECT_TRUE(are_isomorphic(entry(cat, "D6").group, dihedral_group(6)));
  EXPECT_FALSE(entry(cat, "A4").group.is_abelian());
}

TEST(GroupAutomorphisms, SmallExamples) {
  EXPECT_EQ(group_automorphisms(cyclic_group(2)).size(), 1u);
  auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(group_automorphisms(v4).size(), oracle::brute_force_group_automorphisms(v4).size());
  EXPECT_EQ(group_automorphisms(v4).size(), 6u);
  EXPECT_EQ(group_automorphisms(s3()).size(), 6u);
}

TEST(GroupAutomorphisms, MatchBruteForceOnCatalog) {
  for (const auto& e : group_catalog()) {
    if (e.group.order() > 10) continue;  // brute force is factorial in |G|
    auto mine = group_automorphisms(e.group);
    std::vector<std::vector<int>> as_lists;
    for (const auto& m : mine) as_lists.push_back(m.images);
    EXPECT_EQ(as_lists, oracle::brute_force_group_automorphisms(e.group)) << e.name;
  }
}

TEST(InnerAutomorphisms, Examples) {
  auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  std::vector<int> id{0, 1, 2, 3};
  EXPECT_EQ(is_inner(v4, GroupMap{id}), 0);
  for (const auto& f : group_automorphisms(v4))
    if (f.images != id) {
      EXPECT_FALSE(is_inner(v4, f));
    }
  for (const auto& f : group_automorphisms(s3())) {
    auto x = is_inner(s3(), f);
    ASSERT_TRUE(x);
    for (int y = 0; y < 6; ++y) EXPECT_EQ(f(y), s3().mul(s3().mul(*x, y), s3().inverse(*x)));
  }
  EXPECT_THROW(is_inner(v4, GroupMap{{0, 1, 1, 3}}), InputError);
}

TEST(InnerAutomorphisms, CountIsIndexOfCenter) {
  for (const auto& e : group_catalog()) {
    if (e.group.order() > 10) continue;
    int inner = 0;
    for (const auto& f : group_automorphisms(e.group)) inner += is_inner(e.group, f).has_value();
    const auto brute = oracle::brute_force_inner_automorphisms(e.group).size();
    EXPECT_EQ(static_cast<std::size_t>(inner), brute) << e.name;
    EXPECT_EQ(inner * static_cast<int>(e.group.center().size()), e.group.order()) << e.name;
  }
}

TEST(GroupIsomorphism, Examples) {
  auto c4 = cyclic_group(4);
  auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_FALSE(are_isomorphic(c4, v4));
  auto self = are_isomorphic(c4, c4);
  ASSERT_TRUE(self);
  EXPECT_TRUE(is_homomorphism(c4, c4, *self));
  auto m = are_isomorphic(s3(), dihedral_group(3));
  ASSERT_TRUE(m);
  EXPECT_TRUE(is_homomorphism(s3(), dihedral_group(3), *m));
  EXPECT_TRUE(are_isomorphic(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))));
  EXPECT_FALSE(are_isomorphic(cyclic_group(6), s3()));
}

TEST(GroupIo, ParseAndFormat) {
  auto g = parse_group("# cyclic\ntable 3\n0 1 2\n1 2 0\n\n2 0 1\n");
  EXPECT_EQ(g, cyclic_group(3));
  EXPECT_EQ(parse_group(format_group(dihedral_group(5))), dihedral_group(5));
  EXPECT_EQ(parse_group("perm 3\n(0 1)\n(0 1 2)\n").order(), 6);
}

TEST(GroupIo, ErrorsNameTheLine) {
  auto line_of = [](const std::string& text) {
    try {
      parse_group(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("table 2\n0 1\n1 x\n"), 3);
  EXPECT_EQ(line_of("table 2\n0 1\n1 5\n"), 3);
  EXPECT_EQ(line_of("perm 3\n(0 1)\n(0 7)\n"), 3);
  EXPECT_EQ(line_of("\nmatrix 2\n"), 2);
  EXPECT_EQ(line_of("table 2\n0 1\n1 0\n0 1\n"), 4);
  EXPECT_THROW(parse_group(""), ParseError);
  EXPECT_THROW(parse_group("table 2\n0 1\n"), ParseError);
}
