#include <gtest/gtest.h>

#include <random>

#include "frucht/gadgets.hpp"
#include "oracles.hpp"

using namespace frucht;

TEST(ColorLabels, Defaults) {
  EXPECT_TRUE(default_color_labels(0).empty());
  auto one = default_color_labels(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].order(), 5);
  auto three = default_color_labels(3);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(three[i].order(), static_cast<int>(i) + 5);
    EXPECT_TRUE(is_rigid(three[i]));
    EXPECT_TRUE(is_connected(three[i].graph()));
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(are_isomorphic(three[i], three[j]));
  }
  EXPECT_NO_THROW(GadgetLayout::with_default_labels(6).validate());
}

TEST(ColorLabels, Validation) {
  GadgetLayout bad_sticks;
  bad_sticks.second_stick = 2;
  EXPECT_THROW(bad_sticks.validate(), InputError);
  bad_sticks.second_stick = 0;
  EXPECT_THROW(bad_sticks.validate(), InputError);

  GadgetLayout not_rigid;
  not_rigid.color_labels = {PointedGraph(path_graph(5), 2)};
  EXPECT_THROW(not_rigid.validate(), InputError);

  GadgetLayout duplicate;
  duplicate.color_labels = {PointedGraph(path_graph(5), 0), PointedGraph(path_graph(5), 4)};
  EXPECT_THROW(duplicate.validate(), InputError);

  GadgetLayout disconnected;
  disconnected.color_labels = {PointedGraph(Graph(2, {}), 0)};
  EXPECT_THROW(disconnected.validate(), InputError);

  ColoredDigraph cd(2, 2, {{0, 1, 1}});
  EXPECT_THROW(encode_colored_digraph(cd, GadgetLayout::with_default_labels(1)), InputError);
}

TEST(EncodeDirections, Examples) {
  auto one = encode_directions(Digraph(2, {{0, 1}}));
  EXPECT_EQ(one.graph.order(), 9);
  EXPECT_EQ(one.graph.size(), 8u);
  EXPECT_TRUE(is_rigid(one.graph));

  auto empty = encode_directions(Digraph(3, {}));
  EXPECT_EQ(empty.graph, Graph(3, {}));

  auto cyc = encode_directions(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(cyc.graph.order(), 24);
  EXPECT_EQ(cyc.graph.size(), 24u);
  EXPECT_EQ(automorphism_group(cyc.graph).order, 3);
}

TEST(EncodeDirections, AntiparallelArcsAreDistinguished) {
  auto both = encode_directions(Digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(automorphism_group(both.graph).order, 2);
  auto one = encode_directions(Digraph(2, {{0, 1}}));
  EXPECT_EQ(automorphism_group(one.graph).order, 1);
}

TEST(EncodeColored, Examples) {
  auto one = encode_colored_digraph(ColoredDigraph(2, 1, {{0, 1, 0}}));
  EXPECT_EQ(one.graph.order(), 13);
  EXPECT_TRUE(is_rigid(one.graph));

  auto cyc = encode_colored_digraph(ColoredDigraph(3, 1, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}));
  EXPECT_EQ(automorphism_group(cyc.graph).order, 3);

  auto none = encode_colored_digraph(ColoredDigraph(4, 2, {}));
  EXPECT_EQ(none.graph, Graph(4, {}));
}

TEST(EncodeColored, ColorsAreNotInterchangeable) {
  // Two-colored 2-cycle: swapping the vertices would swap colors.
  auto enc = encode_colored_digraph(ColoredDigraph(2, 2, {{0, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(automorphism_group(enc.graph).order, 1);
  auto same = encode_colored_digraph(ColoredDigraph(2, 2, {{0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(automorphism_group(same.graph).order, 2);
}

TEST(EncodeColored, FaithfulOnRandomDigraphs) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    auto cd = oracle::random_colored_digraph(2 + trial % 4, 2, 0.35, rng);
    auto enc = encode_colored_digraph(cd);
    auto source = automorphism_group(cd);
    auto target = automorphism_group(enc.graph);
    EXPECT_EQ(source.order, target.order);
    EXPECT_EQ(source.order, oracle::brute_force_aut_count(cd));
    for (const auto& p : source.generators) {
      auto ext = extend_automorphism(enc, p);
      ASSERT_TRUE(ext);
      EXPECT_TRUE(is_automorphism(enc.graph, *ext));
    }
    EXPECT_TRUE(preserves_base(enc, target));
  }
}

TEST(ExtendAutomorphism, RejectsNonAutomorphisms) {
  auto enc = encode_directions(Digraph(3, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(extend_automorphism(enc, Permutation::parse_cycles("(0 2)", 3)));
  EXPECT_THROW(extend_automorphism(enc, Permutation::identity(2)), InputError);
}

TEST(FruchtGraph, Examples) {
  auto trivial = frucht_graph(cyclic_group(1), GeneratingSet{{}});
  EXPECT_EQ(trivial.encoded.graph, complete_graph(1));
  EXPECT_EQ(trivial.report.aut_order, 1);
  EXPECT_TRUE(trivial.report.passed());

  auto c3 = cyclic_group(3);
  auto r3 = frucht_graph(c3, make_generating_set(c3, {1}));
  EXPECT_EQ(r3.encoded.graph.order(), 36);
  EXPECT_EQ(r3.report.aut_order, 3);
  EXPECT_TRUE(r3.report.passed());
  EXPECT_GE(r3.report.orbit_count, 2);

  auto c2 = cyclic_group(2);
  auto r2 = frucht_graph(c2, make_generating_set(c2, {1}));
  EXPECT_EQ(r2.encoded.graph.order(), 24);
  EXPECT_EQ(r2.report.aut_order, 2);
  EXPECT_TRUE(r2.report.passed());
}

TEST(FruchtGraph, RestrictionToBaseIsFaithful) {
  auto g = quaternion_group();
  auto r = frucht_graph(g, make_generating_set(g, {1, 2}));
  ASSERT_TRUE(r.report.passed());
  auto restricted = restrict_to_base(r.encoded, r.aut);
  EXPECT_EQ(permutation_group_order(8, restricted), 8);
}
