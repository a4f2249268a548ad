#include "xicrystal/crystal.hpp"

#include "xicrystal/enumerate.hpp"
#include "xicrystal/regularity.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace xicrystal;

namespace {

SlopeDatum generic_111() { return SlopeDatum::generic(SlopeBase{1, 1, {1}}); }
SlopeDatum row_111() { return SlopeDatum::row(SlopeBase{1, 1, {1}}); }

MultiPartition single(int modulus, std::vector<int> parts) {
  return MultiPartition(modulus, {0},
                        {parts.empty() ? Partition{} : Partition{parts}});
}

std::vector<BracketEntry> entries_from_pattern(const std::string& pattern) {
  std::vector<BracketEntry> entries;
  for (char c : pattern) {
    entries.push_back(BracketEntry{c == '(', Box{}, false});
  }
  return entries;
}

std::pair<int, int> counts_after_cancel(const std::string& pattern) {
  auto entries = entries_from_pattern(pattern);
  cancel_brackets(entries);
  BracketString s{entries};
  return {s.open_count(), s.close_count()};
}

}  // namespace

TEST_CASE("bracket cancellation on synthetic strings") {
  CHECK(counts_after_cancel("()") == std::pair{0, 0});
  CHECK(counts_after_cancel(")(") == std::pair{1, 1});
  CHECK(counts_after_cancel("(())") == std::pair{0, 0});
  CHECK(counts_after_cancel("()()") == std::pair{0, 0});
  CHECK(counts_after_cancel(")()(") == std::pair{1, 1});
  CHECK(counts_after_cancel("(()") == std::pair{1, 0});
  CHECK(counts_after_cancel(")))(((") == std::pair{3, 3});
}

TEST_CASE("statistics are invariant under inserting canceling pairs") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> length(0, 12);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::string pattern;
    int len = length(rng);
    for (int i = 0; i < len; ++i) pattern += bit(rng) ? '(' : ')';
    auto base = counts_after_cancel(pattern);
    std::uniform_int_distribution<std::size_t> at(0, pattern.size());
    std::string padded = pattern;
    padded.insert(at(rng), "()");
    CHECK(counts_after_cancel(padded) == base);
  }
}

TEST_CASE("bracket strings of small shapes") {
  SlopeDatum generic = generic_111();

  auto empty_string = bracket_string(generic, MultiPartition(2, {0}), 0);
  REQUIRE(empty_string.entries.size() == 1);
  CHECK(empty_string.str() == "(");
  CHECK(empty_string.entries[0].box == Box{1, 1, 1});

  auto two_open = bracket_string(row_111(), single(2, {1}), 1);
  REQUIRE(two_open.entries.size() == 2);
  CHECK(two_open.str() == "((");
  CHECK(two_open.entries[0].box == Box{1, 2, 1});
  CHECK(two_open.entries[1].box == Box{1, 1, 2});

  auto row_shape0 = bracket_string(generic, single(2, {2}), 0);
  REQUIRE(row_shape0.entries.size() == 1);
  CHECK(row_shape0.str() == "(");
  CHECK(row_shape0.entries[0].box == Box{1, 1, 3});

  // for residue 1 the addable box sits above the removable one and cancels
  auto row_shape1 = bracket_string(generic, single(2, {2}), 1);
  REQUIRE(row_shape1.entries.size() == 2);
  CHECK(row_shape1.entries[0].box == Box{1, 2, 1});
  CHECK(row_shape1.entries[0].open);
  CHECK(row_shape1.entries[1].box == Box{1, 1, 2});
  CHECK(row_shape1.str() == "..");
  CHECK(row_shape1.open_count() == 0);
  CHECK(row_shape1.close_count() == 0);

  // row_prime reverses that order, so nothing cancels
  SlopeDatum prime = SlopeDatum::row_prime(SlopeBase{1, 1, {1}});
  auto prime_string = bracket_string(prime, single(2, {2}), 1);
  CHECK(prime_string.str() == ")(");

  CHECK_THROWS_AS(
      bracket_string(SlopeDatum::plain(SlopeBase{1, 1, {1}}), single(2, {2}), 1),
      std::invalid_argument);
}

TEST_CASE("lowering and raising operators") {
  SlopeDatum generic = generic_111();
  MultiPartition empty(2, {0});

  auto first = lower(generic, empty, 0);
  REQUIRE(first.has_value());
  CHECK(*first == single(2, {1}));
  CHECK_FALSE(lower(generic, empty, 1).has_value());
  CHECK_FALSE(raise(generic, empty, 0).has_value());

  auto second = lower(row_111(), single(2, {1}), 1);
  REQUIRE(second.has_value());
  CHECK(*second == single(2, {1, 1}));

  // the canceled string of the illegal row shape blocks both operators
  CHECK_FALSE(lower(generic, single(2, {2}), 1).has_value());
  CHECK_FALSE(raise(generic, single(2, {2}), 1).has_value());

  SlopeDatum prime = SlopeDatum::row_prime(SlopeBase{1, 1, {1}});
  auto raised = raise(prime, single(2, {2}), 1);
  REQUIRE(raised.has_value());
  CHECK(*raised == single(2, {1}));
  auto lowered = lower(prime, single(2, {2}), 1);
  REQUIRE(lowered.has_value());
  CHECK(*lowered == single(2, {2, 1}));
}

TEST_CASE("generation of small graphs") {
  SlopeDatum generic = generic_111();

  CrystalGraph depth0 = generate(generic, 2, {0}, 0);
  CHECK(depth0.vertices().size() == 1);
  CHECK(depth0.edges().empty());

  CrystalGraph depth2 = generate(generic, 2, {0}, 2);
  REQUIRE(depth2.vertices().size() == 3);
  std::set<std::string> keys;
  for (const auto& vertex : depth2.vertices()) keys.insert(vertex.to_json());
  CHECK(keys.count(MultiPartition(2, {0}).to_json()) == 1);
  CHECK(keys.count(single(2, {1}).to_json()) == 1);
  CHECK(keys.count(single(2, {1, 1}).to_json()) == 1);
  CHECK(keys.count(single(2, {2}).to_json()) == 0);

  SlopeDatum generic3 = SlopeDatum::generic(SlopeBase{1, 1, {1}});
  CrystalGraph depth1 = generate(generic3, 3, {0}, 1);
  REQUIRE(depth1.vertices().size() == 2);
  REQUIRE(depth1.edges().size() == 1);
  CHECK(depth1.edges()[0] == std::array<int, 3>{0, 0, 1});
}

TEST_CASE("generation preconditions") {
  CHECK_THROWS_AS(generate(SlopeDatum::plain(SlopeBase{1, 1, {1}}), 2, {0}, 2),
                  std::invalid_argument);
  SlopeDatum skew = SlopeDatum::generic(SlopeBase{1, 1, {1, Rational(7, 2)}});
  CHECK_THROWS_AS(generate(skew, 2, {0, 1}, 2), std::invalid_argument);
  CHECK(generate(skew, 2, {0, 1}, 2, true).vertices().size() > 0);
  // coloring length must match the datum
  CHECK_THROWS_AS(generate(generic_111(), 2, {0, 1}, 2),
                  std::invalid_argument);
}

TEST_CASE("generated vertices are exactly the regular ones") {
  struct Config {
    SlopeDatum datum;
    int modulus;
    std::vector<int> coloring;
  };
  std::vector<Config> configs{
      {generic_111(), 2, {0}},
      {SlopeDatum::row_prime(SlopeBase{1, 1, {1}}), 2, {0}},
      {SlopeDatum::row(SlopeBase{2, 1, {1, 1}}), 3, {0, 2}},
  };
  for (const auto& config : configs) {
    const int depth = 6;
    CrystalGraph graph =
        generate(config.datum, config.modulus, config.coloring, depth);
    std::set<std::string> generated;
    for (const auto& vertex : graph.vertices()) {
      generated.insert(vertex.to_json());
      CHECK(is_regular(config.datum, vertex));
    }
    std::size_t regular_count = 0;
    for (const auto& mp :
         multipartitions_up_to(config.modulus, config.coloring, depth)) {
      if (is_regular(config.datum, mp)) {
        ++regular_count;
        CHECK(generated.count(mp.to_json()) == 1);
      } else {
        CHECK(generated.count(mp.to_json()) == 0);
      }
    }
    CHECK(regular_count == generated.size());
  }
}

TEST_CASE("raising undoes lowering on generated vertices") {
  SlopeDatum datum = SlopeDatum::row(SlopeBase{1, 1, {1, 1}});
  CrystalGraph graph = generate(datum, 3, {0, 1}, 6);
  for (const auto& vertex : graph.vertices()) {
    for (int residue = 0; residue < 3; ++residue) {
      auto lowered = lower(datum, vertex, residue);
      if (lowered) {
        auto back = raise(datum, *lowered, residue);
        REQUIRE(back.has_value());
        CHECK(*back == vertex);
      }
      auto raised = raise(datum, vertex, residue);
      if (raised) {
        auto forward = lower(datum, *raised, residue);
        REQUIRE(forward.has_value());
        CHECK(*forward == vertex);
      }
    }
  }
}

TEST_CASE("parallel isomorphism check") {
  SlopeDatum generic = generic_111();
  SlopeDatum row = row_111();
  CrystalGraph g1 = generate(generic, 2, {0}, 6);
  CrystalGraph g2 = generate(row, 2, {0}, 6);

  CHECK_FALSE(parallel_iso_check(g1, g1).has_value());
  CHECK_FALSE(parallel_iso_check(g1, g2).has_value());
  CHECK(weight_multiplicities(g1) == weight_multiplicities(g2));

  // deleting one interior edge must surface that edge's word
  std::size_t victim = 0;
  for (std::size_t i = 0; i < g1.edges().size(); ++i) {
    if (g1.vertices()[g1.edges()[i][0]].total_boxes() + 1 < g1.max_boxes()) {
      victim = i;
    }
  }
  auto deleted = g1.edges()[victim];
  CrystalGraph corrupted(g1.modulus(), g1.coloring(), g1.max_boxes());
  for (const auto& vertex : g1.vertices()) corrupted.add_vertex(vertex);
  for (std::size_t i = 0; i < g1.edges().size(); ++i) {
    if (i == victim) continue;
    corrupted.add_edge(g1.edges()[i][0], g1.edges()[i][1], g1.edges()[i][2]);
  }
  auto mismatch = parallel_iso_check(g1, corrupted);
  REQUIRE(mismatch.has_value());
  REQUIRE(!mismatch->word.empty());
  CHECK(mismatch->word.back() == deleted[1]);
  // replaying the witness word prefix in the intact graph reaches the source
  int at = 0;
  for (std::size_t i = 0; i + 1 < mismatch->word.size(); ++i) {
    at = g1.edge_target(at, mismatch->word[i]);
    REQUIRE(at >= 0);
  }
  CHECK(at == deleted[0]);

  CHECK_THROWS_AS(parallel_iso_check(g1, generate(generic, 2, {0}, 5)),
                  std::invalid_argument);
}

TEST_CASE("level-one vertex counts match partitions with parts prime to n") {
  // Independent oracle: at level one the number of vertices with m boxes
  // equals the number of partitions of m into parts not divisible by n.
  const int depth = 10;
  for (int n : {2, 3, 4}) {
    std::vector<long> expected(depth + 1, 0);
    expected[0] = 1;
    for (int part = 1; part <= depth; ++part) {
      if (part % n == 0) continue;
      for (int total = part; total <= depth; ++total) {
        expected[total] += expected[total - part];
      }
    }
    for (auto mode : {SlopeMode::generic, SlopeMode::row_prime}) {
      SlopeDatum datum = SlopeDatum::make(mode, SlopeBase{1, 1, {1}});
      CrystalGraph graph = generate(datum, n, {0}, depth);
      std::vector<long> per_depth(depth + 1, 0);
      for (const auto& vertex : graph.vertices()) {
        per_depth[vertex.total_boxes()] += 1;
      }
      CHECK(per_depth == expected);
    }
  }
}

TEST_CASE("weight content") {
  CHECK(weight_content(MultiPartition(3, {0, 1})) ==
        std::vector<long>{0, 0, 0});
  MultiPartition figure(
      3, {0, 1, 1, 2},
      {Partition{{3, 2}}, Partition{{2, 1}}, Partition{{2, 2}},
       Partition{{2}}});
  CHECK(weight_content(figure) == std::vector<long>{5, 4, 5});
  auto first = lower(generic_111(), MultiPartition(2, {0}), 0);
  REQUIRE(first.has_value());
  CHECK(weight_content(*first) == std::vector<long>{1, 0});
}

TEST_CASE("weight multiplicities") {
  SlopeDatum generic = generic_111();
  auto depth0 = weight_multiplicities(generate(generic, 2, {0}, 0));
  REQUIRE(depth0.size() == 1);
  CHECK(depth0.at({0, 0}) == 1);

  auto depth2 = weight_multiplicities(generate(generic, 2, {0}, 2));
  REQUIRE(depth2.size() == 3);
  CHECK(depth2.at({0, 0}) == 1);
  CHECK(depth2.at({1, 0}) == 1);
  CHECK(depth2.at({1, 1}) == 1);

  auto left = weight_multiplicities(generate(generic, 2, {0}, 8));
  auto right = weight_multiplicities(generate(row_111(), 2, {0}, 8));
  CHECK(left == right);
}

TEST_CASE("graph exports") {
  SlopeDatum generic = generic_111();
  CrystalGraph graph = generate(generic, 2, {0}, 4);

  std::string dot = export_dot(graph);
  CHECK(dot.find("digraph") == 0);
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos;
       at = dot.find("->", at + 1)) {
    ++arrows;
  }
  CHECK(arrows == graph.edges().size());

  CrystalGraph depth0 = generate(generic, 2, {0}, 0);
  std::string dot0 = export_dot(depth0);
  CHECK(dot0.find("v0") != std::string::npos);
  CHECK(dot0.find("->") == std::string::npos);

  std::string text = export_json(graph);
  CrystalGraph parsed = graph_from_json(text);
  CHECK(parsed.vertices().size() == graph.vertices().size());
  CHECK(parsed.edges() == graph.edges());
  CHECK(export_json(parsed) == text);

  // identical inputs produce byte-identical outputs
  CHECK(export_json(generate(generic, 2, {0}, 4)) == text);
  CHECK(export_dot(generate(generic, 2, {0}, 4)) == dot);
}
