#include <catch_amalgamated.hpp>

#include "betti/ferrers.hpp"
#include "oracles.hpp"

using namespace betti;

TEST_CASE("FerrersHypergraph rejects sets that are not downward closed") {
  CHECK_THROWS_AS(FerrersHypergraph(2, {{1, 2}}), validation_error);
  CHECK_THROWS_AS(FerrersHypergraph(2, {{1, 1, 1}}), validation_error);
  CHECK_THROWS_AS(FerrersHypergraph(2, {{0, 1}}), validation_error);
  CHECK_NOTHROW(FerrersHypergraph(2, {{1, 1}, {1, 2}}));
}

TEST_CASE("ferrers_closure") {
  CHECK(ferrers_closure({{1, 2}, {2, 1}}, 2).tuples() == std::set<Tuple>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(ferrers_closure({{1, 1, 1}}, 3).tuples() == std::set<Tuple>{{1, 1, 1}});
  CHECK(ferrers_closure({}, 2).empty());
  CHECK_THROWS_AS(ferrers_closure({{1, 2, 3}}, 2), validation_error);
  CHECK_THROWS_AS(ferrers_closure({{0, 2}}, 2), validation_error);
}

TEST_CASE("ferrers_closure is idempotent and monotone") {
  const auto ideals = enumerate_ferrers(2, 3);
  for (const auto& F : ideals) CHECK(ferrers_closure(F.tuples(), 2) == F);
  const std::set<Tuple> small{{2, 1}}, big{{2, 1}, {1, 3}};
  const auto a = ferrers_closure(small, 2), b = ferrers_closure(big, 2);
  for (const auto& e : a.tuples()) CHECK(b.contains(e));
  CHECK(ferrers_closure({{2, 3}}, 2).size() == 6);
}

TEST_CASE("ferrers_alpha") {
  CHECK(ferrers_alpha(ferrers_closure({{1, 2}, {2, 1}}, 2)) == OSequence{1, 2});
  CHECK(ferrers_alpha(ferrers_closure({{1, 1, 1, 1}}, 4)) == OSequence{1});
  CHECK(ferrers_alpha(ferrers_closure({{1, 3}, {2, 2}, {3, 1}}, 2)) == OSequence{1, 2, 3});
  CHECK_THROWS_AS(ferrers_alpha(FerrersHypergraph(2, {})), validation_error);
}

TEST_CASE("ferrers_quotient_decomposition") {
  CHECK(ferrers_quotient_decomposition(ferrers_closure({{1, 2}, {2, 1}}, 2)) ==
        Decomposition({{{0, 2, 3}, 6}}));
  CHECK(ferrers_quotient_decomposition(ferrers_closure({{1, 1}}, 2)) ==
        Decomposition({{{0, 2}, 2}}));
  CHECK(ferrers_quotient_decomposition(ferrers_closure({{1, 1, 1}}, 3)) ==
        Decomposition({{{0, 3}, 3}}));
  CHECK_THROWS_AS(ferrers_quotient_decomposition(ferrers_closure({{2}}, 1)), validation_error);
  CHECK_THROWS_AS(ferrers_quotient_decomposition(FerrersHypergraph(2, {})), validation_error);
}

TEST_CASE("enumerate_ferrers small cases") {
  const auto line = enumerate_ferrers(1, 3);
  REQUIRE(line.size() == 3);
  CHECK(line[0].tuples() == std::set<Tuple>{{1}});
  CHECK(line[1].tuples() == std::set<Tuple>{{1}, {2}});
  CHECK(line[2].tuples() == std::set<Tuple>{{1}, {2}, {3}});
  CHECK(enumerate_ferrers(2, 2).size() == 5);
  const auto single = enumerate_ferrers(2, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].tuples() == std::set<Tuple>{{1, 1}});
  CHECK_THROWS_AS(enumerate_ferrers(3, 5), validation_error);
  CHECK_THROWS_AS(enumerate_ferrers(0, 2), validation_error);
}

TEST_CASE("enumerate_ferrers matches brute-force order ideals") {
  for (auto [d, bound] : std::vector<std::pair<std::size_t, std::int64_t>>{
           {1, 4}, {2, 3}, {2, 4}, {3, 2}}) {
    std::set<std::set<Tuple>> seen;
    for (const auto& F : enumerate_ferrers(d, bound)) CHECK(seen.insert(F.tuples()).second);
    auto expected = oracle::order_ideals_brute(d, bound);
    CHECK(seen == expected);
  }
  // count of plane partitions in a 3x3x3 box
  CHECK(enumerate_ferrers(3, 3).size() + 1 == 980);
}

TEST_CASE("Ferrers and O-sequence routes give the same quotient decomposition") {
  for (auto [d, bound] : std::vector<std::pair<std::size_t, std::int64_t>>{{2, 4}, {3, 3}}) {
    for_each_ferrers(d, bound, [&](const FerrersHypergraph& F) {
      const OSequence alpha = ferrers_alpha(F);
      REQUIRE(is_o_sequence(alpha));
      REQUIRE(alpha[1] <= static_cast<long>(d));
      const auto via_ferrers = ferrers_quotient_decomposition(F);
      const auto via_alpha = quotient_decomposition(alpha, static_cast<std::int64_t>(d));
      REQUIRE(via_ferrers == via_alpha);
      REQUIRE(recompose(via_ferrers) == quotient_table(alpha, static_cast<std::int64_t>(d)));
    });
  }
}
