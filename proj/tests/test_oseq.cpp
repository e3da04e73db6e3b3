#include <catch_amalgamated.hpp>

#include "betti/oseq.hpp"
#include "oracles.hpp"

using namespace betti;

namespace {

std::vector<Rational> rats(std::initializer_list<long> xs) {
  return std::vector<Rational>(xs.begin(), xs.end());
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}

Rational q(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("OSequence invariants") {
  CHECK(OSequence{1, 3, 2, 0, 0}.values() == ints({1, 3, 2}));
  CHECK(OSequence{1, 3, 2}.socle_degree() == 2);
  CHECK(OSequence{1, 3, 2}[7] == 0);
  CHECK_THROWS_AS((OSequence{2, 1}), validation_error);
  CHECK_THROWS_AS((OSequence{1, -1}), validation_error);
}

TEST_CASE("macaulay_representation") {
  using T = MacaulayRep::Term;
  CHECK(macaulay_representation(5, 2).terms == std::vector<T>{{3, 2}, {2, 1}});
  CHECK(macaulay_representation(11, 1).terms == std::vector<T>{{11, 1}});
  CHECK(macaulay_representation(6, 3).terms == std::vector<T>{{4, 3}, {2, 2}, {1, 1}});
  CHECK_THROWS_AS(macaulay_representation(0, 2), validation_error);
  CHECK_THROWS_AS(macaulay_representation(3, 0), validation_error);
}

TEST_CASE("macaulay_representation invariants over a range") {
  for (long a = 1; a <= 400; ++a)
    for (std::int64_t d = 1; d <= 6; ++d) {
      const auto rep = macaulay_representation(a, d);
      REQUIRE(rep.value() == a);
      REQUIRE(rep.terms.front().bottom == d);
      for (std::size_t k = 0; k < rep.terms.size(); ++k) {
        REQUIRE(rep.terms[k].top >= rep.terms[k].bottom);
        REQUIRE(rep.terms[k].bottom >= 1);
        if (k) {
          REQUIRE(rep.terms[k].bottom == rep.terms[k - 1].bottom - 1);
          REQUIRE(rep.terms[k].top < rep.terms[k - 1].top);
        }
      }
    }
}

TEST_CASE("macaulay_bound") {
  CHECK(macaulay_bound(5, 2) == 7);
  CHECK(macaulay_bound(0, 4) == 0);
  CHECK(macaulay_bound(3, 1) == 6);
  CHECK_THROWS_AS(macaulay_bound(3, 0), validation_error);
  // large inputs stay exact
  CHECK(macaulay_bound(Integer("1000000000000"), 1) == binomial(Integer("1000000000001"), 2));
}

TEST_CASE("lex_growth_oracle") {
  CHECK(lex_growth_oracle(5, 2) == 7);
  CHECK(lex_growth_oracle(1, 4) == 1);
  CHECK(lex_growth_oracle(3, 1) == 6);
  CHECK_THROWS_AS(lex_growth_oracle(61, 2), validation_error);
  CHECK_THROWS_AS(lex_growth_oracle(5, 6), validation_error);
}

TEST_CASE("macaulay_bound matches lex growth and is at least a") {
  for (long a = 1; a <= 30; ++a)
    for (long d = 1; d <= 4; ++d) {
      INFO("a=" << a << " d=" << d);
      CHECK(macaulay_bound(a, d) == lex_growth_oracle(a, d));
      CHECK(macaulay_bound(a, d) >= a);
    }
}

TEST_CASE("is_o_sequence") {
  CHECK(is_o_sequence(ints({1, 3, 2})));
  CHECK_FALSE(is_o_sequence(ints({1, 3, 5, 8})));
  CHECK(*o_sequence_defect(ints({1, 3, 5, 8})) == "h_3 = 8 exceeds 5^<2> = 7");
  CHECK_FALSE(is_o_sequence(ints({2, 1})));
  CHECK_FALSE(is_o_sequence(ints({})));
  CHECK_FALSE(is_o_sequence(ints({1, -2})));
  CHECK(is_o_sequence(ints({1, 40, 3})));  // h_1 is free
  CHECK_FALSE(is_o_sequence(ints({1, 1, 2})));
  CHECK_FALSE(is_o_sequence(ints({1, 2, 0, 1})));
}

TEST_CASE("max_ideal_power_oseq") {
  CHECK(max_ideal_power_oseq(3, 2) == OSequence{1, 3, 6});
  CHECK(max_ideal_power_oseq(4, 0) == OSequence{1});
  CHECK(max_ideal_power_oseq(2, 3) == OSequence{1, 2, 3, 4});
  CHECK_THROWS_AS(max_ideal_power_oseq(0, 2), validation_error);
  for (std::int64_t d = 1; d <= 5; ++d)
    for (std::int64_t t = 0; t <= 5; ++t) CHECK(is_o_sequence(max_ideal_power_oseq(d, t)));
}

TEST_CASE("halfspace_slacks") {
  CHECK(halfspace_slacks(OSequence{1, 3, 2}, 3) == rats({0, 8, 10}));
  CHECK(halfspace_slacks(OSequence{1, 2, 5}, 2) == rats({0, -4, 20}));
  CHECK_THROWS_WITH(halfspace_slacks(OSequence{1, 4}, 3),
                    Catch::Matchers::ContainsSubstring("alpha_1 = 4 exceeds d = 3"));
}

TEST_CASE("maximal-ideal powers sit on every bounding hyperplane but the last") {
  for (std::int64_t d = 1; d <= 6; ++d)
    for (std::int64_t t = 0; t <= 6; ++t) {
      const auto s = halfspace_slacks(max_ideal_power_oseq(d, t), d);
      for (std::int64_t j = 0; j < t; ++j) CHECK(s[j] == 0);
      CHECK(s[t] == Rational((d + t) * binomial(d + t - 1, t)));
    }
}

TEST_CASE("in_cone") {
  CHECK(in_cone(OSequence{1, 3, 2}, 3));
  CHECK_FALSE(in_cone(OSequence{1, 2, 5}, 2));
  CHECK(in_cone(OSequence{1}, 4));
  CHECK(in_cone(std::vector<Rational>{1, q(3, 2)}, 2));
  CHECK_THROWS_AS(in_cone(rats({1, -1}), 2), validation_error);
  CHECK_THROWS_AS(in_cone(rats({2}), 2), validation_error);
}

TEST_CASE("oseq_decompose and oseq_recompose") {
  CHECK(oseq_decompose(OSequence{1, 3, 2}, 3) == std::vector<Rational>{0, q(2, 3), q(1, 3)});
  CHECK(oseq_decompose(max_ideal_power_oseq(3, 3), 3) == rats({0, 0, 0, 1}));
  CHECK(oseq_decompose(OSequence{1}, 5) == rats({1}));

  CHECK(oseq_recompose(std::vector<Rational>{0, q(2, 3), q(1, 3)}, 3) == rats({1, 3, 2}));
  CHECK(oseq_recompose(rats({1}), 4) == rats({1}));
  CHECK(oseq_recompose(rats({0, 0, 1}), 2) == rats({1, 2, 3}));
}

TEST_CASE("oseq_decompose matches back substitution and round-trips") {
  for (std::int64_t d = 1; d <= 4; ++d)
    oracle::for_each_o_sequence(d, 4, 30, [&](const OSequence& alpha) {
      const auto c = oseq_decompose(alpha, d);
      REQUIRE(c == oracle::ray_weights_by_back_substitution(alpha.as_rationals(), d));
      REQUIRE(oseq_recompose(c, d) == alpha.as_rationals());
      Rational sum = 0;
      bool nonneg = true;
      for (const auto& x : c) {
        sum += x;
        nonneg = nonneg && x >= 0;
      }
      REQUIRE(sum == 1);
      REQUIRE(nonneg == in_cone(alpha, d));
      REQUIRE(nonneg);
    });
}

TEST_CASE("nonnegative weights exactly characterize cone points") {
  // rational points near the boundary, inside and outside
  for (long a1 = 0; a1 <= 3; ++a1)
    for (long n2 = 0; n2 <= 12; ++n2) {
      const std::vector<Rational> alpha{1, a1, q(n2, 2)};
      const auto c = oseq_decompose(alpha, 3);
      bool nonneg = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; });
      CHECK(nonneg == in_cone(alpha, 3));
    }
}
