#include "gds/state.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace gds;

namespace {

std::vector<State> parse_all(const std::vector<std::string>& strs) {
  std::vector<State> out;
  for (const auto& s : strs) out.push_back(State::parse(s));
  return out;
}

}  // namespace

TEST_CASE("state text round-trip and packing") {
  CHECK(State::parse("011").bits() == 0b110u);  // bit j-1 holds x_j
  CHECK(State::parse("011").str() == "011");
  CHECK(State::parse("100011").str() == "100011");
  CHECK(State::zeros(4).str() == "0000");
  CHECK(State::ones(4).str() == "1111");
  CHECK(State::parse("01").lex_index() == 1u);
  CHECK(State::parse("10").lex_index() == 2u);

  // Round-trip is the identity across every state up to n = 4.
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : oracle::o_all_states(n)) CHECK(State::parse(s).str() == s);

  CHECK_THROWS_AS(State::parse("01x"), std::invalid_argument);
  CHECK_THROWS_AS(State(2, 0b100), std::invalid_argument);
  CHECK_THROWS_AS(State::parse(""), std::invalid_argument);
}

TEST_CASE("leq is the coordinatewise partial order") {
  CHECK(leq(State::parse("000"), State::parse("111")));
  CHECK(leq(State::parse("011"), State::parse("011")));
  CHECK_FALSE(leq(State::parse("01"), State::parse("10")));
  CHECK_FALSE(leq(State::parse("10"), State::parse("01")));
  CHECK_THROWS_AS(leq(State::parse("01"), State::parse("011")), std::invalid_argument);

  // Agreement with the string oracle, plus the order axioms, exhaustively
  // for n <= 4.
  for (int n = 1; n <= 4; ++n) {
    auto states = oracle::o_all_states(n);
    for (const auto& a : states)
      for (const auto& b : states) {
        bool got = leq(State::parse(a), State::parse(b));
        CHECK(got == oracle::o_leq(a, b));
        if (got && oracle::o_leq(b, a)) CHECK(a == b);  // antisymmetry
        for (const auto& c : states)
          if (got && oracle::o_leq(b, c)) CHECK(oracle::o_leq(a, c));  // transitivity
      }
    for (const auto& a : states) CHECK(leq(State::parse(a), State::parse(a)));
  }
}

TEST_CASE("split states") {
  CHECK(s_state(SKind::S0, 3, 6).str() == "000111");
  CHECK(s_state(SKind::S0, 0, 4).str() == "1111");
  CHECK(s_state(SKind::S1, 2, 5).str() == "11000");
  CHECK(s_state(SKind::S0, 4, 4).str() == "0000");
  CHECK(s_state(SKind::S1, 5, 5).str() == "11111");
  CHECK_THROWS_AS(s_state(SKind::S0, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(s_state(SKind::S0, -1, 4), std::invalid_argument);
}

TEST_CASE("antichain predicate") {
  CHECK(is_antichain(parse_all({"010", "100", "001"})));
  CHECK_FALSE(is_antichain(parse_all({"00", "01"})));
  CHECK(is_antichain({}));
  CHECK(is_antichain(parse_all({"0110"})));
  // Middle layer of n=4: all six weight-2 states are pairwise incomparable
  // (oracle: brute-force pairwise comparison).
  std::vector<std::string> middle;
  for (const auto& s : oracle::o_all_states(4))
    if (std::count(s.begin(), s.end(), '1') == 2) middle.push_back(s);
  REQUIRE(middle.size() == 6);
  CHECK(oracle::o_is_antichain(middle));
  CHECK(is_antichain(parse_all(middle)));
}

TEST_CASE("lym report") {
  // {100, 010, 001}: each state has two zeros, so a_2 = 3 and the sum is
  // 3 / C(3,2) = 1.
  LymReport r = lym_report(parse_all({"100", "010", "001"}));
  CHECK(r.antichain);
  CHECK(r.counts == std::map<int, std::uint64_t>{{2, 3}});
  CHECK(r.lym_sum == Rational::make(1, 1));
  CHECK(r.lym_sum.le_one());

  // Single weight-2 state of n=4: one term 1 / C(4,2) = 1/6.
  r = lym_report(parse_all({"0011"}));
  CHECK(r.lym_sum == Rational::make(1, 6));
  CHECK(r.lym_sum.str() == "1/6");

  // {00, 01} is not an antichain; the report is still computed and its sum
  // 1/1 + 1/2 = 3/2 exceeds 1.
  r = lym_report(parse_all({"00", "01"}));
  CHECK_FALSE(r.antichain);
  CHECK(r.counts == std::map<int, std::uint64_t>{{1, 1}, {2, 1}});
  CHECK(r.lym_sum == Rational::make(3, 2));
  CHECK_FALSE(r.lym_sum.le_one());

  CHECK(lym_report({}).lym_sum == Rational::make(0, 1));

  // The per-level counts always add up to the set size (duplicates collapse).
  for (int n = 1; n <= 4; ++n) {
    std::mt19937 rng(n);
    std::bernoulli_distribution keep(0.4);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<State> a;
      for (std::uint32_t u = 0; u < (std::uint32_t(1) << n); ++u)
        if (keep(rng)) a.emplace_back(n, u);
      LymReport rep = lym_report(a);
      std::uint64_t total = 0;
      for (const auto& [k, ak] : rep.counts) total += ak;
      CHECK(total == a.size());
    }
  }
}

TEST_CASE("sperner bound and binomials") {
  CHECK(sperner_bound(4) == 6);
  CHECK(sperner_bound(2) == 2);
  CHECK(sperner_bound(6) == 20);
  CHECK(sperner_bound(1) == 1);
  CHECK_THROWS_AS(sperner_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(binomial(63, 31), std::invalid_argument);
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::o_binomial(n, k));
}

TEST_CASE("LYM and Sperner hold over every antichain, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t max_size = sperner_bound(n);
    for (const auto& a : oracle::o_all_antichains(n)) {
      LymReport r = lym_report(parse_all(a));
      CHECK(r.antichain);
      CHECK(r.lym_sum.le_one());
      CHECK(a.size() <= max_size);
      if (a.size() == max_size) {
        // Equality only for a full layer of weight floor(n/2) or the
        // complementary weight.
        auto ones = std::count(a.front().begin(), a.front().end(), '1');
        CHECK((ones == n / 2 || ones == n - n / 2));
        for (const auto& s : a)
          CHECK(std::count(s.begin(), s.end(), '1') == ones);
        CHECK(a.size() == oracle::o_binomial(n, static_cast<int>(ones)));
      }
    }
  }
}

TEST_CASE("randomized LYM check at n = 5") {
  std::mt19937 rng(7);
  auto states = oracle::o_all_states(5);
  std::bernoulli_distribution keep(0.3);
  int antichains = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> a;
    for (const auto& s : states)
      if (keep(rng)) a.push_back(s);
    if (!oracle::o_is_antichain(a)) continue;
    ++antichains;
    LymReport r = lym_report(parse_all(a));
    CHECK(r.antichain);
    CHECK(r.lym_sum.le_one());
    CHECK(a.size() <= sperner_bound(5));
  }
  CHECK(antichains > 0);
}

TEST_CASE("128-bit helpers") {
  CHECK(u128_str(0) == "0");
  CHECK(u128_str(factorial128(20)) == "2432902008176640000");
  CHECK(u128_str(factorial128(25)) == "15511210043330985984000000");
  CHECK(Rational::make(4, 24).str() == "1/6");
  CHECK(Rational::make(0, 5) == Rational::make(0, 9));
}
