#include <gtest/gtest.h>

#include <functional>

#include "canonwit/bounds.hpp"
#include "canonwit/error.hpp"
#include "canonwit/graph.hpp"
#include "canonwit/oracles.hpp"

namespace canonwit {
namespace {

BoundNumber N(std::uint64_t v) { return BoundNumber(v); }

std::string dec(const BoundValue& v) { return v.decimal(); }

bool has(const BoundValue& v, BoundFlag f) { return v.flags.has(f); }

// Does every r-colouring of an n-set have m elements of one colour?
bool pigeonhole_forced(std::size_t r, std::size_t m, std::size_t n) {
  std::vector<std::size_t> colour(n, 0);
  while (true) {
    std::vector<std::size_t> counts(r, 0);
    for (std::size_t c : colour) ++counts[c];
    if (*std::max_element(counts.begin(), counts.end()) < m) return false;
    std::size_t i = 0;
    while (i < n && ++colour[i] == r) colour[i++] = 0;
    if (i == n) return true;
  }
}

// Does every red/blue colouring of K_n contain a monochromatic K_m?
bool ramsey_forced(std::size_t n, std::size_t m) {
  std::size_t pairs = n * (n - 1) / 2;
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<Edge> red;
    for (std::size_t i = 0; i < pairs; ++i)
      if ((mask >> i) & 1U) red.push_back(all[i]);
    Graph g = Graph::from_edge_list(n, red);
    if (!find_clique(g, m) && !find_independent_set(g, m)) return false;
  }
  return true;
}

TEST(Pigeonhole, Examples) {
  BoundCalculator calc;
  EXPECT_EQ(dec(calc.pigeonhole_P(N(2), N(3))), "5");
  EXPECT_EQ(dec(calc.pigeonhole_P(N(3), N(2))), "4");
  for (std::uint64_t m = 1; m <= 9; ++m)
    EXPECT_EQ(calc.pigeonhole_P(N(1), N(m)).number, N(m));
  EXPECT_TRUE(calc.pigeonhole_P(N(2), N(3)).flags.empty());
}

TEST(Pigeonhole, ZeroArgumentsRejected) {
  BoundCalculator calc;
  EXPECT_THROW(calc.pigeonhole_P(N(0), N(3)), MalformedInput);
  EXPECT_THROW(calc.pigeonhole_P(N(2), N(0)), MalformedInput);
}

TEST(Pigeonhole, MinimalByBruteForce) {
  BoundCalculator calc;
  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t m = 1; m <= 3; ++m) {
      auto p = calc.pigeonhole_P(N(r), N(m)).number.value().convert_to<std::size_t>();
      EXPECT_TRUE(pigeonhole_forced(r, m, p)) << r << "," << m;
      if (p > 1) EXPECT_FALSE(pigeonhole_forced(r, m, p - 1)) << r << "," << m;
    }
  }
}

TEST(Ramsey, Examples) {
  BoundCalculator calc;
  EXPECT_EQ(dec(calc.ramsey_upper_R(2, N(2))), "2");
  EXPECT_EQ(dec(calc.ramsey_upper_R(2, N(3))), "6");
  auto r4 = calc.ramsey_upper_R(2, N(4));
  EXPECT_EQ(dec(r4), "20");
  EXPECT_TRUE(has(r4, BoundFlag::kRamseyUpperBound));
  EXPECT_EQ(dec(calc.ramsey_upper_R(2, N(6))), "252");
  // Three colours: binomial(3 + 6 - 2, 2).
  EXPECT_EQ(dec(calc.ramsey_upper_R(3, N(3))), "21");
}

TEST(Ramsey, UpperBoundsTrueValues) {
  BoundCalculator calc;
  EXPECT_TRUE(ramsey_forced(6, 3));
  EXPECT_FALSE(ramsey_forced(5, 3));
  EXPECT_TRUE(ramsey_forced(2, 2));
  EXPECT_FALSE(ramsey_forced(1, 2));
  const std::uint64_t known[] = {1, 2, 6, 18};
  for (std::uint64_t m = 1; m <= 4; ++m)
    EXPECT_GE(calc.ramsey_upper_R(2, N(m)).number, N(known[m - 1]));
}

TEST(GridC, Examples) {
  BoundCalculator calc;
  EXPECT_EQ(dec(calc.lemma_grid_C(N(1), N(1))), "1");
  EXPECT_EQ(dec(calc.lemma_grid_C(N(1), N(2))), "2");
  EXPECT_EQ(dec(calc.lemma_grid_C(N(2), N(2))), "33");
  EXPECT_EQ(dec(calc.lemma_grid_C(N(2), N(3))), "262145");
}

TEST(MainY, BaseCases) {
  BoundCalculator calc;
  BoundCalculator literal(BoundOptions{true});
  for (std::uint64_t x = 1; x <= 6; ++x) {
    EXPECT_EQ(dec(calc.thm_main2_Y(N(1), N(x))), "1");
    EXPECT_EQ(dec(calc.thm_main2_Y(N(x), N(1))), "1");
    EXPECT_EQ(dec(literal.thm_main2_Y(N(1), N(x))), "1");
    EXPECT_EQ(dec(literal.thm_main2_Y(N(x), N(1))), "1");
  }
  EXPECT_TRUE(calc.thm_main2_Y(N(1), N(5)).flags.empty());
}

TEST(MainY, LiteralModeCollapsesAndIsFlagged) {
  BoundCalculator literal(BoundOptions{true});
  auto y = literal.thm_main2_Y(N(3), N(3));
  EXPECT_EQ(dec(y), "1");
  EXPECT_TRUE(has(y, BoundFlag::kDegenerateBaseCase));
  EXPECT_EQ(dec(literal.thm_main2_Y(N(40), N(30))), "1");
  EXPECT_EQ(dec(literal.thm_main2_Y(BoundNumber::saturated(64), N(9))), "1");
}

TEST(MainY, TriangleShowsLiteralThresholdIsInvalid) {
  // K_3 has a path on 3 >= Y_literal(3,3) vertices, yet neither an induced
  // P_3 nor a K_{2,2}.
  Graph k3 = complete_graph(3);
  BoundCalculator literal(BoundOptions{true});
  BoundCalculator corrected;
  EXPECT_GE(N(longest_path(k3).size()), literal.thm_main2_Y(N(3), N(3)).number);
  EXPECT_LT(longest_induced_path(k3).size(), 3u);
  EXPECT_FALSE(find_biclique(k3, 2, 2));
  EXPECT_LT(N(longest_path(k3).size()), corrected.thm_main2_Y(N(3), N(3)).number);
}

TEST(MainY, CorrectedValues) {
  BoundCalculator calc;
  auto y22 = calc.thm_main2_Y(N(2), N(7));
  EXPECT_EQ(dec(y22), "2");
  EXPECT_TRUE(has(y22, BoundFlag::kDegenerateBaseCase));
  EXPECT_EQ(dec(calc.thm_main2_Y(N(7), N(2))), "2");
  // Y(3,q) doubles at every step: Y(3,q) = 2^(q-1).
  for (std::uint64_t q = 2; q <= 40; ++q)
    EXPECT_EQ(calc.thm_main2_Y(N(3), N(q)).number.value(), BigNat(1) << (q - 1)) << q;
}

TEST(MainY, SaturationIsCertifiedLowerBound) {
  BoundCalculator narrow(BoundOptions{false, 10});
  auto y = narrow.thm_main2_Y(BoundNumber(3, 10), BoundNumber(20, 10));
  EXPECT_FALSE(y.exact());
  EXPECT_TRUE(has(y, BoundFlag::kExceedsPrecision));
  EXPECT_EQ(y.decimal(), ">=2^10");
  // Exact value 2^19 sits above the reported lower bound.
  EXPECT_LE(y.number.value(), BigNat(1) << 19);
  BoundCalculator wide;
  auto exact = wide.thm_main2_Y(N(3), N(20));
  EXPECT_TRUE(exact.exact());
  EXPECT_FALSE(has(exact, BoundFlag::kExceedsPrecision));
}

TEST(MainZ, TrivialCases) {
  BoundCalculator calc;
  for (std::uint64_t a = 1; a <= 5; ++a) {
    for (std::uint64_t b = 1; b <= 5; ++b) {
      EXPECT_EQ(dec(calc.thm_main_Z(N(a), N(1), N(b))), "1");
      EXPECT_EQ(dec(calc.thm_main_Z(N(1), N(a), N(b))), "1");
    }
  }
}

TEST(MainZ, ComposesRamseySplit) {
  BoundCalculator calc;
  auto z = calc.thm_main_Z(N(4), N(3), N(2));
  auto y = calc.thm_main2_Y(N(4), N(12));
  EXPECT_EQ(z.number.exact(), y.number.exact());
  EXPECT_EQ(z.decimal(), y.decimal());
  EXPECT_TRUE(has(z, BoundFlag::kRamseyUpperBound));
  EXPECT_EQ(z.provenance.find("Y(4,12)") != std::string::npos, true) << z.provenance;
  // A case that stays exact: Z(3,2,2) = Y(3, 2 R(2)) = Y(3,4) = 8.
  auto small = calc.thm_main_Z(N(3), N(2), N(2));
  EXPECT_EQ(dec(small), "8");
  EXPECT_TRUE(has(small, BoundFlag::kRamseyUpperBound));
  EXPECT_TRUE(has(small, BoundFlag::kDegenerateBaseCase));
}

TEST(Dense, BExamples) {
  BoundCalculator calc;
  EXPECT_EQ(dec(calc.lemma_dense_b(N(2), N(2))), "20");
  EXPECT_EQ(dec(calc.lemma_dense_b(N(1), N(1))), "6");
  EXPECT_EQ(dec(calc.lemma_dense_b(N(3), N(2))), "34");
}

TEST(Dense, DComposition) {
  BoundCalculator calc;
  auto c = calc.lemma_dense_c(N(1), N(1));
  EXPECT_EQ(dec(c), "252");
  auto d = calc.lemma_dense_D(N(1), N(1), N(1));
  auto z = calc.thm_main_Z(N(252 * 252), N(2), N(1));
  EXPECT_EQ(d.decimal(), z.decimal());
  EXPECT_TRUE(has(d, BoundFlag::kRamseyUpperBound));
  EXPECT_TRUE(has(d, BoundFlag::kExceedsPrecision));
}

TEST(Prefinal, IdentityAndDefaultF) {
  BoundCalculator calc;
  auto x_id = calc.thm_prefinal_X(N(1), N(1), GridMinorFunction::identity());
  auto d = calc.lemma_dense_D(N(1), N(1), N(6));
  EXPECT_EQ(x_id.decimal(), (d.number + N(2)).to_string());
  EXPECT_FALSE(has(x_id, BoundFlag::kHeuristicF));
  auto x = calc.thm_prefinal_X(N(1), N(1));
  EXPECT_TRUE(has(x, BoundFlag::kHeuristicF));
  EXPECT_EQ(x.decimal(), pow(d.number + N(2), N(10)).to_string());
}

TEST(Prefinal, PowerLawOnExactInput) {
  auto f = GridMinorFunction::power_law(10);
  EXPECT_EQ(f.apply(N(3)).to_string(), "59049");
  EXPECT_EQ(GridMinorFunction::power_law(2, 5).apply(N(4)).to_string(), "80");
  EXPECT_TRUE(f.heuristic);
}

TEST(Monotonicity, CorrectedModeOnSmallGrid) {
  BoundCalculator calc;
  auto le = [](const BoundNumber& a, const BoundNumber& b) {
    return !a.exact() && !b.exact() ? true : a <= b;
  };
  for (std::uint64_t s = 1; s <= 5; ++s) {
    for (std::uint64_t q = 1; q <= 5; ++q) {
      auto y = calc.thm_main2_Y(N(s), N(q)).number;
      EXPECT_TRUE(le(y, calc.thm_main2_Y(N(s + 1), N(q)).number)) << s << "," << q;
      EXPECT_TRUE(le(y, calc.thm_main2_Y(N(s), N(q + 1)).number)) << s << "," << q;
    }
  }
  for (std::uint64_t s = 1; s <= 3; ++s) {
    for (std::uint64_t t = 1; t <= 3; ++t) {
      for (std::uint64_t q = 1; q <= 3; ++q) {
        auto z = calc.thm_main_Z(N(s), N(t), N(q)).number;
        EXPECT_TRUE(le(z, calc.thm_main_Z(N(s + 1), N(t), N(q)).number));
        EXPECT_TRUE(le(z, calc.thm_main_Z(N(s), N(t + 1), N(q)).number));
        EXPECT_TRUE(le(z, calc.thm_main_Z(N(s), N(t), N(q + 1)).number));
        auto d = calc.lemma_dense_D(N(s), N(t), N(q)).number;
        EXPECT_TRUE(le(d, calc.lemma_dense_D(N(s + 1), N(t), N(q)).number));
        EXPECT_TRUE(le(d, calc.lemma_dense_D(N(s), N(t + 1), N(q)).number));
        EXPECT_TRUE(le(d, calc.lemma_dense_D(N(s), N(t), N(q + 1)).number));
      }
      auto x = calc.thm_prefinal_X(N(s), N(t)).number;
      EXPECT_TRUE(le(x, calc.thm_prefinal_X(N(s + 1), N(t)).number));
      EXPECT_TRUE(le(x, calc.thm_prefinal_X(N(s), N(t + 1)).number));
    }
  }
}

TEST(Flags, PropagateThroughComposition) {
  BoundCalculator calc;
  EXPECT_TRUE(calc.lemma_dense_b(N(2), N(2)).flags.empty());
  auto c = calc.lemma_dense_c(N(2), N(2));
  EXPECT_TRUE(has(c, BoundFlag::kRamseyUpperBound));
  auto x = calc.thm_prefinal_X(N(2), N(2));
  for (BoundFlag f : {BoundFlag::kRamseyUpperBound, BoundFlag::kHeuristicF,
                      BoundFlag::kDegenerateBaseCase, BoundFlag::kExceedsPrecision})
    EXPECT_TRUE(has(x, f));
  EXPECT_EQ(x.flags.names(), (std::vector<std::string>{"degenerate-base-case", "heuristic-f",
                                                       "ramsey-upper-bound",
                                                       "exceeds-precision"}));
}

TEST(Named, DispatchAndArity) {
  EXPECT_EQ(evaluate_named({"P", {2, 3}}).decimal(), "5");
  EXPECT_EQ(evaluate_named({"C", {2, 2}}).decimal(), "33");
  EXPECT_EQ(evaluate_named({"R", {2, 4}}).decimal(), "20");
  EXPECT_EQ(evaluate_named({"b", {2, 2}}).decimal(), "20");
  auto y = evaluate_named({"Y", {3, 3}, true});
  EXPECT_EQ(y.decimal(), "1");
  EXPECT_TRUE(has(y, BoundFlag::kDegenerateBaseCase));
  EXPECT_THROW(evaluate_named({"Y", {3}}), MalformedInput);
  EXPECT_THROW(evaluate_named({"Q", {1, 2}}), MalformedInput);
  EXPECT_THROW(evaluate_named({"P", {0, 2}}), MalformedInput);
}

}  // namespace
}  // namespace canonwit
