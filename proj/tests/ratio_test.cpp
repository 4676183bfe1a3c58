#include <gtest/gtest.h>

#include "crossratio/ratio.hpp"

namespace crossratio {
namespace {

TEST(Rational, LowestTerms) {
  EXPECT_EQ(Rational::of(77, 2), (Rational{77, 2}));
  EXPECT_EQ(Rational::of(6, 3), (Rational{2, 1}));
  EXPECT_EQ(Rational::of(0, 5), (Rational{0, 1}));
  EXPECT_EQ(Rational::of(77, 2).str(), "77/2");
  EXPECT_EQ(Rational::of(4, 2).str(), "2");
  EXPECT_THROW((void)Rational::of(1, 0), GraphError);
}

TEST(Ratio, OneplanarIsHalfTheOrderMinusOne) {
  for (std::size_t ell = 7; ell <= 9; ++ell) {
    const RatioReport r = ratio_report("oneplanar", ell);
    EXPECT_EQ(r.vertices, 11 * ell + 2);
    EXPECT_EQ(r.witness, r.vertices - 2);
    EXPECT_EQ(r.cr, 2u);
    EXPECT_EQ(r.certificate.claim, Claim::kCrEquals);
    EXPECT_EQ(r.certificate.log.exhausted_below, 2u);
    // n/2 - 1 = (n - 2)/2
    EXPECT_EQ(r.ratio, Rational::of(r.vertices - 2, 2));
  }
  EXPECT_EQ(ratio_report("oneplanar", 7).ratio.str(), "77/2");
}

TEST(Ratio, QuasiSettlesTheCrossingNumber) {
  for (std::size_t ell = 2; ell <= 4; ++ell) {
    const RatioReport r = ratio_report("quasi", ell);
    EXPECT_EQ(r.witness, 2 * ell + 1);
    EXPECT_EQ(r.cr, 3u);
    EXPECT_EQ(r.ratio, Rational::of(2 * ell + 1, 3));
  }
}

TEST(Ratio, Fan) {
  // two routes of a single extended edge already cost only two crossings
  const RatioReport two = ratio_report("fan", 2);
  EXPECT_EQ(two.witness, 2u);
  EXPECT_EQ(two.cr, 2u);
  EXPECT_EQ(two.ratio, Rational::of(1, 1));
  for (std::size_t ell = 3; ell <= 5; ++ell) {
    const RatioReport r = ratio_report("fan", ell);
    EXPECT_EQ(r.cr, 3u);
    EXPECT_EQ(r.ratio, Rational::of(ell, 3));
  }
}

TEST(Ratio, Refusals) {
  EXPECT_THROW((void)ratio_report("kquasi", 3), GraphError);
  EXPECT_THROW((void)ratio_report("planar", 3), GraphError);
  SearchOptions tight;
  tight.budget = 2;
  EXPECT_THROW((void)ratio_report("quasi", 2, 1, tight), BudgetExceeded);
}

TEST(FamilyCertificates, OneplanarNeedsTwoCrossings) {
  const OneplanarFamily f = gen_oneplanar(7);
  SearchOptions o;
  o.mode = SearchMode::kExhaustive;
  const Certificate c = certify_lower(f.graph, 2, {}, o);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.log.planarity_tests, exhaustive_estimate(f.graph, 1));
  EXPECT_TRUE(certify_lower(f.graph, 2).holds);
  EXPECT_FALSE(certify_lower(f.graph, 3).holds);
}

TEST(FamilyCertificates, ParallelLemmaOnQuasiCore) {
  for (std::size_t ell : {2u, 3u}) {
    const QuasiFamily f = gen_quasi(ell);
    // cycle edges (u0, u1) and (u3, u4)
    const Certificate c = verify_parallel_lemma(f.graph, f.wheel_edges[0], f.wheel_edges[3], ell);
    EXPECT_EQ(c.claim, Claim::kParallelLemma);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.log.exhausted_below, ell);
    EXPECT_TRUE(verify_parallel_lemma(f.graph, f.wheel_edges[0], f.wheel_edges[3], 1).holds);
  }
  // diagonals share only the apex as a common neighbour: one two-path each
  const QuasiFamily f = gen_quasi(3);
  EXPECT_THROW((void)verify_parallel_lemma(f.graph, f.special_edges[0], f.special_edges[1], 3), GraphError);
}

TEST(FamilyCertificates, FanLowerBounds) {
  EXPECT_FALSE(certify_lower(gen_fan(2).graph, 3).holds);
  EXPECT_TRUE(certify_lower(gen_fan(3).graph, 3).holds);
}

}  // namespace
}  // namespace crossratio
