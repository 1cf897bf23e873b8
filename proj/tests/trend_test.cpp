#include <gtest/gtest.h>

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "cplxmine/trend.hpp"
#include "support/random_data.hpp"

using namespace cplxmine;
using testdata::make_project;

namespace {

constexpr auto I = Trend::Increasing;
constexpr auto D = Trend::Decreasing;
constexpr auto U = Trend::Indeterminate;

}  // namespace

TEST(Trend, ClassifyByStrictMajority) {
  EXPECT_EQ(classify_trend({0, 3, 1}), D);
  EXPECT_EQ(classify_trend({3, 0, 1}), I);
  EXPECT_EQ(classify_trend({2, 2, 0}), U);
  EXPECT_EQ(classify_trend({2, 1, 1}), U);  // two of four is not a majority
  EXPECT_EQ(classify_trend({0, 0, 0}), U);
  EXPECT_EQ(classify_trend({1, 0, 0}), I);
}

TEST(Trend, TurningPointsForMixedSequence) {
  const std::array<Trend, 5> t{I, D, I, I, D};
  const std::vector<TurningPoint> expected = {{Rating::L, TurningKind::Reverse},
                                              {Rating::N, TurningKind::Obverse},
                                              {Rating::H, TurningKind::Bearing},
                                              {Rating::VH, TurningKind::Reverse}};
  EXPECT_EQ(turning_points(t), expected);
  EXPECT_EQ(describe_turning_points(turning_points(t)), "L=reverse N=obverse H=bearing VH=reverse");
}

TEST(Trend, TurningPointsForDecreasingStart) {
  const std::array<Trend, 5> t{D, D, I, D, I};
  const std::vector<TurningPoint> expected = {{Rating::L, TurningKind::Bearing},
                                              {Rating::N, TurningKind::Obverse},
                                              {Rating::H, TurningKind::Reverse},
                                              {Rating::VH, TurningKind::Obverse}};
  EXPECT_EQ(turning_points(t), expected);
}

TEST(Trend, MonotoneDecreasingHasOnlyBearings) {
  const std::array<Trend, 5> t{D, D, D, D, U};
  for (const auto& p : turning_points(t)) EXPECT_EQ(p.kind, TurningKind::Bearing);
  EXPECT_EQ(turning_points(t).size(), 3u);
  const auto iv = negative_intervals(t);
  ASSERT_EQ(iv.size(), 1u);
  EXPECT_EQ(iv[0], std::pair(Rating::VL, Rating::VH));
}

TEST(Trend, IndeterminateSuppressesNeighbours) {
  const std::array<Trend, 5> t{I, U, D, U, U};
  EXPECT_TRUE(turning_points(t).empty());
  EXPECT_EQ(describe_turning_points(turning_points(t)), "none");
}

TEST(Trend, NegativeIntervalsMergeRuns) {
  const std::array<Trend, 5> t{I, D, D, I, D};
  const auto iv = negative_intervals(t);
  ASSERT_EQ(iv.size(), 2u);
  EXPECT_EQ(iv[0], std::pair(Rating::L, Rating::H));
  EXPECT_EQ(iv[1], std::pair(Rating::VH, Rating::XH));
  EXPECT_EQ(describe_intervals(iv), "[L,H] [VH,XH]");
  const std::array<Trend, 5> none{I, I, U, I, I};
  EXPECT_EQ(describe_intervals(negative_intervals(none)), "none");
}

TEST(Trend, SubsetMembershipOverlaps) {
  const ProjectSet set({make_project("vl", DevMode::Organic, Rating::VL, 1, 1),
                        make_project("l", DevMode::Organic, Rating::L, 1, 1),
                        make_project("n", DevMode::Embedded, Rating::N, 1, 1),
                        make_project("h", DevMode::Organic, Rating::H, 1, 1),
                        make_project("vh", DevMode::Embedded, Rating::VH, 1, 1),
                        make_project("xh", DevMode::Organic, Rating::XH, 1, 1)});
  const auto subsets = scale_pair_subsets(set);
  ASSERT_EQ(subsets.size(), 5u);
  const std::vector<std::string> expected = {"vl,l", "l,n", "n,h", "h,vh", "vh,xh"};
  for (std::size_t i = 0; i < 5; ++i) {
    std::string ids;
    for (const auto& p : subsets[i].second) ids += (ids.empty() ? "" : ",") + p.id;
    EXPECT_EQ(ids, expected[i]);
    EXPECT_EQ(subsets[i].first, kScalePairs[i]);
  }
  const auto embedded = scale_pair_subsets(set, DevMode::Embedded);
  EXPECT_EQ(embedded[0].second.size(), 0u);
  EXPECT_EQ(embedded[2].second.size(), 1u);
  EXPECT_EQ(embedded[3].second.size(), 1u);
}

TEST(Trend, BundledSubsetsCoverEachProjectAtMostTwice) {
  const auto set = load_dataset(CPLXMINE_DATASET);
  std::size_t total = 0;
  for (const auto& [pair, subset] : scale_pair_subsets(set)) total += subset.size();
  std::size_t expected = 0;
  for (const auto& p : set) {
    const auto c = p.rating(Attribute::CPLX);
    expected += (c == Rating::VL || c == Rating::XH) ? 1 : 2;
  }
  EXPECT_EQ(total, expected);
}

TEST(Trend, BundledEmbeddedTopPairHasNoExtraHigh) {
  const auto set = load_dataset(CPLXMINE_DATASET);
  const auto subsets = scale_pair_subsets(set, DevMode::Embedded);
  for (const auto& p : subsets[4].second) EXPECT_EQ(p.rating(Attribute::CPLX), Rating::VH);
}

TEST(Trend, DistributionOfTrivialSubsets) {
  const ProjectSet one({make_project("a", DevMode::Organic, Rating::L, 1, 1)});
  EXPECT_EQ(effort_change_distribution(one, false), (SignCounts{0, 0, 0}));
  const ProjectSet flat({make_project("a", DevMode::Organic, Rating::L, 1, 5),
                         make_project("b", DevMode::Organic, Rating::L, 2, 9)});
  EXPECT_EQ(effort_change_distribution(flat, false), (SignCounts{0, 0, 0}));
  EXPECT_EQ(classify_trend(effort_change_distribution(flat, false)), U);
}

TEST(Trend, DistributionCountsOrientedPairs) {
  // Higher complexity with lower effort on two pairs, higher on one, equal on one.
  const ProjectSet set({make_project("a", DevMode::Organic, Rating::L, 1, 100),
                        make_project("b", DevMode::Organic, Rating::L, 1, 50),
                        make_project("c", DevMode::Organic, Rating::N, 1, 50),
                        make_project("d", DevMode::Embedded, Rating::N, 1, 80)});
  // c-a: -, c-b: 0, d-a: -, d-b: +
  EXPECT_EQ(effort_change_distribution(set, false), (SignCounts{1, 2, 1}));
  // Same-mode only: c-a, c-b.
  EXPECT_EQ(effort_change_distribution(set, true), (SignCounts{0, 1, 1}));
}

TEST(Trend, DistributionMassEqualsPrunedPairs) {
  const auto set = load_dataset(CPLXMINE_DATASET);
  for (const auto& [pair, subset] : scale_pair_subsets(set)) {
    std::size_t lower = 0, upper = 0;
    for (const auto& p : subset) (p.rating(Attribute::CPLX) == pair.lower ? lower : upper)++;
    EXPECT_EQ(effort_change_distribution(subset, false).total(), lower * upper) << pair.label();
  }
}

TEST(Trend, ScalingEffortLeavesTrendsUnchanged) {
  const auto set = load_dataset(CPLXMINE_DATASET);
  std::vector<Project> scaled;
  for (auto p : set) {
    p.actual_effort *= 3.5;
    scaled.push_back(p);
  }
  const auto a = analyze_trends(set);
  const auto b = analyze_trends(ProjectSet(scaled));
  EXPECT_EQ(a.trends(), b.trends());
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(a.pairs[i].counts, b.pairs[i].counts);
}

TEST(Trend, AnalysisIsConsistent) {
  const auto set = load_dataset(CPLXMINE_DATASET);
  for (auto mode : {std::optional<DevMode>{}, std::optional{DevMode::Organic},
                    std::optional{DevMode::Embedded}}) {
    const auto a = analyze_trends(set, mode);
    ASSERT_EQ(a.pairs.size(), 5u);
    for (const auto& p : a.pairs) EXPECT_EQ(p.trend, classify_trend(p.counts));
    const auto t = a.trends();
    EXPECT_EQ(a.points, turning_points(t));
    EXPECT_EQ(a.decreasing_intervals, negative_intervals(t));
  }
}

TEST(Trend, CsvExport) {
  const ProjectSet set({make_project("a", DevMode::Organic, Rating::L, 1, 100),
                        make_project("b", DevMode::Organic, Rating::N, 1, 50)});
  std::ostringstream out;
  write_trend_csv(out, analyze_trends(set));
  EXPECT_EQ(out.str(),
            "pair,plus,minus,zero,trend\n"
            "VL-L,0,0,0,indeterminate\n"
            "L-N,0,1,0,decreasing\n"
            "N-H,0,0,0,indeterminate\n"
            "H-VH,0,0,0,indeterminate\n"
            "VH-XH,0,0,0,indeterminate\n"
            "# turning_points: none\n"
            "# decreasing_intervals: [L,N]\n");
}
