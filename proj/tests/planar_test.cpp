#include <gtest/gtest.h>

#include "systolic/planar.hpp"

using namespace systolic;
using namespace systolic::planar;

TEST(ConvexHull, DropsInteriorAndCollinearPoints) {
  const std::vector<LatticeVec> points{{0, 0}, {2, 0}, {4, 0}, {1, 1}, {3, 1}, {2, 2}, {2, 0}};
  const auto hull = convex_hull(points);
  EXPECT_EQ(hull, (std::vector<LatticeVec>{{0, 0}, {4, 0}, {2, 2}}));
  EXPECT_EQ(hull_perimeter(hull), ExactLength(12));
}

TEST(ConvexHull, DegenerateInputs) {
  EXPECT_EQ(convex_hull(std::vector<LatticeVec>{{1, 1}}).size(), 1u);
  const auto pair = convex_hull(std::vector<LatticeVec>{{0, 0}, {2, 0}});
  EXPECT_EQ(pair.size(), 2u);
  EXPECT_EQ(hull_perimeter(pair), ExactLength(4));
  EXPECT_TRUE(hull_perimeter(std::vector<LatticeVec>{{3, 1}}).is_zero());
}

TEST(ConvexHull, MixedEdgeLengths) {
  const auto hull = convex_hull(std::vector<LatticeVec>{{0, 0}, {2, 0}, {3, 1}, {1, 1}});
  // Two edges of length 2 and two of length 2: a rhombus.
  EXPECT_EQ(hull_perimeter(hull), ExactLength(8));
  const auto wide = convex_hull(std::vector<LatticeVec>{{0, 0}, {4, 0}, {1, 3}});
  EXPECT_EQ(hull_perimeter(wide), ExactLength(4) + ExactLength::sqrt_of(28) + ExactLength::sqrt_of(36));
}

TEST(Distances, PointToSegmentAndHull) {
  EXPECT_EQ(squared_distance_to_segment({1, 1}, {0, 0}, {2, 0}), Rational(3));
  EXPECT_EQ(squared_distance_to_segment({4, 0}, {0, 0}, {2, 0}), Rational(4));
  const std::vector<LatticeVec> triangle{{0, 0}, {4, 0}, {2, 2}};
  EXPECT_EQ(squared_distance_to_hull({2, 0}, triangle), Rational(0));
  EXPECT_EQ(squared_distance_to_hull({2, 2}, triangle), Rational(0));
  EXPECT_GT(squared_distance_to_hull({6, 0}, triangle), Rational(0));
}

TEST(Distances, BetweenHulls) {
  const std::vector<LatticeVec> left{{0, 0}, {2, 0}};
  const std::vector<LatticeVec> right{{6, 0}, {7, 1}};
  EXPECT_EQ(squared_distance_between_hulls(left, right), Rational(16));
  const std::vector<LatticeVec> crossing{{1, -1}, {1, 1}};
  EXPECT_EQ(squared_distance_between_hulls(left, crossing), Rational(0));
}

TEST(Segments, Classification) {
  EXPECT_EQ(classify_segments({0, 0}, {2, 0}, {1, -1}, {1, 1}), SegmentRelation::crossing);
  EXPECT_EQ(classify_segments({0, 0}, {2, 0}, {2, 0}, {3, 1}), SegmentRelation::shared_endpoint);
  EXPECT_EQ(classify_segments({0, 0}, {2, 0}, {0, 2}, {2, 2}), SegmentRelation::disjoint);
  // Touching at an interior point counts as crossing.
  EXPECT_EQ(classify_segments({0, 0}, {4, 0}, {2, 0}, {3, 1}), SegmentRelation::crossing);
}
