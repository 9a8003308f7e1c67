#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "systolic/lattice.hpp"

using namespace systolic;

TEST(LatticeVec, ParityInvariant) {
  EXPECT_TRUE((LatticeVec{2, 0}.in_lattice()));
  EXPECT_TRUE((LatticeVec{1, 1}.in_lattice()));
  EXPECT_TRUE((LatticeVec{1, 3}.in_lattice()));
  EXPECT_FALSE((LatticeVec{1, 0}.in_lattice()));
  EXPECT_THROW(LatticeVec::checked(1, 2), std::invalid_argument);
  EXPECT_EQ((LatticeVec{1, 3}.squared_length()), 28);
}

TEST(CylinderLattice, PeriodAndSpacing) {
  const CylinderLattice lattice;
  EXPECT_EQ(lattice.period_squared_length(), 28);
  EXPECT_EQ(lattice.circumference(), ExactLength::sqrt_of(28));
  EXPECT_EQ(lattice.half_spacing(), ExactLength::sqrt_of(Rational(3, 28)));
  EXPECT_EQ(lattice.axial_coordinate(Chimney{5}), ExactLength::sqrt_of(Rational(3, 28)) * Rational(10));
}

TEST(CylinderLattice, RejectsEvenRows) {
  EXPECT_THROW(CylinderLattice(2), std::invalid_argument);
  EXPECT_THROW(CylinderLattice(0), std::invalid_argument);
  EXPECT_NO_THROW(CylinderLattice(5));
}

TEST(CylinderLattice, AxialIndexLabelsOrbits) {
  const CylinderLattice lattice;
  const LatticeVec w = lattice.period();
  for (std::int64_t s = -20; s <= 20; ++s) {
    const LatticeVec lift = lattice.canonical_lift(Chimney{s});
    EXPECT_EQ(lift, (LatticeVec{0, -2 * s}));
    EXPECT_EQ(lattice.axial_index(lift), s);
    EXPECT_EQ(lattice.axial_index(lift + 7 * w), s);
    EXPECT_EQ(lattice.axial_index(lift - 3 * w), s);
  }
  // Distinct orbits get distinct labels.
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-40, 40);
  for (int trial = 0; trial < 2000; ++trial) {
    LatticeVec p{coord(rng), coord(rng)};
    LatticeVec q{coord(rng), coord(rng)};
    if (!p.in_lattice()) ++p.b;
    if (!q.in_lattice()) ++q.b;
    const LatticeVec d = q - p;
    const bool same_orbit = d.a * 3 == d.b;
    EXPECT_EQ(lattice.axial_index(p) == lattice.axial_index(q), same_orbit);
  }
}

TEST(CylinderLattice, SquaredDistanceExamples) {
  const CylinderLattice lattice;
  const Chimney s0{10};
  EXPECT_EQ(lattice.squared_distance(s0, s0), 0);
  EXPECT_EQ(lattice.squared_distance(s0, Chimney{11}), 4);
  EXPECT_EQ(lattice.shortest_displacement(s0, Chimney{11}), (LatticeVec{1, 1}));
  EXPECT_EQ(lattice.squared_distance(s0, Chimney{14}), 12);
}

TEST(CylinderLattice, SquaredDistanceMatchesBruteForce) {
  for (int rows : {1, 3, 5, 7}) {
    const CylinderLattice lattice(rows);
    for (std::int64_t s = -6; s <= 6; ++s) {
      for (std::int64_t t = -30; t <= 30; ++t) {
        EXPECT_EQ(lattice.squared_distance(Chimney{s}, Chimney{t}), oracle::squared_distance(s, t, rows))
            << "rows " << rows << " s " << s << " t " << t;
        const LatticeVec d = lattice.shortest_displacement(Chimney{s}, Chimney{t});
        EXPECT_EQ(lattice.axial_index(lattice.canonical_lift(Chimney{s}) + d), t);
      }
    }
  }
}

TEST(CylinderLattice, SixNearestNeighbours) {
  const CylinderLattice lattice;
  for (std::int64_t s : {-4, 0, 1, 17}) {
    const auto neighbours = lattice.neighbors_at_distance_two(Chimney{s});
    ASSERT_EQ(neighbours.size(), 6u);
    const std::vector<Chimney> expected{{s - 3}, {s - 2}, {s - 1}, {s + 1}, {s + 2}, {s + 3}};
    EXPECT_EQ(neighbours, expected);
    for (const Chimney& q : neighbours) EXPECT_EQ(lattice.squared_distance(Chimney{s}, q), 4);
  }
}

TEST(CylinderLattice, NeighboursAgreeWithDisplacementScan) {
  const CylinderLattice lattice;
  const Chimney p{3};
  const LatticeVec origin = lattice.canonical_lift(p);
  std::set<Chimney> scanned;
  for (std::int64_t a = -4; a <= 4; ++a) {
    for (std::int64_t b = -4; b <= 4; ++b) {
      const LatticeVec d{a, b};
      if (!d.in_lattice()) continue;
      for (std::int64_t t = -4; t <= 4; ++t) {
        const LatticeVec shifted = d + t * lattice.period();
        if (shifted.squared_length() == 4) scanned.insert(lattice.chimney_of(origin + d));
      }
    }
  }
  scanned.erase(p);
  const auto neighbours = lattice.neighbors_at_distance_two(p);
  EXPECT_EQ(std::vector<Chimney>(scanned.begin(), scanned.end()), neighbours);
}

TEST(AxialOrder, SortsAndDeduplicates) {
  const std::vector<Chimney> input{{3}, {1}, {2}};
  EXPECT_EQ(axial_order(input), (std::vector<Chimney>{{1}, {2}, {3}}));
  const std::vector<Chimney> single{{4}};
  EXPECT_EQ(axial_order(single), single);
  const std::vector<Chimney> run{{1}, {2}, {3}, {4}};
  EXPECT_EQ(axial_order(run), run);
}

TEST(CylinderLattice, ChartReducesAroundTheCylinder) {
  const CylinderLattice lattice;
  const double circumference = lattice.circumference().to_double();
  for (std::int64_t s = 1; s <= 10; ++s) {
    const LatticeVec lift = lattice.canonical_lift(Chimney{s});
    const PlanePoint p = lattice.chart(lift);
    const PlanePoint q = lattice.chart(lift + 5 * lattice.period());
    EXPECT_NEAR(p.x, lattice.axial_coordinate(Chimney{s}).to_double(), 1e-12);
    EXPECT_NEAR(p.x, q.x, 1e-9);
    EXPECT_NEAR(p.y, q.y, 1e-9);
    EXPECT_GE(p.y, 0.0);
    EXPECT_LT(p.y, circumference);
  }
}
