#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "systolic/geodesic_engine.hpp"
#include "systolic/planar.hpp"

using namespace systolic;

namespace {

const ExactLength kSqrt28 = ExactLength::sqrt_of(28);

SphereModel standard(int n) { return build(SurfaceParams::standard(n)); }

BeltClass pair_belt(const SphereModel& model, int i, int j) {
  const CylinderLattice& lattice = model.lattice();
  const LatticeVec origin = lattice.canonical_lift(Chimney{i});
  return BeltClass{{origin, origin + lattice.shortest_displacement(Chimney{i}, Chimney{j})}};
}

}  // namespace

TEST(BeltLength, Examples) {
  const ExactLength r = matched_radius(CylinderLattice(3));
  const std::vector<LatticeVec> pair{{0, 0}, {2, 0}};
  EXPECT_EQ(belt_length(pair, r), kSqrt28);
  const std::vector<LatticeVec> single{{0, 0}};
  EXPECT_EQ(belt_length(single, r), ExactLength::pi(2) * r);
  const std::vector<LatticeVec> triple{{0, 0}, {2, 0}, {1, 1}};
  EXPECT_EQ(belt_length(triple, r), ExactLength(2) + kSqrt28);
  EXPECT_THROW(belt_length(std::vector<LatticeVec>{}, r), std::invalid_argument);
}

TEST(BeltLength, PairIsTwiceDistancePlusCircle) {
  const ExactLength r(Rational(1, 5));
  for (const LatticeVec& d : {LatticeVec{2, 0}, LatticeVec{1, 3}, LatticeVec{5, 1}, LatticeVec{0, 4}}) {
    const std::vector<LatticeVec> pair{{3, 1}, LatticeVec{3, 1} + d};
    EXPECT_EQ(belt_length(pair, r),
              ExactLength::sqrt_of(d.squared_length()) * Rational(2) + ExactLength::pi(2) * r);
  }
}

TEST(BeltLength, TranslationInvariantAndMonotone) {
  const ExactLength r(Rational(1, 5));
  const std::vector<LatticeVec> base{{0, 0}, {2, 0}, {1, 1}};
  std::vector<LatticeVec> moved;
  for (const LatticeVec& p : base) moved.push_back(p + LatticeVec{7, 3});
  EXPECT_EQ(belt_length(base, r), belt_length(moved, r));
  std::vector<LatticeVec> bigger = base;
  bigger.push_back({3, 1});
  EXPECT_LE(belt_length(base, r), belt_length(bigger, r));
}

TEST(BeltLength, AgreesWithSampledHull) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(-3, 3);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> radius_num(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LatticeVec> points;
    for (int i = count(rng); i > 0; --i) {
      LatticeVec p{coord(rng), coord(rng)};
      if (!p.in_lattice()) ++p.a;
      points.push_back(p);
    }
    const Rational r(radius_num(rng), 10);
    const double exact = belt_length(points, ExactLength(r)).to_double();
    const double sampled = oracle::sampled_belt_length(points, r.get_d(), 4096);
    EXPECT_NEAR(exact, sampled, 1e-5) << "trial " << trial;
  }
}

TEST(MeridianShortest, DefaultModelIsStraightEverywhere) {
  const SphereModel model = standard(7);
  for (int gap = 0; gap <= 7; ++gap) {
    const MeridianLength length = meridian_shortest(model, gap);
    EXPECT_TRUE(length.straight);
    ASSERT_TRUE(length.exact.has_value());
    EXPECT_EQ(*length.exact, kSqrt28);
  }
}

TEST(Classify, Examples) {
  const SphereModel model = standard(6);
  EXPECT_EQ(classify(model, MeridianClass{1}).kind, ClassKind::inessential);
  EXPECT_EQ(classify(model, MeridianClass{5}).kind, ClassKind::inessential);
  EXPECT_EQ(classify(model, MeridianClass{0}).kind, ClassKind::contractible);
  EXPECT_EQ(classify(model, MeridianClass{6}).kind, ClassKind::contractible);

  const GeodesicClass belt = classify(model, pair_belt(model, 1, 2));
  EXPECT_EQ(belt.kind, ClassKind::belt);
  EXPECT_EQ(belt.partition, (std::vector<int>{1, 2}));
  EXPECT_EQ(belt.shortest_length, kSqrt28);

  const GeodesicClass meridian = classify(model, MeridianClass{2});
  EXPECT_EQ(meridian.kind, ClassKind::meridian);
  EXPECT_EQ(meridian.partition, (std::vector<int>{1, 2}));
  EXPECT_EQ(meridian.shortest_length, kSqrt28);

  const LatticeVec single = model.lattice().canonical_lift(Chimney{3});
  EXPECT_EQ(classify(model, BeltClass{{single}}).kind, ClassKind::inessential);
}

TEST(Classify, RejectsMalformedClasses) {
  const SphereModel model = standard(6);
  EXPECT_THROW(classify(model, MeridianClass{7}), std::invalid_argument);
  EXPECT_THROW(classify(model, MeridianClass{-1}), std::invalid_argument);
  EXPECT_THROW(classify(model, BeltClass{{model.lattice().canonical_lift(Chimney{9})}}),
               std::invalid_argument);
  EXPECT_THROW(classify(model, BeltClass{}), std::invalid_argument);
}

TEST(CanonicalPartition, SmallerSideThenLexicographic) {
  EXPECT_EQ(canonical_partition({4, 5, 6}, 6), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(canonical_partition({5, 6}, 6), (std::vector<int>{5, 6}));
  EXPECT_EQ(canonical_partition({1, 2, 3, 4}, 6), (std::vector<int>{5, 6}));
}

TEST(Homotopic, Examples) {
  const SphereModel model = standard(8);
  const GeodesicClass belt12 = classify(model, pair_belt(model, 1, 2));
  const GeodesicClass belt23 = classify(model, pair_belt(model, 2, 3));
  const GeodesicClass belt78 = classify(model, pair_belt(model, 7, 8));
  const GeodesicClass gap2 = classify(model, MeridianClass{2});
  const GeodesicClass gap3 = classify(model, MeridianClass{3});
  const GeodesicClass gap6 = classify(model, MeridianClass{6});
  EXPECT_TRUE(homotopic(model, belt12, gap2));
  EXPECT_TRUE(homotopic(model, gap2, belt12));
  EXPECT_TRUE(homotopic(model, belt78, gap6));
  EXPECT_TRUE(homotopic(model, belt12, belt12));
  EXPECT_FALSE(homotopic(model, belt12, belt23));
  EXPECT_FALSE(homotopic(model, gap3, belt12));
  EXPECT_FALSE(homotopic(model, gap2, gap3));
}

TEST(Homotopic, TranslatedLiftsGiveTheSameClass) {
  const SphereModel model = standard(8);
  const CylinderLattice& lattice = model.lattice();
  const LatticeVec origin = lattice.canonical_lift(Chimney{1});
  const GeodesicClass shifted = classify(
      model, BeltClass{{origin + lattice.period(), origin + lattice.period() + LatticeVec{1, 1}}});
  EXPECT_TRUE(homotopic(model, shifted, classify(model, pair_belt(model, 1, 2))));
}

TEST(Enumerate, CutoffAtMeridianLength) {
  const SphereModel model = standard(5);
  const ShortClassEnumeration found = enumerate_short_classes(model, kSqrt28);
  EXPECT_TRUE(found.winding_complete);
  EXPECT_FALSE(found.below_meridian_length);
  EXPECT_EQ(found.adjacent_pairs, 9u);
  int belts = 0;
  int meridians = 0;
  for (const GeodesicClass& g : found.classes) {
    ASSERT_TRUE(g.shortest_length.has_value());
    EXPECT_EQ(*g.shortest_length, kSqrt28);
    if (g.kind == ClassKind::belt) {
      ++belts;
      const auto& cert = std::get<BeltCertificate>(g.certificate);
      ASSERT_EQ(cert.enclosed.size(), 2u);
      EXPECT_EQ((cert.enclosed[1] - cert.enclosed[0]).squared_length(), 4);
    } else {
      EXPECT_EQ(g.kind, ClassKind::meridian);
      ++meridians;
    }
  }
  EXPECT_EQ(belts, 9);
  EXPECT_EQ(meridians, 2);
}

TEST(Enumerate, BelowMeridianLengthIsEmpty) {
  const SphereModel model = standard(6);
  const ShortClassEnumeration found = enumerate_short_classes(model, ExactLength(5));
  EXPECT_TRUE(found.below_meridian_length);
  EXPECT_TRUE(found.classes.empty());
}

TEST(Enumerate, LargerCutoffAddsTriangles) {
  const SphereModel model = standard(7);
  const ExactLength cutoff = ExactLength(2) + kSqrt28;
  const ShortClassEnumeration found = enumerate_short_classes(model, cutoff);
  EXPECT_FALSE(found.winding_complete);
  int triangles = 0;
  for (const GeodesicClass& g : found.classes) {
    ASSERT_TRUE(g.shortest_length.has_value());
    EXPECT_LE(*g.shortest_length, cutoff);
    if (g.kind != ClassKind::belt) continue;
    const auto& cert = std::get<BeltCertificate>(g.certificate);
    if (cert.enclosed.size() == 3) {
      ++triangles;
      EXPECT_EQ(*g.shortest_length, cutoff);
    } else {
      EXPECT_EQ(cert.enclosed.size(), 2u);
    }
  }
  EXPECT_GT(triangles, 0);
}

TEST(Enumerate, NoOtherBeltFitsUnderTheCutoff) {
  // Exhaustive scan of small lattice subsets: anything with a numeric belt
  // length at or below the meridian is an adjacent pair.
  const SphereModel model = standard(9);
  const CylinderLattice& lattice = model.lattice();
  const double r = model.radius().to_double();
  const double cutoff = std::sqrt(28.0);
  std::vector<LatticeVec> window;
  for (std::int64_t a = -4; a <= 4; ++a) {
    for (std::int64_t b = -20; b <= 2; ++b) {
      const LatticeVec p{a, b};
      if (p.in_lattice() && model.in_band(lattice.chimney_of(p))) window.push_back(p);
    }
  }
  const LatticeVec anchor = lattice.canonical_lift(Chimney{5});
  std::vector<LatticeVec> near;
  for (const LatticeVec& p : window) {
    if (!(p == anchor) && (p - anchor).squared_length() <= 36) near.push_back(p);
  }
  ASSERT_LE(near.size(), 20u);
  for (std::uint32_t mask = 1; mask < (1u << near.size()); ++mask) {
    if (std::popcount(mask) > 3) continue;
    std::vector<LatticeVec> set{anchor};
    for (std::size_t i = 0; i < near.size(); ++i) {
      if ((mask >> i) & 1u) set.push_back(near[i]);
    }
    std::vector<oracle::Point> pts;
    for (const LatticeVec& p : set) pts.push_back({double(p.a), double(p.b) * std::sqrt(3.0)});
    const double length = (set.size() == 2 ? 2 * std::hypot(pts[1].x - pts[0].x, pts[1].y - pts[0].y)
                                           : oracle::hull_perimeter(pts)) +
                          2 * std::acos(-1.0) * r;
    if (length <= cutoff + 1e-9) {
      ASSERT_EQ(set.size(), 2u);
      EXPECT_EQ((set[1] - set[0]).squared_length(), 4);
    }
  }
}

TEST(Enumerate, JsonCertificates) {
  const SphereModel model = standard(6);
  const auto document = to_json(classify(model, pair_belt(model, 2, 3)));
  EXPECT_EQ(document.at("kind"), "belt");
  EXPECT_EQ(document.at("length"), "2*sqrt(7)");
  EXPECT_EQ(document.at("certificate").at("type"), "belt");
  const auto meridian = to_json(classify(model, MeridianClass{3}));
  EXPECT_EQ(meridian.at("certificate").at("gap"), 3);
  EXPECT_EQ(meridian.at("certificate").at("position"), "7/2");
  EXPECT_EQ(meridian.at("certificate").at("straight"), true);
}
