#include "dpz/degeneration.hpp"

#include <map>
#include <random>
#include <set>

#include "dpz/dp_geometry.hpp"
#include "dpz/errors.hpp"
#include "dpz/weyl.hpp"
#include "gtest/gtest.h"

namespace dpz {
namespace {

LatticeVector V(std::string_view text, int r) { return parse_vector(text, r); }

std::vector<LatticeVector> line_vectors(const MarkedLattice& m) {
  std::vector<LatticeVector> out;
  for (const auto& l : lines(m)) out.push_back(l.vector);
  return out;
}

std::map<std::size_t, int> size_histogram(const std::vector<SubOrbit>& orbits) {
  std::map<std::size_t, int> out;
  for (const auto& o : orbits) ++out[o.size];
  return out;
}

void expect_partition(const std::vector<SubOrbit>& orbits,
                      const std::vector<LatticeVector>& weights) {
  std::set<LatticeVector> seen;
  std::size_t total = 0;
  for (const auto& o : orbits) {
    EXPECT_EQ(o.size, o.members.size());
    EXPECT_EQ(o.representative, o.members.front());
    EXPECT_TRUE(std::is_sorted(o.members.begin(), o.members.end()));
    for (const auto& v : o.members) EXPECT_TRUE(seen.insert(v).second);
    total += o.size;
  }
  EXPECT_EQ(total, seen.size());
  for (const auto& w : weights) EXPECT_TRUE(seen.contains(w));
  for (std::size_t i = 1; i < orbits.size(); ++i)
    EXPECT_LT(orbits[i - 1].representative, orbits[i].representative);
}

TEST(MakeConfigurationTest, Examples) {
  const auto m = make_marked_lattice(6);
  EXPECT_EQ(to_string(make_configuration({V("e1-e2", 6)}, m).type), "A1");
  EXPECT_EQ(to_string(make_configuration({V("e1-e2", 6), V("e2-e3", 6)}, m).type),
            "A2");
  EXPECT_THROW(make_configuration({V("e1-e2", 6), V("e1-e2", 6)}, m),
               ConfigurationError);
  EXPECT_THROW(make_configuration({V("e1", 6)}, m), ConfigurationError);
  EXPECT_THROW(make_configuration({V("e1-e2", 6), V("e2-e1", 6)}, m),
               ConfigurationError);
  EXPECT_EQ(make_configuration({}, m).type.components().size(), 0u);
}

TEST(OrbitDecompositionTest, SingleNode) {
  const auto m = make_marked_lattice(6);
  const auto c = V("e1-e2", 6);
  const auto config = make_configuration({c}, m);
  const auto weights = line_vectors(m);
  const auto orbits = orbit_decomposition(config, weights, m);
  expect_partition(orbits, weights);
  EXPECT_EQ(size_histogram(orbits), (std::map<std::size_t, int>{{1, 15}, {2, 6}}));
  for (const auto& o : orbits) {
    if (o.size != 2) {
      EXPECT_EQ(orbit_label(o, config), "fixed");
      continue;
    }
    const auto diff = o.members[1] - o.members[0];
    EXPECT_TRUE(diff == c || diff == -c);
    EXPECT_EQ(orbit_label(o, config), "extension pair");
  }
}

TEST(OrbitDecompositionTest, EmptyAndA2) {
  const auto m = make_marked_lattice(6);
  const auto weights = line_vectors(m);
  const auto none = orbit_decomposition(make_configuration({}, m), weights, m);
  EXPECT_EQ(size_histogram(none), (std::map<std::size_t, int>{{1, 27}}));

  const auto a2 = make_configuration({V("e1-e2", 6), V("e2-e3", 6)}, m);
  const auto orbits = orbit_decomposition(a2, weights, m);
  expect_partition(orbits, weights);
  EXPECT_EQ(size_histogram(orbits), (std::map<std::size_t, int>{{1, 9}, {3, 6}}));
  for (const auto& o : orbits)
    if (o.size == 3) EXPECT_EQ(orbit_label(o, a2), "orbit");
}

TEST(OrbitDecompositionTest, ComputesClosure) {
  const auto m = make_marked_lattice(6);
  const auto config = make_configuration({V("e1-e2", 6)}, m);
  const auto orbits =
      orbit_decomposition(config, {LatticeVector::e(6, 1)}, m);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].members,
            (std::vector<LatticeVector>{LatticeVector::e(6, 2),
                                        LatticeVector::e(6, 1)}));
}

TEST(OrbitDecompositionTest, SingletonsAreOrthogonalLines) {
  std::mt19937_64 rng(43);
  for (int r = 4; r <= 8; ++r) {
    const auto m = make_marked_lattice(r);
    const auto weights = line_vectors(m);
    // Sub-diagrams of the simple system give valid ADE configurations.
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<LatticeVector> curves;
      for (const auto& a : m.simple_coroots())
        if (rng() % 2) curves.push_back(a);
      const auto config = make_configuration(curves, m);
      const auto orbits = orbit_decomposition(config, weights, m);
      expect_partition(orbits, weights);
      for (const auto& o : orbits) {
        bool orthogonal = true;
        for (const auto& c : config.curves)
          if (inner(o.members.front(), c.vector()) != 0) orthogonal = false;
        EXPECT_EQ(o.size == 1, orthogonal);
      }
    }
  }
}

TEST(OrbitDecompositionTest, ConjugationInvariant) {
  std::mt19937_64 rng(47);
  for (int r = 5; r <= 7; ++r) {
    const auto m = make_marked_lattice(r);
    const auto weights = line_vectors(m);
    const std::vector<LatticeVector> curves{V("e1-e2", r), V("e2-e3", r),
                                            V("h-e1-e2-e3", r)};
    const auto base = size_histogram(
        orbit_decomposition(make_configuration(curves, m), weights, m));
    for (int trial = 0; trial < 5; ++trial) {
      WeylWord w;
      for (int k = 0; k < 15; ++k) w.push_back(1 + static_cast<int>(rng() % r));
      std::vector<LatticeVector> moved;
      for (const auto& c : curves) moved.push_back(apply_word(w, c, m));
      EXPECT_EQ(size_histogram(orbit_decomposition(
                    make_configuration(moved, m), weights, m)),
                base);
    }
  }
}

TEST(OrbitDecompositionTest, FullSimpleSystemIsTransitive) {
  for (int r = 3; r <= 8; ++r) {
    const auto m = make_marked_lattice(r);
    const auto weights = line_vectors(m);
    const auto config = make_configuration(m.simple_coroots(), m);
    const auto orbits = orbit_decomposition(config, weights, m);
    ASSERT_EQ(orbits.size(), 1u) << "r=" << r;
    EXPECT_EQ(orbits[0].size, weights.size());
  }
}

TEST(IncidentLinesTest, Examples) {
  const auto m = make_marked_lattice(6);
  const auto a1 = make_configuration({V("e1-e2", 6)}, m);
  const auto inc = incident_lines(a1, m);
  EXPECT_EQ(inc.size(), 6u);
  for (const auto& l : inc) EXPECT_EQ(inner(l.vector, V("e1-e2", 6)), 1);

  EXPECT_TRUE(incident_lines(make_configuration({}, m), m).empty());

  // A2: of the 18 lines in size-3 orbits, 12 have a positive pairing with
  // some curve; the other 6 pair to -1 with one curve and 0 with the other.
  const auto a2 = make_configuration({V("e1-e2", 6), V("e2-e3", 6)}, m);
  const auto inc2 = incident_lines(a2, m);
  EXPECT_EQ(inc2.size(), 12u);
  std::set<LatticeVector> moving;
  for (const auto& o : orbit_decomposition(a2, line_vectors(m), m))
    if (o.size > 1) moving.insert(o.members.begin(), o.members.end());
  EXPECT_EQ(moving.size(), 18u);
  for (const auto& l : inc2) EXPECT_TRUE(moving.contains(l.vector));
}

}  // namespace
}  // namespace dpz
