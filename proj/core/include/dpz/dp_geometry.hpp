#pragma once

// Numerical curve classes on a marked del Pezzo lattice: lines (-1, 1),
// conics (0, 2), twisted cubics (1, 3), rational quartics (2, 4), given as
// (self-intersection, degree). Sets are returned lexicographically sorted.

#include <array>
#include <cstdint>
#include <vector>

#include "dpz/lattice.hpp"
#include "dpz/root_system.hpp"

namespace dpz {

struct CurveClass {
  LatticeVector vector;
  std::int64_t self_int = 0;
  std::int64_t degree = 0;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

struct BlowdownBasis {
  LatticeVector gamma;
  std::vector<LatticeVector> epsilons;
};

using LineSet = std::vector<LatticeVector>;
using LineTriple = std::array<LatticeVector, 3>;

struct DoubleSix {
  LineSet first;   // the lexicographically smaller six
  LineSet second;  // second[i] meets every first[j] except j == i
};

// All classes with the given square and degree. Unless allow_any is set,
// requires self_int - degree == -2 (smooth rational classes by adjunction).
std::vector<CurveClass> enumerate_classes(const MarkedLattice& m,
                                          std::int64_t self_int,
                                          std::int64_t degree,
                                          bool allow_any = false);

std::vector<CurveClass> lines(const MarkedLattice& m);

// Unordered triples of lines summing to kappa. r = 6 only.
std::vector<LineTriple> coplanar_triples(const MarkedLattice& m);

// k-subsets of pairwise disjoint lines, each sorted, in lexicographic order.
std::vector<LineSet> disjoint_line_sets(const MarkedLattice& m, int k);

// r = 6 only.
std::vector<DoubleSix> double_sixes(const MarkedLattice& m);

// The partner six of a double six, ordered to match six.
LineSet double_six_partner(const LineSet& six, const MarkedLattice& m);

// gamma = (kappa + sum S) / 3 with epsilons = S.
BlowdownBasis blowdown_basis(const LineSet& lines, const MarkedLattice& m);

// 2 gamma - sum eps_i for the blowdown defined by a six. r = 6 only.
Root root_from_six(const LineSet& six, const MarkedLattice& m);

}  // namespace dpz
