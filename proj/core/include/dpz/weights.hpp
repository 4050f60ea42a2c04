#pragma once

// Weights of E_r as elements of the marked lattice, read through the plain
// pairing <lambda, alpha_i>. A weight is a class modulo kappa; residues are
// normalised by lift_weight (degree in [0, d)).

#include <cstdint>
#include <optional>
#include <vector>

#include "dpz/dp_geometry.hpp"
#include "dpz/weyl.hpp"

namespace dpz {

struct WeightLift {
  LatticeVector vector;
  std::optional<int> index;  // fundamental index, when this is a lift of one
};

struct WeightEntry {
  LatticeVector weight;  // normalised residue mod kappa
  int multiplicity = 0;
};

struct WeightSystem {
  std::vector<WeightEntry> weights;  // sorted by weight
  int dimension = 0;
  LatticeVector highest;  // normalised residue of the highest weight
};

struct DualPartner {
  int index = 0;      // j
  WeylWord word;      // w with lift_i + w(lift_j) = n kappa
  std::int64_t n = 0;
};

// h - e1, 2h - e1 - e2, e_{i+1} + ... + e_r (3 <= i <= r-1), h.
WeightLift fundamental_weight_lift(const MarkedLattice& m, int i);

// Canonical representative of the class of v modulo kappa.
LatticeVector normalize_residue(const LatticeVector& v, const MarkedLattice& m);

// <omega, alpha> in {-1, 0, 1} for every root. DomainError if not dominant.
bool is_minuscule(const WeightLift& omega, const MarkedLattice& m);

// Nonzero weights are the roots (mod kappa), zero has multiplicity r. The
// highest weight is the class of kappa - highest_root.
WeightSystem adjoint_weight_system(const MarkedLattice& m);

// The W-orbit of a minuscule weight, each with multiplicity one.
WeightSystem minuscule_weight_system(const WeightLift& omega,
                                     const MarkedLattice& m);

DualPartner dual_partner(int i, const MarkedLattice& m);

// Triples of weights of the 27-dimensional representation summing to kappa.
// r = 6 only.
std::vector<LineTriple> cubic_form_support(const MarkedLattice& m);

// b in [0, d) with rho(c) = exp(2 pi i b / d): the degree mod d.
std::int64_t central_character(const WeightLift& lambda,
                               const MarkedLattice& m);

}  // namespace dpz
