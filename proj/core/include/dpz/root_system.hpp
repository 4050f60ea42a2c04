#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpz/lattice.hpp"

namespace dpz {

// A lattice vector with <v,v> = -2 and <v,kappa> = 0.
class Root {
 public:
  // Throws DomainError when v is not a root of m.
  Root(LatticeVector v, const MarkedLattice& m);

  const LatticeVector& vector() const { return v_; }
  Root operator-() const { return Root(-v_); }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) {
    return a.v_ <=> b.v_;
  }

 private:
  explicit Root(LatticeVector v) : v_(std::move(v)) {}
  LatticeVector v_;
};

bool is_root(const LatticeVector& v, const MarkedLattice& m);

struct DynkinComponent {
  char letter = 'A';  // 'A', 'D' or 'E'
  int rank = 0;

  friend bool operator==(const DynkinComponent&,
                         const DynkinComponent&) = default;
  friend auto operator<=>(const DynkinComponent&,
                          const DynkinComponent&) = default;
};

// Components sorted by (letter, rank); prints as "A1+A2", "E6".
class DynkinType {
 public:
  DynkinType() = default;
  explicit DynkinType(std::vector<DynkinComponent> components);

  const std::vector<DynkinComponent>& components() const {
    return components_;
  }
  int rank() const;
  bool empty() const { return components_.empty(); }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;

 private:
  std::vector<DynkinComponent> components_;
};

// "A1+A2"; the empty type prints as "0".
std::string to_string(const DynkinType& t);

struct RootSystemData {
  std::vector<Root> all_roots;
  std::vector<Root> positive_roots;
  // Absent for r = 3, where the root system is not simple.
  std::optional<Root> highest_root;
  // -<alpha_i, alpha_j>, so the diagonal is 2.
  IntegerMatrix cartan;
  DynkinType dynkin_type;
};

// All roots, lexicographically sorted. Exhaustive search over the box cut out
// by Cauchy-Schwarz on 3a = -sum b_i, a^2 - sum b_i^2 = -2.
std::vector<Root> enumerate_roots(const MarkedLattice& m);

// Roots whose simple-coroot expansion is non-negative.
std::vector<Root> positive_roots(const MarkedLattice& m);

// Exact coefficients c with v = sum c_i alpha_i. Throws DomainError when v is
// not orthogonal to kappa.
std::vector<Rational> expand_in_simple(const LatticeVector& v,
                                       const MarkedLattice& m);

// Sum of simple-coroot coefficients of a root.
std::int64_t height(const Root& a, const MarkedLattice& m);

// The positive root of maximal height. UnsupportedError for r = 3.
Root highest_root(const MarkedLattice& m);

IntegerMatrix cartan_matrix(const MarkedLattice& m);

// Classifies the graph on the given roots (edge iff pairing 1). Throws
// ConfigurationError on dependent roots, pairings outside {0, 1} or a
// diagram that is not simply laced of finite type.
DynkinType dynkin_type(std::span<const LatticeVector> roots);

RootSystemData root_system_data(const MarkedLattice& m);

}  // namespace dpz
