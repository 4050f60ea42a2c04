#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dpz/lattice.hpp"
#include "dpz/root_system.hpp"

namespace dpz {

inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;

// Simple reflections s_{i_1}, s_{i_2}, ... applied left to right. Indices are
// 1-based; the empty word is the identity.
class WeylWord {
 public:
  WeylWord() = default;
  explicit WeylWord(std::vector<int> indices) : indices_(std::move(indices)) {}

  const std::vector<int>& indices() const { return indices_; }
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  void push_back(int i) { indices_.push_back(i); }

  // The word of the inverse element.
  WeylWord inverse() const;

  friend bool operator==(const WeylWord&, const WeylWord&) = default;

 private:
  std::vector<int> indices_;
};

// "s1,s3,s2"; the identity is the empty string.
std::string to_string(const WeylWord& w);
WeylWord parse_word(std::string_view text);

// v + <v, alpha> alpha.
LatticeVector reflect(const Root& alpha, const LatticeVector& v);
// Same, validating that alpha is a root of m.
LatticeVector reflect(const LatticeVector& alpha, const LatticeVector& v,
                      const MarkedLattice& m);

LatticeVector simple_reflect(int i, const LatticeVector& v,
                             const MarkedLattice& m);

LatticeVector apply_word(const WeylWord& w, const LatticeVector& v,
                         const MarkedLattice& m);

// Images of h, e1..er as matrix columns.
IntegerMatrix matrix_of_word(const WeylWord& w, const MarkedLattice& m);

// The W-orbit of v, sorted. Throws ResourceError once more than cap elements
// have been found.
std::vector<LatticeVector> orbit(const LatticeVector& v,
                                 const MarkedLattice& m,
                                 std::size_t cap = kDefaultOrbitCap);

// Orbit of an unordered set of vectors under the induced action; each member
// is returned as a sorted tuple.
std::vector<std::vector<LatticeVector>> orbit_of_set(
    std::vector<LatticeVector> set, const MarkedLattice& m,
    std::size_t cap = kDefaultOrbitCap);

struct DominantResult {
  LatticeVector vector;  // <vector, alpha_i> >= 0 for every i
  WeylWord word;         // apply_word(word, v) == vector
};

// Descent: while some <v, alpha_i> < 0 reflect in the lowest such i.
DominantResult dominant_representative(const LatticeVector& v,
                                       const MarkedLattice& m);

bool is_dominant(const LatticeVector& v, const MarkedLattice& m);

// Decomposes a kappa-fixing isometry of the lattice (columns are the images
// of h, e1..er) into simple reflections.
WeylWord connect_markings(const IntegerMatrix& iso, const MarkedLattice& m);

}  // namespace dpz
