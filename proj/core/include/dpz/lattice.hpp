#pragma once

// Integral lattice Z^{r+1} with basis h, e1..er and form diag(1,-1,...,-1),
// the anticanonical class kappa = 3h - sum e_i and the E_r coroot lattice
// Lambda = kappa^perp.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpz/linalg.hpp"

namespace dpz {

inline constexpr int kMinRank = 3;
inline constexpr int kMaxRank = 8;

// Coefficients (a; b1..br) of a h + sum b_i e_i. Arithmetic is exact: any
// overflow of the 64-bit coefficients throws ArithmeticOverflow.
class LatticeVector {
 public:
  LatticeVector() = default;
  // Zero vector of rank r.
  explicit LatticeVector(int r);
  LatticeVector(std::int64_t h, std::span<const std::int64_t> e);
  LatticeVector(std::int64_t h, std::initializer_list<std::int64_t> e);

  static LatticeVector h(int r);
  // e_i with 1 <= i <= r.
  static LatticeVector e(int r, int i);

  int rank() const { return rank_; }
  std::int64_t coeff_h() const { return c_[0]; }
  std::int64_t coeff_e(int i) const;
  // h coefficient followed by e1..er.
  std::span<const std::int64_t> coefficients() const {
    return {c_.data(), static_cast<std::size_t>(rank_) + 1};
  }
  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) {
    return a += b;
  }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) {
    return a -= b;
  }
  LatticeVector operator-() const;
  friend LatticeVector operator*(std::int64_t k, const LatticeVector& v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  // Lexicographic on (rank, h, e1, ..., er).
  friend std::strong_ordering operator<=>(const LatticeVector& a,
                                          const LatticeVector& b);

 private:
  void require_same_rank(const LatticeVector& o) const;

  int rank_ = 0;
  std::array<std::int64_t, kMaxRank + 1> c_{};
};

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

// Text syntax: "3h-e1-2e8", "0" for the zero vector. Terms may repeat and are
// summed; whitespace is ignored. Printing emits h then e1..er in order.
std::string to_string(const LatticeVector& v);
LatticeVector parse_vector(std::string_view text, int r);

class MarkedLattice {
 public:
  int r() const { return r_; }
  // d = 9 - r = <kappa, kappa>.
  int d() const { return 9 - r_; }
  const LatticeVector& kappa() const { return kappa_; }
  // alpha_i = e_i - e_{i+1} for i < r, alpha_r = h - e1 - e2 - e3.
  const std::vector<LatticeVector>& simple_coroots() const {
    return simple_coroots_;
  }
  const LatticeVector& simple_coroot(int i) const;

 private:
  friend MarkedLattice make_marked_lattice(int r);
  MarkedLattice() = default;

  int r_ = 0;
  LatticeVector kappa_;
  std::vector<LatticeVector> simple_coroots_;
};

// Throws DomainError unless 3 <= r <= 8.
MarkedLattice make_marked_lattice(int r);

std::int64_t inner(const LatticeVector& a, const LatticeVector& b);

// <v, kappa>. The rank of v must match M.
std::int64_t degree(const LatticeVector& v, const MarkedLattice& m);

// (<v, alpha_1>, ..., <v, alpha_r>).
std::vector<std::int64_t> coroot_values(const LatticeVector& v,
                                        const MarkedLattice& m);

struct DiscriminantData {
  int d = 0;
  // e_r, the fixed choice with <mu, kappa> = 1.
  LatticeVector mu;
  // mu - kappa/d reduced modulo Lambda: simple-coroot coordinates are taken
  // mod 1 and mapped back to the h, e_i coordinates.
  std::vector<Rational> mu2;
  // Coordinates of the reduced mu2 in the simple coroot basis, each in [0,1).
  std::vector<Rational> mu2_coroot_coords;
};

DiscriminantData discriminant_data(const MarkedLattice& m);

// Smallest n > 0 with n * mu2 in Lambda.
int discriminant_order(const DiscriminantData& data);

// A vector with <lambda, kappa> = a and <lambda, alpha_i> = psi_i, if one
// exists. Existence is the congruence a == -psi(d mu2) (mod d).
std::optional<LatticeVector> lift_character(std::int64_t a,
                                            std::span<const std::int64_t> psi,
                                            const MarkedLattice& m);

// The unique lambda with <lambda, alpha_i> = psi_i and 0 <= degree < d.
LatticeVector lift_weight(std::span<const std::int64_t> psi,
                          const MarkedLattice& m);

// Riemann-Roch: 1 + (<v,v> + deg v) / 2.
std::int64_t euler_char(const LatticeVector& v, const MarkedLattice& m);

}  // namespace dpz
