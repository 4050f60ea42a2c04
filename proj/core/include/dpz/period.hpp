#pragma once

// Period homomorphisms from the marked lattice to an elliptic curve E with
// kappa in the kernel. E is modelled by its torsion subgroup (Q/Z)^2.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpz/lattice.hpp"
#include "dpz/linalg.hpp"
#include "dpz/weyl.hpp"

namespace dpz {

inline constexpr std::size_t kDefaultPeriodOrbitCap = 1'000'000;

class TorsionPoint {
 public:
  TorsionPoint() = default;
  // Reduced mod 1 on construction.
  TorsionPoint(const Rational& x, const Rational& y);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  TorsionPoint& operator+=(const TorsionPoint& o);
  friend TorsionPoint operator+(TorsionPoint a, const TorsionPoint& b) {
    return a += b;
  }
  friend TorsionPoint operator-(const TorsionPoint& a, const TorsionPoint& b);
  TorsionPoint operator-() const;
  friend TorsionPoint operator*(std::int64_t k, const TorsionPoint& p);

  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
  // Lexicographic on (x, y) by value.
  friend std::strong_ordering operator<=>(const TorsionPoint& a,
                                          const TorsionPoint& b);

 private:
  Rational x_{0};
  Rational y_{0};
};

// "a/b,c/d", denominators always written.
std::string to_string(const TorsionPoint& p);
// Accepts "a/b,c/d" and integer coordinates such as "0,1/2".
TorsionPoint parse_point(std::string_view text);

class PeriodHomomorphism {
 public:
  // Images of h, e1..er.
  const std::vector<TorsionPoint>& images() const { return images_; }
  int r() const { return static_cast<int>(images_.size()) - 1; }

 private:
  friend PeriodHomomorphism make_period(std::span<const TorsionPoint>);
  std::vector<TorsionPoint> images_;
};

// Throws ConstraintError when 3 pi(h) - sum pi(e_i) != 0, DomainError for a
// list whose length is not r + 1 with 3 <= r <= 8.
PeriodHomomorphism make_period(std::span<const TorsionPoint> assignments);

TorsionPoint evaluate(const PeriodHomomorphism& p, const LatticeVector& v);

// Values on alpha_1..alpha_r.
std::vector<TorsionPoint> restrict_to_coroots(const PeriodHomomorphism& p,
                                              const MarkedLattice& m);

// p o w, where w acts by apply_word.
PeriodHomomorphism precompose(const PeriodHomomorphism& p, const WeylWord& w,
                              const MarkedLattice& m);

struct CanonicalPeriod {
  std::vector<TorsionPoint> values;  // lexicographically least coroot tuple
  std::size_t orbit_size = 0;
};

// Least coroot-value tuple over the W-orbit (W acting by precomposition).
// Throws ResourceError past cap.
CanonicalPeriod weyl_canonicalize(const PeriodHomomorphism& p,
                                  const MarkedLattice& m,
                                  std::size_t cap = kDefaultPeriodOrbitCap);

}  // namespace dpz
