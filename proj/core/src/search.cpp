#include "search.hpp"

#include <algorithm>

#include "checked.hpp"

namespace dpz::detail {

namespace {

struct Search {
  int r;
  std::int64_t h;
  std::vector<std::int64_t> b;
  std::vector<LatticeVector>* out;

  void descend(int k, std::int64_t norm_left, std::int64_t sum_left) {
    const int remaining = r - k;
    if (remaining == 0) {
      if (norm_left == 0 && sum_left == 0) out->emplace_back(h, b);
      return;
    }
    if (sum_left * sum_left > remaining * norm_left) return;
    if (((norm_left - sum_left) & 1) != 0) return;
    std::int64_t bound = 0;
    while ((bound + 1) * (bound + 1) <= norm_left) ++bound;
    for (std::int64_t x = -bound; x <= bound; ++x) {
      b[static_cast<std::size_t>(k)] = x;
      descend(k + 1, norm_left - x * x, sum_left - x);
    }
    b[static_cast<std::size_t>(k)] = 0;
  }
};

}  // namespace

std::vector<LatticeVector> enumerate_norm_degree(const MarkedLattice& m,
                                                 std::int64_t self_int,
                                                 std::int64_t deg) {
  const std::int64_t r = m.r();
  const std::int64_t q = 9 - r;
  // f(a) <= 0 is the admissible range; f is a convex quadratic.
  auto f = [&](std::int64_t a) {
    return checked_add(
        checked_sub(checked_mul(q, checked_mul(a, a)),
                    checked_mul(6 * deg, a)),
        checked_add(checked_mul(deg, deg), checked_mul(r, self_int)));
  };
  // Vertex at 3 deg / q.
  std::int64_t center = (3 * deg) / q;
  std::int64_t lo = center, hi = center;
  if (f(center) > 0) {
    // Check the neighbours of a non-integral vertex before giving up.
    if (f(center - 1) <= 0) {
      lo = hi = center - 1;
    } else if (f(center + 1) <= 0) {
      lo = hi = center + 1;
    } else {
      return {};
    }
  }
  while (f(lo - 1) <= 0) --lo;
  while (f(hi + 1) <= 0) ++hi;

  std::vector<LatticeVector> out;
  Search s{static_cast<int>(r), 0, std::vector<std::int64_t>(static_cast<std::size_t>(r)),
           &out};
  for (std::int64_t a = lo; a <= hi; ++a) {
    const std::int64_t norm = checked_sub(checked_mul(a, a), self_int);
    if (norm < 0) continue;
    s.h = a;
    s.descend(0, norm, checked_sub(deg, checked_mul(3, a)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dpz::detail
