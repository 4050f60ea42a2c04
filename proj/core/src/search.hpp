#pragma once

#include <cstdint>
#include <vector>

#include "dpz/lattice.hpp"

namespace dpz::detail {

// Every lambda = a h + sum b_i e_i with <lambda,lambda> = self_int and
// <lambda,kappa> = deg, in lexicographic order.
//
// With sum b_i = deg - 3a and sum b_i^2 = a^2 - self_int, Cauchy-Schwarz
// (sum b_i)^2 <= r sum b_i^2 gives
//   (9 - r) a^2 - 6 deg a + deg^2 + r self_int <= 0,
// which bounds a because 9 - r > 0. Each prefix of b is pruned by the same
// inequality on the remaining coordinates.
std::vector<LatticeVector> enumerate_norm_degree(const MarkedLattice& m,
                                                 std::int64_t self_int,
                                                 std::int64_t deg);

}  // namespace dpz::detail
