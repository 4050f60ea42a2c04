#include "dpz/weights.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dpz/errors.hpp"

namespace dpz {

WeightLift fundamental_weight_lift(const MarkedLattice& m, int i) {
  const int r = m.r();
  if (r < 4) throw UnsupportedError("fundamental weight lifts need r >= 4");
  if (i < 1 || i > r)
    throw DomainError("fundamental index " + std::to_string(i) +
                      " outside 1.." + std::to_string(r));
  const auto h = LatticeVector::h(r);
  auto e = [r](int k) { return LatticeVector::e(r, k); };
  LatticeVector v(r);
  if (i == 1) {
    v = h - e(1);
  } else if (i == 2) {
    v = 2 * h - e(1) - e(2);
  } else if (i == r) {
    v = h;
  } else {
    for (int k = i + 1; k <= r; ++k) v += e(k);
  }
  return {v, i};
}

LatticeVector normalize_residue(const LatticeVector& v,
                                const MarkedLattice& m) {
  return lift_weight(coroot_values(v, m), m);
}

bool is_minuscule(const WeightLift& omega, const MarkedLattice& m) {
  if (!is_dominant(omega.vector, m))
    throw DomainError(to_string(omega.vector) + " is not dominant");
  for (const auto& a : enumerate_roots(m)) {
    const auto p = inner(omega.vector, a.vector());
    if (p < -1 || p > 1) return false;
  }
  return true;
}

namespace {

WeightSystem collect(const std::map<LatticeVector, int>& counts,
                     LatticeVector highest) {
  WeightSystem ws;
  for (const auto& [w, mult] : counts) {
    ws.weights.push_back({w, mult});
    ws.dimension += mult;
  }
  ws.highest = std::move(highest);
  return ws;
}

}  // namespace

WeightSystem adjoint_weight_system(const MarkedLattice& m) {
  if (m.r() < 4) throw UnsupportedError("adjoint weights need r >= 4");
  std::map<LatticeVector, int> counts;
  for (const auto& a : enumerate_roots(m))
    ++counts[normalize_residue(a.vector(), m)];
  counts[LatticeVector(m.r())] += m.r();
  return collect(counts,
                 normalize_residue(m.kappa() - highest_root(m).vector(), m));
}

WeightSystem minuscule_weight_system(const WeightLift& omega,
                                     const MarkedLattice& m) {
  if (!is_minuscule(omega, m))
    throw DomainError(to_string(omega.vector) + " is not minuscule");
  std::map<LatticeVector, int> counts;
  for (const auto& w : orbit(omega.vector, m))
    ++counts[normalize_residue(w, m)];
  return collect(counts, normalize_residue(omega.vector, m));
}

DualPartner dual_partner(int i, const MarkedLattice& m) {
  const auto lift_i = fundamental_weight_lift(m, i);
  const auto descent = dominant_representative(-lift_i.vector, m);
  // The dominant weight in the orbit of -omega_i is a fundamental weight.
  const auto values = coroot_values(descent.vector, m);
  int j = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == 0) continue;
    if (values[k] != 1 || j != 0)
      throw InternalError("dual of a fundamental weight is not fundamental");
    j = static_cast<int>(k) + 1;
  }
  if (j == 0) throw InternalError("dual of a fundamental weight is zero");
  const auto lift_j = fundamental_weight_lift(m, j);

  // w(-lift_i) = lift_j + t kappa, so lift_i + w^{-1}(lift_j) = -t kappa.
  const auto diff = descent.vector - lift_j.vector;
  const auto t = degree(diff, m) / m.d();
  if (diff != t * m.kappa())
    throw InternalError("dominant representative differs by a non-kappa");
  DualPartner out{j, descent.word.inverse(), -t};
  if (lift_i.vector + apply_word(out.word, lift_j.vector, m) !=
      out.n * m.kappa())
    throw InternalError("duality witness fails");
  return out;
}

std::vector<LineTriple> cubic_form_support(const MarkedLattice& m) {
  if (m.r() != 6)
    throw UnsupportedError("the cubic form is defined for r = 6 only");
  // Weights of the 27-dimensional representation: the orbit of lift(omega_5).
  const auto weights = orbit(fundamental_weight_lift(m, 5).vector, m);
  const std::set<LatticeVector> weight_set(weights.begin(), weights.end());
  std::vector<LineTriple> out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      const LatticeVector rest = m.kappa() - weights[i] - weights[j];
      if (rest <= weights[j] || !weight_set.contains(rest)) continue;
      out.push_back({weights[i], weights[j], rest});
    }
  }
  return out;
}

std::int64_t central_character(const WeightLift& lambda,
                               const MarkedLattice& m) {
  const auto b = degree(lambda.vector, m) % m.d();
  return b < 0 ? b + m.d() : b;
}

}  // namespace dpz
