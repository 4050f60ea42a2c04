#include "dpz/dp_geometry.hpp"

#include <algorithm>
#include <set>

#include "dpz/errors.hpp"
#include "search.hpp"

namespace dpz {

namespace {

bool is_line(const LatticeVector& v, const MarkedLattice& m) {
  return v.rank() == m.r() && inner(v, v) == -1 && degree(v, m) == 1;
}

void require_r6(const MarkedLattice& m, const char* what) {
  if (m.r() != 6)
    throw UnsupportedError(std::string(what) + " is defined for r = 6 only");
}

void require_disjoint_lines(const LineSet& s, const MarkedLattice& m) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_line(s[i], m))
      throw DomainError(to_string(s[i]) + " is not a line class");
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (inner(s[i], s[j]) != 0)
        throw DomainError(to_string(s[i]) + " and " + to_string(s[j]) +
                          " are not disjoint");
  }
}

// Ordering of partner so that partner[i] pairs to 0 with six[i] and to 1
// with the others; empty when the pattern fails.
LineSet match_pattern(const LineSet& six, const LineSet& partner) {
  LineSet ordered(six.size());
  std::vector<bool> used(partner.size(), false);
  for (std::size_t i = 0; i < six.size(); ++i) {
    int zero_at = -1;
    for (std::size_t j = 0; j < partner.size(); ++j) {
      const auto p = inner(six[i], partner[j]);
      if (p == 0) {
        if (zero_at != -1) return {};
        zero_at = static_cast<int>(j);
      } else if (p != 1) {
        return {};
      }
    }
    if (zero_at == -1 || used[static_cast<std::size_t>(zero_at)]) return {};
    used[static_cast<std::size_t>(zero_at)] = true;
    ordered[i] = partner[static_cast<std::size_t>(zero_at)];
  }
  return ordered;
}

LineSet find_partner(const LineSet& six, const std::vector<LineSet>& sixes) {
  LineSet found;
  for (const auto& candidate : sixes) {
    const bool shares = std::any_of(
        candidate.begin(), candidate.end(), [&](const LatticeVector& v) {
          return std::find(six.begin(), six.end(), v) != six.end();
        });
    if (shares) continue;
    auto ordered = match_pattern(six, candidate);
    if (ordered.empty()) continue;
    if (!found.empty()) throw InternalError("six has two partner sixes");
    found = std::move(ordered);
  }
  if (found.empty()) throw InternalError("six has no partner six");
  return found;
}

}  // namespace

std::vector<CurveClass> enumerate_classes(const MarkedLattice& m,
                                          std::int64_t self_int,
                                          std::int64_t deg, bool allow_any) {
  if (!allow_any && self_int - deg != -2)
    throw DomainError("self-intersection minus degree must be -2 for smooth "
                      "rational classes");
  std::vector<CurveClass> out;
  for (auto& v : detail::enumerate_norm_degree(m, self_int, deg))
    out.push_back({std::move(v), self_int, deg});
  return out;
}

std::vector<CurveClass> lines(const MarkedLattice& m) {
  return enumerate_classes(m, -1, 1);
}

std::vector<LineTriple> coplanar_triples(const MarkedLattice& m) {
  require_r6(m, "coplanar triples");
  const auto all = lines(m);
  std::set<LatticeVector> line_set;
  for (const auto& c : all) line_set.insert(c.vector);

  std::set<LineTriple> triples;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto& a = all[i].vector;
      const auto& b = all[j].vector;
      if (inner(a, b) != 1) continue;
      LatticeVector c = m.kappa() - a - b;
      if (!line_set.contains(c) || c == a || c == b) continue;
      LineTriple t{a, b, c};
      std::sort(t.begin(), t.end());
      triples.insert(t);
    }
  }
  return {triples.begin(), triples.end()};
}

std::vector<LineSet> disjoint_line_sets(const MarkedLattice& m, int k) {
  if (k < 1 || k > m.r())
    throw DomainError("k must lie in 1.." + std::to_string(m.r()));
  std::vector<LatticeVector> all;
  for (auto& c : lines(m)) all.push_back(std::move(c.vector));

  std::vector<LineSet> out;
  LineSet current;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == static_cast<std::size_t>(k)) {
      out.push_back(current);
      return;
    }
    const std::size_t needed = static_cast<std::size_t>(k) - current.size();
    for (std::size_t i = start; i + needed <= all.size(); ++i) {
      const bool disjoint =
          std::all_of(current.begin(), current.end(),
                      [&](const LatticeVector& v) { return inner(v, all[i]) == 0; });
      if (!disjoint) continue;
      current.push_back(all[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

LineSet double_six_partner(const LineSet& six, const MarkedLattice& m) {
  require_r6(m, "double sixes");
  if (six.size() != 6) throw DomainError("a six has exactly six lines");
  require_disjoint_lines(six, m);
  return find_partner(six, disjoint_line_sets(m, 6));
}

std::vector<DoubleSix> double_sixes(const MarkedLattice& m) {
  require_r6(m, "double sixes");
  const auto sixes = disjoint_line_sets(m, 6);
  std::vector<DoubleSix> out;
  std::set<LineSet> paired;
  for (const auto& six : sixes) {
    if (paired.contains(six)) continue;
    LineSet partner = find_partner(six, sixes);
    LineSet sorted_partner = partner;
    std::sort(sorted_partner.begin(), sorted_partner.end());
    if (paired.contains(sorted_partner))
      throw InternalError("double-six pairing is not an involution");
    paired.insert(six);
    paired.insert(sorted_partner);
    // six < sorted_partner because sixes are visited in sorted order.
    out.push_back({six, std::move(partner)});
  }
  return out;
}

BlowdownBasis blowdown_basis(const LineSet& s, const MarkedLattice& m) {
  if (s.size() != static_cast<std::size_t>(m.r()))
    throw DomainError("a blowdown needs " + std::to_string(m.r()) +
                      " disjoint lines");
  require_disjoint_lines(s, m);
  LatticeVector sum = m.kappa();
  for (const auto& v : s) sum += v;
  std::vector<std::int64_t> e;
  for (int i = 1; i <= m.r(); ++i) {
    if (sum.coeff_e(i) % 3 != 0)
      throw DomainError("(kappa + sum of lines) / 3 is not integral");
    e.push_back(sum.coeff_e(i) / 3);
  }
  if (sum.coeff_h() % 3 != 0)
    throw DomainError("(kappa + sum of lines) / 3 is not integral");
  BlowdownBasis basis{LatticeVector(sum.coeff_h() / 3, e), s};

  LatticeVector check = 3 * basis.gamma;
  for (const auto& eps : basis.epsilons) check -= eps;
  if (inner(basis.gamma, basis.gamma) != 1 || check != m.kappa())
    throw DomainError("lines do not define a diagonal basis");
  for (const auto& eps : basis.epsilons)
    if (inner(basis.gamma, eps) != 0)
      throw DomainError("lines do not define a diagonal basis");
  return basis;
}

Root root_from_six(const LineSet& six, const MarkedLattice& m) {
  require_r6(m, "root_from_six");
  const auto basis = blowdown_basis(six, m);
  LatticeVector v = 2 * basis.gamma;
  for (const auto& eps : basis.epsilons) v -= eps;
  return Root(v, m);
}

}  // namespace dpz
