// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dpz/degeneration.hpp"
#include "dpz/dp_geometry.hpp"
#include "dpz/errors.hpp"
#include "dpz/lattice.hpp"
#include "dpz/period.hpp"
#include "dpz/root_system.hpp"
#include "dpz/weights.hpp"
#include "dpz/weyl.hpp"
#include "oracles.hpp"

namespace {

using namespace dpz;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << failed_ << " check(s) failed";
    for (const auto& f : failures_) out << "\n    " << f;
    return out.str();
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

std::string str(std::size_t n) { return std::to_string(n); }

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& vs) {
  return {vs.begin(), vs.end()};
}

std::set<LatticeVector> line_set(const MarkedLattice& m) {
  std::set<LatticeVector> out;
  for (const auto& l : lines(m)) out.insert(l.vector);
  return out;
}

std::set<LatticeVector> root_set(const MarkedLattice& m) {
  std::set<LatticeVector> out;
  for (const auto& a : enumerate_roots(m)) out.insert(a.vector());
  return out;
}

WeylWord random_word(std::mt19937_64& rng, int r, int length) {
  WeylWord w;
  for (int i = 0; i < length; ++i) w.push_back(1 + static_cast<int>(rng() % r));
  return w;
}

bool differs_by_kappa_multiple(const LatticeVector& a, const LatticeVector& b,
                               const MarkedLattice& m) {
  const auto diff = a - b;
  // kappa = 3h - sum e_i, so diff = t kappa iff every e-coefficient is -t
  // and the h-coefficient is 3t.
  const std::int64_t t = -diff.coeff_e(1);
  return diff == t * m.kappa();
}

void ac1_lines(Check& c) {
  const std::map<int, std::size_t> expected{{3, 6},  {4, 10},  {5, 16},
                                            {6, 27}, {7, 56}, {8, 240}};
  for (auto [r, n] : expected) {
    const auto m = make_marked_lattice(r);
    const auto found = line_set(m);
    c.expect(found.size() == n, "r=" + std::to_string(r) + " count " + str(found.size()));
    // Lines satisfy a <= 6 and |b_i| <= 3 for r <= 8.
    c.expect(as_set(oracle::box_scan(r, -1, 1, 6, 3)) == found,
             "box oracle differs at r=" + std::to_string(r));
    c.expect(as_set(orbit(LatticeVector::e(r, r), m)) == found,
             "orbit(e_r) differs at r=" + std::to_string(r));
  }
  c.expect(line_set(make_marked_lattice(6)) == oracle::cubic_surface_lines(),
           "r=6 lines differ from the listed families");
}

void ac2_roots(Check& c) {
  const std::map<int, std::size_t> expected{
      {4, 20}, {5, 40}, {6, 72}, {7, 126}, {8, 240}};
  for (auto [r, n] : expected) {
    const auto count = enumerate_roots(make_marked_lattice(r)).size();
    c.expect(count == n, "r=" + std::to_string(r) + " count " + str(count));
  }
  const auto m = make_marked_lattice(6);
  c.expect(2 * double_sixes(m).size() == enumerate_roots(m).size(),
           "72 roots != 2 * double sixes");
}

void ac3_positive_roots(Check& c) {
  for (int r = 4; r <= 8; ++r) {
    std::set<LatticeVector> found;
    for (const auto& a : positive_roots(make_marked_lattice(r)))
      found.insert(a.vector());
    c.expect(found == oracle::positive_root_families(r),
             "positive roots differ at r=" + std::to_string(r));
  }
}

void ac4_highest_root(Check& c) {
  const std::map<int, int> adjoint_index{{5, 2}, {6, 6}, {7, 1}, {8, 7}};
  for (int r = 4; r <= 8; ++r) {
    const auto m = make_marked_lattice(r);
    const auto top = highest_root(m).vector();
    c.expect(top == oracle::highest_root_closed_form(r),
             "highest root at r=" + std::to_string(r) + " is " + to_string(top));
    if (auto it = adjoint_index.find(r); it != adjoint_index.end()) {
      const auto w = fundamental_weight_lift(m, it->second).vector;
      c.expect(differs_by_kappa_multiple(m.kappa() - top, w, m),
               "kappa - highest root at r=" + std::to_string(r) + " is " +
                   to_string(m.kappa() - top));
    }
  }
}

void ac5_triples(Check& c) {
  const auto m = make_marked_lattice(6);
  const auto triples = coplanar_triples(m);
  c.expect(triples.size() == 45, "count " + str(triples.size()));
  std::map<LatticeVector, int> incidence;
  std::set<std::set<LatticeVector>> as_sets;
  for (const auto& t : triples) {
    c.expect(t[0] + t[1] + t[2] == m.kappa(), "triple does not sum to kappa");
    for (const auto& l : t) ++incidence[l];
    as_sets.insert({t[0], t[1], t[2]});
  }
  c.expect(incidence.size() == 27, "not every line is covered");
  for (const auto& [l, n] : incidence)
    c.expect(n == 5, to_string(l) + " lies in " + std::to_string(n));
  std::set<std::set<LatticeVector>> support;
  for (const auto& t : cubic_form_support(m)) support.insert({t[0], t[1], t[2]});
  c.expect(support == as_sets, "cubic form support differs");
}

void ac6_double_sixes(Check& c) {
  const auto m = make_marked_lattice(6);
  const auto ds = double_sixes(m);
  c.expect(ds.size() == 36, "count " + str(ds.size()));
  std::multiset<LineSet> covered;
  for (const auto& d : ds) {
    covered.insert(d.first);
    auto second = d.second;
    std::sort(second.begin(), second.end());
    covered.insert(second);
  }
  const auto sixes = disjoint_line_sets(m, 6);
  c.expect(sixes.size() == 72, "sixes " + str(sixes.size()));
  c.expect(covered.size() == 72, "double sixes cover " + str(covered.size()));
  for (const auto& s : sixes) c.expect(covered.count(s) == 1, "six not covered once");
  std::set<LatticeVector> image;
  for (const auto& s : sixes) image.insert(root_from_six(s, m).vector());
  c.expect(image == root_set(m), "root_from_six image has " + str(image.size()));
}

bool is_partition(const std::vector<SubOrbit>& orbits,
                  const std::vector<LatticeVector>& weights) {
  std::set<LatticeVector> seen;
  for (const auto& o : orbits) {
    if (o.size != o.members.size() || o.members.empty()) return false;
    for (const auto& v : o.members)
      if (!seen.insert(v).second) return false;
  }
  for (const auto& w : weights)
    if (!seen.contains(w)) return false;
  return true;
}

void ac7_degeneration(Check& c) {
  const auto m = make_marked_lattice(6);
  std::vector<LatticeVector> ls;
  for (const auto& l : lines(m)) ls.push_back(l.vector);
  auto histogram = [](const std::vector<SubOrbit>& orbits) {
    std::map<std::size_t, int> h;
    for (const auto& o : orbits) ++h[o.size];
    return h;
  };
  const auto one_node = orbit_decomposition(
      make_configuration({parse_vector("e1-e2", 6)}, m), ls, m);
  c.expect(histogram(one_node) == std::map<std::size_t, int>{{1, 15}, {2, 6}},
           "single node histogram");
  c.expect(histogram(orbit_decomposition(make_configuration({}, m), ls, m)) ==
               std::map<std::size_t, int>{{1, 27}},
           "empty configuration histogram");

  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 3 + trial % 6;
    const auto mr = make_marked_lattice(r);
    const auto w = random_word(rng, r, 10);
    std::vector<LatticeVector> curves;
    for (const auto& a : mr.simple_coroots())
      if (rng() % 2) curves.push_back(apply_word(w, a, mr));
    const auto config = make_configuration(curves, mr);
    std::vector<LatticeVector> weights;
    for (const auto& l : lines(mr)) weights.push_back(l.vector);
    c.expect(is_partition(orbit_decomposition(config, weights, mr), weights),
             "not a partition for " + to_string(config.type));
  }
}

void ac8_minuscule(Check& c) {
  const std::map<int, std::set<int>> expected{
      {4, {1, 2, 3, 4}}, {5, {1, 4, 5}}, {6, {1, 5}}, {7, {6}}, {8, {}}};
  for (const auto& [r, indices] : expected) {
    const auto m = make_marked_lattice(r);
    std::set<int> found;
    for (int i = 1; i <= r; ++i)
      if (is_minuscule(fundamental_weight_lift(m, i), m)) found.insert(i);
    c.expect(found == indices, "minuscule set differs at r=" + std::to_string(r));
  }
  const std::vector<std::tuple<int, int, std::size_t>> dims{
      {6, 5, 27}, {6, 1, 27}, {7, 6, 56}, {5, 1, 10}, {5, 4, 16}, {5, 5, 16}};
  for (auto [r, i, dim] : dims) {
    const auto m = make_marked_lattice(r);
    const auto size = orbit(fundamental_weight_lift(m, i).vector, m).size();
    c.expect(size == dim, "orbit of w" + std::to_string(i) + " at r=" +
                              std::to_string(r) + " has " + str(size));
  }
}

void ac9_duality(Check& c) {
  auto witness_holds = [](int i, const DualPartner& p, const MarkedLattice& m) {
    return fundamental_weight_lift(m, i).vector +
               apply_word(p.word, fundamental_weight_lift(m, p.index).vector, m) ==
           p.n * m.kappa();
  };
  for (int r = 4; r <= 8; ++r) {
    const auto m = make_marked_lattice(r);
    for (int i = 1; i <= r; ++i) {
      const auto p = dual_partner(i, m);
      c.expect(witness_holds(i, p, m), "witness fails r=" + std::to_string(r));
      c.expect(dual_partner(p.index, m).index == i, "not an involution");
    }
  }
  const auto m6 = make_marked_lattice(6);
  const auto p = dual_partner(1, m6);
  c.expect(p.index == 5 && p.n == 1, "r=6 partner of w1");
  const auto m4 = make_marked_lattice(4);
  c.expect(dual_partner(1, m4).index == 4, "r=4 conic and cubic");
  c.expect(dual_partner(3, m4).index == 2, "r=4 line and quartic");
  c.expect(dual_partner(1, make_marked_lattice(5)).index == 1, "r=5 w1");
}

void ac10_properties(Check& c) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 10000; ++trial) {
    const int r = 3 + trial % 6;
    const auto m = make_marked_lattice(r);
    const auto u = oracle::random_vector(rng, r, 10);
    const auto v = oracle::random_vector(rng, r, 10);
    const int i = 1 + static_cast<int>(rng() % r);
    c.expect(inner(simple_reflect(i, u, m), simple_reflect(i, v, m)) == inner(u, v),
             "reflection does not preserve the form");
    c.expect(simple_reflect(i, m.kappa(), m) == m.kappa(), "kappa moved");
  }
  for (int r = 3; r <= 7; ++r) {
    const auto m = make_marked_lattice(r);
    for (int trial = 0; trial < 4; ++trial) {
      const auto v = oracle::random_vector(rng, r, 2);
      for (const auto& w : orbit(v, m))
        c.expect(inner(w, w) == inner(v, v) && degree(w, m) == degree(v, m),
                 "orbit member of " + to_string(v) + " changes invariants");
    }
  }
  for (int trial = 0; trial < 2000; ++trial) {
    const int r = 3 + trial % 6;
    const auto m = make_marked_lattice(r);
    const auto v = oracle::random_vector(rng, r, 8);
    const auto d = dominant_representative(v, m);
    c.expect(is_dominant(d.vector, m) && apply_word(d.word, v, m) == d.vector,
             "dominant descent of " + to_string(v));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 3 + trial % 6;
    const auto m = make_marked_lattice(r);
    const auto matrix = matrix_of_word(random_word(rng, r, 1 + trial % 25), m);
    c.expect(matrix_of_word(connect_markings(matrix, m), m) == matrix,
             "connect_markings trial " + std::to_string(trial));
  }
  for (int r = 3; r <= 8; ++r) {
    const auto m = make_marked_lattice(r);
    for (const auto& a : enumerate_roots(m))
      c.expect(euler_char(a.vector(), m) == 0, "chi of " + to_string(a.vector()));
    c.expect(determinant(to_rational(cartan_matrix(m))) == 9 - r,
             "Cartan determinant at r=" + std::to_string(r));
  }
}

PeriodHomomorphism random_period(std::mt19937_64& rng, int r,
                                 std::int64_t denom) {
  auto point = [&] {
    return TorsionPoint(Rational(static_cast<std::int64_t>(rng() % denom), denom),
                        Rational(static_cast<std::int64_t>(rng() % denom), denom));
  };
  std::vector<TorsionPoint> images;
  for (int i = 0; i < r; ++i) images.push_back(point());
  TorsionPoint last = 3 * images[0];
  for (int i = 1; i < r; ++i) last = last - images[i];
  images.push_back(last);
  return make_period(images);
}

void ac11_period(Check& c) {
  std::vector<TorsionPoint> bad(7);
  bad[0] = TorsionPoint(Rational(1, 2), Rational(0));
  bool rejected = false;
  try {
    make_period(bad);
  } catch (const ConstraintError&) {
    rejected = true;
  }
  c.expect(rejected, "nonzero kappa image accepted");

  std::mt19937_64 rng(107);
  for (int r = 3; r <= 6; ++r) {
    const auto m = make_marked_lattice(r);
    for (int point = 0; point < 3; ++point) {
      const auto p = random_period(rng, r, r <= 5 ? 6 : 3);
      const auto base = weyl_canonicalize(p, m).values;
      for (int k = 0; k < 50; ++k) {
        const auto moved = precompose(p, random_word(rng, r, 1 + k % 12), m);
        c.expect(weyl_canonicalize(moved, m).values == base,
                 "canonical form moved at r=" + std::to_string(r));
      }
    }
  }
  for (int trial = 0; trial < 10000; ++trial) {
    const int r = 3 + trial % 6;
    const auto m = make_marked_lattice(r);
    const auto p = random_period(rng, r, 12);
    const auto a = oracle::random_vector(rng, r, 20);
    const auto b = oracle::random_vector(rng, r, 20);
    c.expect(evaluate(p, a + b) == evaluate(p, a) + evaluate(p, b),
             "additivity");
    c.expect(evaluate(p, m.kappa()).is_zero(), "kappa not killed");
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "line counts agree with box search and orbit(e_r)", ac1_lines},
      {2, "root counts", ac2_roots},
      {3, "positive roots equal the closed families", ac3_positive_roots},
      {4, "highest roots and adjoint highest weights", ac4_highest_root},
      {5, "45 coplanar triples and the cubic form support", ac5_triples},
      {6, "36 double sixes over 72 sixes, roots from sixes", ac6_double_sixes},
      {7, "degeneration orbit decompositions", ac7_degeneration},
      {8, "minuscule classification and orbit dimensions", ac8_minuscule},
      {9, "duality witnesses", ac9_duality},
      {10, "Weyl action property suites", ac10_properties},
      {11, "period map constraint, canonical form, additivity", ac11_period},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (check.passed() ? "[PASS] " : "[FAIL] ") << "AC" << criterion.id
              << " " << criterion.title << " (" << ms << " ms)";
    if (!check.passed()) {
      std::cout << "\n    " << check.summary();
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
