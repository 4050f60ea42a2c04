#include "dpz/root_system.hpp"

#include <algorithm>
#include <numeric>

#include "dpz/errors.hpp"
#include "search.hpp"

namespace dpz {

bool is_root(const LatticeVector& v, const MarkedLattice& m) {
  return v.rank() == m.r() && inner(v, v) == -2 && degree(v, m) == 0;
}

Root::Root(LatticeVector v, const MarkedLattice& m) : v_(std::move(v)) {
  if (!is_root(v_, m))
    throw DomainError(to_string(v_) + " is not a root");
}

DynkinType::DynkinType(std::vector<DynkinComponent> components)
    : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
}

int DynkinType::rank() const {
  int total = 0;
  for (const auto& c : components_) total += c.rank;
  return total;
}

std::string to_string(const DynkinType& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& c : t.components()) {
    if (!out.empty()) out += '+';
    out += c.letter;
    out += std::to_string(c.rank);
  }
  return out;
}

std::vector<Root> enumerate_roots(const MarkedLattice& m) {
  std::vector<Root> out;
  for (auto& v : detail::enumerate_norm_degree(m, -2, 0))
    out.emplace_back(std::move(v), m);
  return out;
}

std::vector<Rational> expand_in_simple(const LatticeVector& v,
                                       const MarkedLattice& m) {
  if (degree(v, m) != 0)
    throw DomainError(to_string(v) +
                      " is not in the span of the simple coroots");
  const auto& s = m.simple_coroots();
  RationalMatrix gram(s.size(), std::vector<Rational>(s.size()));
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) gram[i][j] = inner(s[i], s[j]);
    rhs.emplace_back(inner(v, s[i]));
  }
  auto c = solve(gram, rhs);
  if (!c) throw InternalError("simple coroots are dependent");
  return *c;
}

namespace {

bool is_positive(const Root& a, const MarkedLattice& m) {
  const auto c = expand_in_simple(a.vector(), m);
  return std::all_of(c.begin(), c.end(),
                     [](const Rational& x) { return x >= 0; });
}

}  // namespace

std::vector<Root> positive_roots(const MarkedLattice& m) {
  std::vector<Root> out;
  for (auto& a : enumerate_roots(m))
    if (is_positive(a, m)) out.push_back(std::move(a));
  return out;
}

std::int64_t height(const Root& a, const MarkedLattice& m) {
  const auto c = expand_in_simple(a.vector(), m);
  Rational sum = std::accumulate(c.begin(), c.end(), Rational(0));
  if (!is_integer(sum)) throw InternalError("root with fractional height");
  return static_cast<std::int64_t>(boost::multiprecision::numerator(sum));
}

Root highest_root(const MarkedLattice& m) {
  if (m.r() < 4)
    throw UnsupportedError("highest root needs a simple root system (r >= 4)");
  const auto positives = positive_roots(m);
  std::optional<Root> best;
  std::int64_t best_height = 0;
  bool unique = true;
  for (const auto& a : positives) {
    const auto ht = height(a, m);
    if (!best || ht > best_height) {
      best = a;
      best_height = ht;
      unique = true;
    } else if (ht == best_height) {
      unique = false;
    }
  }
  if (!best || !unique) throw InternalError("no unique highest root");
  return *best;
}

IntegerMatrix cartan_matrix(const MarkedLattice& m) {
  const auto& s = m.simple_coroots();
  IntegerMatrix c(s.size(), std::vector<std::int64_t>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) c[i][j] = -inner(s[i], s[j]);
  return c;
}

namespace {

DynkinComponent classify_component(const std::vector<std::vector<int>>& adj,
                                   const std::vector<int>& nodes,
                                   std::span<const LatticeVector> roots) {
  const int n = static_cast<int>(nodes.size());
  int edges = 0;
  std::vector<int> branch;
  for (int v : nodes) {
    const int deg = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    edges += deg;
    if (deg > 3)
      throw ConfigurationError("node " + to_string(roots[v]) +
                               " has more than three neighbours");
    if (deg == 3) branch.push_back(v);
  }
  edges /= 2;
  if (edges != n - 1)
    throw ConfigurationError("diagram through " + to_string(roots[nodes[0]]) +
                             " contains a cycle");
  if (branch.empty()) return {'A', n};
  if (branch.size() > 1)
    throw ConfigurationError("diagram through " + to_string(roots[nodes[0]]) +
                             " has more than one branch node");

  // Arm lengths from the branch node.
  const int centre = branch.front();
  std::vector<int> arms;
  for (int start : adj[static_cast<std::size_t>(centre)]) {
    int prev = centre, cur = start, len = 1;
    while (true) {
      const auto& next = adj[static_cast<std::size_t>(cur)];
      if (next.size() == 1) break;
      const int nxt = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return {'E', n};
  throw ConfigurationError("diagram through " + to_string(roots[centre]) +
                           " is not of type A, D or E");
}

}  // namespace

DynkinType dynkin_type(std::span<const LatticeVector> roots) {
  const std::size_t k = roots.size();
  for (const auto& v : roots)
    if (inner(v, v) != -2)
      throw ConfigurationError(to_string(v) + " does not have square -2");

  std::vector<std::vector<int>> adj(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto p = inner(roots[i], roots[j]);
      if (p != 0 && p != 1)
        throw ConfigurationError("pairing of " + to_string(roots[i]) +
                                 " and " + to_string(roots[j]) + " is " +
                                 std::to_string(p) + ", expected 0 or 1");
      if (p == 1) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
    }
  }

  if (k > 0) {
    RationalMatrix rows;
    for (const auto& v : roots) {
      std::vector<Rational> row;
      for (auto c : v.coefficients()) row.emplace_back(c);
      rows.push_back(std::move(row));
    }
    if (rank(rows) != k)
      throw ConfigurationError("roots are linearly dependent");
  }

  std::vector<DynkinComponent> components;
  std::vector<bool> seen(k, false);
  for (std::size_t s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::vector<int> nodes{static_cast<int>(s)};
    seen[s] = true;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (int nb : adj[static_cast<std::size_t>(nodes[i])]) {
        if (!seen[static_cast<std::size_t>(nb)]) {
          seen[static_cast<std::size_t>(nb)] = true;
          nodes.push_back(nb);
        }
      }
    }
    components.push_back(classify_component(adj, nodes, roots));
  }
  return DynkinType(std::move(components));
}

RootSystemData root_system_data(const MarkedLattice& m) {
  RootSystemData data;
  data.all_roots = enumerate_roots(m);
  for (const auto& a : data.all_roots)
    if (is_positive(a, m)) data.positive_roots.push_back(a);
  if (m.r() >= 4) data.highest_root = highest_root(m);
  data.cartan = cartan_matrix(m);
  data.dynkin_type = dynkin_type(m.simple_coroots());
  return data;
}

}  // namespace dpz
