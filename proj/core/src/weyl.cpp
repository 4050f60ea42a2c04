#include "dpz/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "dpz/errors.hpp"

namespace dpz {

WeylWord WeylWord::inverse() const {
  return WeylWord(std::vector<int>(indices_.rbegin(), indices_.rend()));
}

std::string to_string(const WeylWord& w) {
  std::string out;
  for (int i : w.indices()) {
    if (!out.empty()) out += ',';
    out += 's';
    out += std::to_string(i);
  }
  return out;
}

WeylWord parse_word(std::string_view text) {
  WeylWord w;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos == text.size()) return w;
  while (true) {
    if (pos >= text.size() || text[pos] != 's')
      throw ParseError("expected 's'", pos);
    ++pos;
    const std::size_t start = pos;
    int value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000) throw ParseError("reflection index too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected reflection index", pos);
    w.push_back(value);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return w;
}

LatticeVector reflect(const Root& alpha, const LatticeVector& v) {
  return v + inner(v, alpha.vector()) * alpha.vector();
}

LatticeVector reflect(const LatticeVector& alpha, const LatticeVector& v,
                      const MarkedLattice& m) {
  return reflect(Root(alpha, m), v);
}

LatticeVector simple_reflect(int i, const LatticeVector& v,
                             const MarkedLattice& m) {
  const auto& a = m.simple_coroot(i);
  return v + inner(v, a) * a;
}

LatticeVector apply_word(const WeylWord& w, const LatticeVector& v,
                         const MarkedLattice& m) {
  LatticeVector out = v;
  for (int i : w.indices()) out = simple_reflect(i, out, m);
  return out;
}

IntegerMatrix matrix_of_word(const WeylWord& w, const MarkedLattice& m) {
  const std::size_t n = static_cast<std::size_t>(m.r()) + 1;
  IntegerMatrix out(n, std::vector<std::int64_t>(n));
  for (std::size_t col = 0; col < n; ++col) {
    const LatticeVector basis = col == 0
                                    ? LatticeVector::h(m.r())
                                    : LatticeVector::e(m.r(), int(col));
    const auto image = apply_word(w, basis, m).coefficients();
    for (std::size_t row = 0; row < n; ++row) out[row][col] = image[row];
  }
  return out;
}

std::vector<LatticeVector> orbit(const LatticeVector& v,
                                 const MarkedLattice& m, std::size_t cap) {
  if (v.rank() != m.r()) throw DomainError("rank mismatch in orbit");
  std::unordered_set<LatticeVector, LatticeVectorHash> seen{v};
  std::vector<LatticeVector> members{v};
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (const auto& a : m.simple_coroots()) {
      const auto p = inner(members[next], a);
      if (p == 0) continue;
      LatticeVector image = members[next] + p * a;
      if (seen.insert(image).second) {
        members.push_back(std::move(image));
        if (members.size() > cap)
          throw ResourceError("orbit exceeds cap of " + std::to_string(cap),
                              members.size());
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<LatticeVector>& t) const noexcept {
    std::size_t seed = t.size();
    LatticeVectorHash h;
    for (const auto& v : t)
      seed ^= h(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

}  // namespace

std::vector<std::vector<LatticeVector>> orbit_of_set(
    std::vector<LatticeVector> set, const MarkedLattice& m, std::size_t cap) {
  for (const auto& v : set)
    if (v.rank() != m.r()) throw DomainError("rank mismatch in orbit");
  std::sort(set.begin(), set.end());
  std::unordered_set<std::vector<LatticeVector>, TupleHash> seen{set};
  std::vector<std::vector<LatticeVector>> members{set};
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (int i = 1; i <= m.r(); ++i) {
      std::vector<LatticeVector> image;
      image.reserve(members[next].size());
      for (const auto& v : members[next])
        image.push_back(simple_reflect(i, v, m));
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) {
        members.push_back(std::move(image));
        if (members.size() > cap)
          throw ResourceError("orbit exceeds cap of " + std::to_string(cap),
                              members.size());
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_dominant(const LatticeVector& v, const MarkedLattice& m) {
  for (const auto& a : m.simple_coroots())
    if (inner(v, a) < 0) return false;
  return true;
}

DominantResult dominant_representative(const LatticeVector& v,
                                       const MarkedLattice& m) {
  DominantResult out{v, {}};
  while (true) {
    int chosen = 0;
    for (int i = 1; i <= m.r(); ++i) {
      if (inner(out.vector, m.simple_coroot(i)) < 0) {
        chosen = i;
        break;
      }
    }
    if (chosen == 0) return out;
    out.vector = simple_reflect(chosen, out.vector, m);
    out.word.push_back(chosen);
  }
}

namespace {

LatticeVector column(const IntegerMatrix& iso, std::size_t col) {
  std::vector<std::int64_t> e;
  for (std::size_t row = 1; row < iso.size(); ++row)
    e.push_back(iso[row][col]);
  return LatticeVector(iso[0][col], e);
}

LatticeVector apply_matrix(const IntegerMatrix& iso, const LatticeVector& v) {
  const auto c = v.coefficients();
  LatticeVector out(v.rank());
  for (std::size_t col = 0; col < c.size(); ++col)
    out += c[col] * column(iso, col);
  return out;
}

}  // namespace

WeylWord connect_markings(const IntegerMatrix& iso, const MarkedLattice& m) {
  const std::size_t n = static_cast<std::size_t>(m.r()) + 1;
  if (iso.size() != n)
    throw DomainError("isometry must be " + std::to_string(n) + "x" +
                      std::to_string(n));
  for (const auto& row : iso)
    if (row.size() != n)
      throw DomainError("isometry must be " + std::to_string(n) + "x" +
                        std::to_string(n));

  std::vector<LatticeVector> images;
  std::vector<LatticeVector> basis;
  for (std::size_t col = 0; col < n; ++col) {
    basis.push_back(col == 0 ? LatticeVector::h(m.r())
                             : LatticeVector::e(m.r(), int(col)));
    images.push_back(column(iso, col));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (inner(images[i], images[j]) != inner(basis[i], basis[j]))
        throw DomainError("matrix does not preserve the intersection form");
  if (apply_matrix(iso, m.kappa()) != m.kappa())
    throw DomainError("matrix does not fix kappa");

  // rho = sum of fundamental weight lifts is regular dominant, so its
  // stabiliser in W is trivial and the descent word determines iso.
  const std::vector<std::int64_t> ones(static_cast<std::size_t>(m.r()), 1);
  const LatticeVector rho = lift_weight(ones, m);
  const auto descent = dominant_representative(apply_matrix(iso, rho), m);
  if (descent.vector != rho)
    throw InternalError("image of rho is not W-conjugate to rho");
  WeylWord w = descent.word.inverse();

  // Residual stabiliser of rho is trivial; confirm on the whole basis.
  for (std::size_t i = 0; i < n; ++i)
    if (apply_word(w, basis[i], m) != images[i])
      throw InternalError("kappa-fixing isometry is not in the Weyl group");
  return w;
}

}  // namespace dpz
