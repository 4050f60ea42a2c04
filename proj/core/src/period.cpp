#include "dpz/period.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "dpz/errors.hpp"

namespace dpz {

TorsionPoint::TorsionPoint(const Rational& x, const Rational& y)
    : x_(fractional_part(x)), y_(fractional_part(y)) {}

TorsionPoint& TorsionPoint::operator+=(const TorsionPoint& o) {
  x_ = fractional_part(x_ + o.x_);
  y_ = fractional_part(y_ + o.y_);
  return *this;
}

TorsionPoint operator-(const TorsionPoint& a, const TorsionPoint& b) {
  return TorsionPoint(a.x_ - b.x_, a.y_ - b.y_);
}

TorsionPoint TorsionPoint::operator-() const { return TorsionPoint(-x_, -y_); }

TorsionPoint operator*(std::int64_t k, const TorsionPoint& p) {
  return TorsionPoint(k * p.x_, k * p.y_);
}

std::strong_ordering operator<=>(const TorsionPoint& a, const TorsionPoint& b) {
  if (a.x_ != b.x_)
    return a.x_ < b.x_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  if (a.y_ != b.y_)
    return a.y_ < b.y_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

std::string with_denominator(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational parse_rational(std::string_view text, std::size_t offset) {
  auto parse_int = [&](std::string_view s, std::size_t at, bool allow_sign) {
    std::size_t i = 0;
    bool negative = false;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) {
      negative = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw ParseError("expected digits", at + i);
    BigInt value = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError(std::string("unexpected character '") + s[i] + "'",
                         at + i);
      value = value * 10 + (s[i] - '0');
    }
    return negative ? BigInt(-value) : value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, offset, true));
  const BigInt num = parse_int(text.substr(0, slash), offset, true);
  const BigInt den =
      parse_int(text.substr(slash + 1), offset + slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
  return Rational(num, den);
}

}  // namespace

std::string to_string(const TorsionPoint& p) {
  return with_denominator(p.x()) + "," + with_denominator(p.y());
}

TorsionPoint parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("expected 'a/b,c/d'", text.size());
  return TorsionPoint(parse_rational(text.substr(0, comma), 0),
                      parse_rational(text.substr(comma + 1), comma + 1));
}

PeriodHomomorphism make_period(std::span<const TorsionPoint> assignments) {
  const int r = static_cast<int>(assignments.size()) - 1;
  if (r < kMinRank || r > kMaxRank)
    throw DomainError("a period homomorphism needs r + 1 images with "
                      "3 <= r <= 8, got " +
                      std::to_string(assignments.size()));
  TorsionPoint at_kappa = 3 * assignments[0];
  for (std::size_t i = 1; i < assignments.size(); ++i)
    at_kappa = at_kappa - assignments[i];
  if (!at_kappa.is_zero())
    throw ConstraintError("homomorphism does not kill kappa: image is " +
                          to_string(at_kappa));
  PeriodHomomorphism p;
  p.images_.assign(assignments.begin(), assignments.end());
  return p;
}

TorsionPoint evaluate(const PeriodHomomorphism& p, const LatticeVector& v) {
  if (v.rank() != p.r())
    throw DomainError("rank mismatch: " + std::to_string(v.rank()) + " vs " +
                      std::to_string(p.r()));
  const auto c = v.coefficients();
  Rational x = 0, y = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    x += c[i] * p.images()[i].x();
    y += c[i] * p.images()[i].y();
  }
  return TorsionPoint(x, y);
}

std::vector<TorsionPoint> restrict_to_coroots(const PeriodHomomorphism& p,
                                              const MarkedLattice& m) {
  std::vector<TorsionPoint> out;
  for (const auto& a : m.simple_coroots()) out.push_back(evaluate(p, a));
  return out;
}

PeriodHomomorphism precompose(const PeriodHomomorphism& p, const WeylWord& w,
                              const MarkedLattice& m) {
  std::vector<TorsionPoint> images;
  images.push_back(evaluate(p, apply_word(w, LatticeVector::h(m.r()), m)));
  for (int i = 1; i <= m.r(); ++i)
    images.push_back(evaluate(p, apply_word(w, LatticeVector::e(m.r(), i), m)));
  return make_period(images);
}

namespace {

// Coroot tuple as 2r integers modulo a common denominator.
using Scaled = std::vector<std::int64_t>;

struct ScaledHash {
  std::size_t operator()(const Scaled& s) const noexcept {
    std::size_t seed = s.size();
    for (auto v : s)
      seed ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL +
              (seed << 6) + (seed >> 2);
    return seed;
  }
};

}  // namespace

CanonicalPeriod weyl_canonicalize(const PeriodHomomorphism& p,
                                  const MarkedLattice& m, std::size_t cap) {
  if (p.r() != m.r()) throw DomainError("rank mismatch in weyl_canonicalize");
  const auto values = restrict_to_coroots(p, m);
  const std::size_t r = values.size();

  BigInt lcm = 1;
  for (const auto& v : values) {
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v.x()));
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v.y()));
  }
  if (lcm > BigInt(1) << 40)
    throw DomainError("torsion order too large for canonicalisation");
  const std::int64_t n = static_cast<std::int64_t>(lcm);

  Scaled start(2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    start[2 * i] = static_cast<std::int64_t>(values[i].x() * n);
    start[2 * i + 1] = static_cast<std::int64_t>(values[i].y() * n);
  }

  // (p o s_j)(alpha_i) = p(alpha_i) + <alpha_i, alpha_j> p(alpha_j).
  const auto cartan = cartan_matrix(m);
  std::unordered_set<Scaled, ScaledHash> seen{start};
  std::vector<Scaled> frontier{start};
  Scaled best = start;
  for (std::size_t next = 0; next < frontier.size(); ++next) {
    const Scaled from = frontier[next];
    for (std::size_t j = 0; j < r; ++j) {
      Scaled image = from;
      for (std::size_t i = 0; i < r; ++i) {
        const std::int64_t pairing = -cartan[i][j];
        if (pairing == 0) continue;
        for (std::size_t k = 0; k < 2; ++k) {
          const std::int64_t v = (from[2 * i + k] + pairing * from[2 * j + k]) % n;
          image[2 * i + k] = v < 0 ? v + n : v;
        }
      }
      if (seen.insert(image).second) {
        if (image < best) best = image;
        frontier.push_back(std::move(image));
        if (frontier.size() > cap)
          throw ResourceError("period orbit exceeds cap of " +
                                  std::to_string(cap),
                              frontier.size());
      }
    }
  }

  CanonicalPeriod out;
  out.orbit_size = frontier.size();
  for (std::size_t i = 0; i < r; ++i)
    out.values.emplace_back(Rational(best[2 * i], n),
                            Rational(best[2 * i + 1], n));
  return out;
}

}  // namespace dpz
