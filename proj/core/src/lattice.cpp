#include "dpz/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "checked.hpp"
#include "dpz/errors.hpp"

namespace dpz {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

namespace {

void require_rank(int r) {
  if (r < 0 || r > kMaxRank)
    throw DomainError("lattice rank " + std::to_string(r) +
                      " outside [0, " + std::to_string(kMaxRank) + "]");
}

std::int64_t form_sign(std::size_t index) { return index == 0 ? 1 : -1; }

}  // namespace

LatticeVector::LatticeVector(int r) : rank_(r) { require_rank(r); }

LatticeVector::LatticeVector(std::int64_t h, std::span<const std::int64_t> e)
    : rank_(static_cast<int>(e.size())) {
  require_rank(rank_);
  c_[0] = h;
  std::copy(e.begin(), e.end(), c_.begin() + 1);
}

LatticeVector::LatticeVector(std::int64_t h,
                             std::initializer_list<std::int64_t> e)
    : LatticeVector(h, std::span<const std::int64_t>(e.begin(), e.size())) {}

LatticeVector LatticeVector::h(int r) {
  LatticeVector v(r);
  v.c_[0] = 1;
  return v;
}

LatticeVector LatticeVector::e(int r, int i) {
  LatticeVector v(r);
  if (i < 1 || i > r)
    throw DomainError("basis index e" + std::to_string(i) +
                      " outside 1.." + std::to_string(r));
  v.c_[static_cast<std::size_t>(i)] = 1;
  return v;
}

std::int64_t LatticeVector::coeff_e(int i) const {
  if (i < 1 || i > rank_)
    throw DomainError("coefficient index " + std::to_string(i) +
                      " outside 1.." + std::to_string(rank_));
  return c_[static_cast<std::size_t>(i)];
}

bool LatticeVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x == 0; });
}

void LatticeVector::require_same_rank(const LatticeVector& o) const {
  if (rank_ != o.rank_)
    throw DomainError("rank mismatch: " + std::to_string(rank_) + " vs " +
                      std::to_string(o.rank_));
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_same_rank(o);
  for (int i = 0; i <= rank_; ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_same_rank(o);
  for (int i = 0; i <= rank_; ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out(rank_);
  for (int i = 0; i <= rank_; ++i) out.c_[i] = checked_sub(0, c_[i]);
  return out;
}

LatticeVector operator*(std::int64_t k, const LatticeVector& v) {
  LatticeVector out(v.rank_);
  for (int i = 0; i <= v.rank_; ++i) out.c_[i] = checked_mul(k, v.c_[i]);
  return out;
}

std::strong_ordering operator<=>(const LatticeVector& a,
                                 const LatticeVector& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  for (int i = 0; i <= a.rank_; ++i)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t LatticeVectorHash::operator()(
    const LatticeVector& v) const noexcept {
  std::size_t seed = std::hash<int>{}(v.rank());
  for (auto c : v.coefficients())
    seed ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL +
            (seed << 6) + (seed >> 2);
  return seed;
}

std::string to_string(const LatticeVector& v) {
  std::string out;
  const auto coeffs = v.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::int64_t c = coeffs[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c)
                                    : static_cast<std::uint64_t>(c);
    if (mag != 1) out += std::to_string(mag);
    if (i == 0) {
      out += 'h';
    } else {
      out += 'e';
      out += std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class VectorParser {
 public:
  VectorParser(std::string_view text, int r) : text_(text), r_(r), v_(r) {}

  LatticeVector parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty vector", pos_);
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      parse_term(first);
      first = false;
    }
    return v_;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_digit() const {
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  // Returns nullopt when no digits are present.
  std::optional<std::int64_t> parse_number() {
    if (!at_digit()) return std::nullopt;
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (at_digit()) {
      value = checked_add(checked_mul(value, 10), text_[pos_] - '0');
      ++pos_;
    }
    if (value < 0) throw ParseError("number too large", start);
    return value;
  }

  void parse_term(bool first) {
    std::int64_t sign = 1;
    if (text_[pos_] == '+' || text_[pos_] == '-') {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      skip_space();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos_);
    }
    const std::size_t coeff_start = pos_;
    std::optional<std::int64_t> coeff;
    try {
      coeff = parse_number();
    } catch (const ArithmeticOverflow&) {
      throw ParseError("coefficient too large", coeff_start);
    }
    skip_space();
    if (pos_ == text_.size() || (text_[pos_] != 'h' && text_[pos_] != 'e')) {
      // A bare "0" is the zero vector; a bare nonzero number has no basis.
      if (coeff && *coeff == 0) return;
      if (pos_ == text_.size())
        throw ParseError("expected basis symbol 'h' or 'eN'", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] +
                           "'",
                       pos_);
    }
    const std::int64_t c = sign * coeff.value_or(1);
    std::size_t index = 0;
    if (text_[pos_] == 'h') {
      ++pos_;
    } else {
      ++pos_;
      const std::size_t index_start = pos_;
      const auto idx = parse_number();
      if (!idx) throw ParseError("expected index after 'e'", pos_);
      if (*idx < 1 || *idx > r_)
        throw ParseError("basis index e" + std::to_string(*idx) +
                             " outside 1.." + std::to_string(r_),
                         index_start);
      index = static_cast<std::size_t>(*idx);
    }
    std::vector<std::int64_t> e(static_cast<std::size_t>(r_), 0);
    std::int64_t h = 0;
    if (index == 0) {
      h = c;
    } else {
      e[index - 1] = c;
    }
    v_ += LatticeVector(h, e);
  }

  std::string_view text_;
  int r_;
  LatticeVector v_;
  std::size_t pos_ = 0;
};

}  // namespace

LatticeVector parse_vector(std::string_view text, int r) {
  require_rank(r);
  return VectorParser(text, r).parse();
}

MarkedLattice make_marked_lattice(int r) {
  if (r < kMinRank || r > kMaxRank)
    throw DomainError("marked lattice requires 3 <= r <= 8, got " +
                      std::to_string(r));
  MarkedLattice m;
  m.r_ = r;
  m.kappa_ = 3 * LatticeVector::h(r);
  for (int i = 1; i <= r; ++i) m.kappa_ -= LatticeVector::e(r, i);
  for (int i = 1; i < r; ++i)
    m.simple_coroots_.push_back(LatticeVector::e(r, i) -
                                LatticeVector::e(r, i + 1));
  m.simple_coroots_.push_back(LatticeVector::h(r) - LatticeVector::e(r, 1) -
                              LatticeVector::e(r, 2) - LatticeVector::e(r, 3));
  return m;
}

const LatticeVector& MarkedLattice::simple_coroot(int i) const {
  if (i < 1 || i > r_)
    throw DomainError("simple coroot index " + std::to_string(i) +
                      " outside 1.." + std::to_string(r_));
  return simple_coroots_[static_cast<std::size_t>(i - 1)];
}

std::int64_t inner(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank())
    throw DomainError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                      std::to_string(b.rank()));
  const auto x = a.coefficients();
  const auto y = b.coefficients();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    sum = checked_add(sum, form_sign(i) * checked_mul(x[i], y[i]));
  return sum;
}

std::int64_t degree(const LatticeVector& v, const MarkedLattice& m) {
  return inner(v, m.kappa());
}

std::vector<std::int64_t> coroot_values(const LatticeVector& v,
                                        const MarkedLattice& m) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(m.r()));
  for (const auto& a : m.simple_coroots()) out.push_back(inner(v, a));
  return out;
}

namespace {

// Rows kappa, alpha_1..alpha_r of the map lambda -> (<lambda,kappa>,
// <lambda,alpha_i>) on h, e coordinates.
RationalMatrix pairing_matrix(const MarkedLattice& m) {
  RationalMatrix a;
  auto add_row = [&](const LatticeVector& v) {
    std::vector<Rational> row;
    const auto c = v.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j)
      row.emplace_back(form_sign(j) * c[j]);
    a.push_back(std::move(row));
  };
  add_row(m.kappa());
  for (const auto& s : m.simple_coroots()) add_row(s);
  return a;
}

RationalMatrix coroot_gram(const MarkedLattice& m) {
  const auto& s = m.simple_coroots();
  RationalMatrix g(s.size(), std::vector<Rational>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) g[i][j] = inner(s[i], s[j]);
  return g;
}

}  // namespace

DiscriminantData discriminant_data(const MarkedLattice& m) {
  const std::size_t r = static_cast<std::size_t>(m.r());
  DiscriminantData out;
  out.d = m.d();
  out.mu = LatticeVector::e(m.r(), m.r());

  // <mu2, alpha_j> = <mu, alpha_j> because kappa is orthogonal to Lambda.
  std::vector<Rational> rhs;
  for (auto v : coroot_values(out.mu, m)) rhs.emplace_back(v);
  const auto coords = solve(coroot_gram(m), rhs);
  if (!coords) throw InternalError("simple coroots are dependent");

  out.mu2.assign(r + 1, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    const Rational c = fractional_part((*coords)[i]);
    out.mu2_coroot_coords.push_back(c);
    const auto a = m.simple_coroots()[i].coefficients();
    for (std::size_t j = 0; j <= r; ++j) out.mu2[j] += c * a[j];
  }
  return out;
}

int discriminant_order(const DiscriminantData& data) {
  for (int n = 1;; ++n) {
    const bool integral =
        std::all_of(data.mu2_coroot_coords.begin(),
                    data.mu2_coroot_coords.end(),
                    [n](const Rational& c) { return is_integer(n * c); });
    if (integral) return n;
    if (n > data.d) throw InternalError("mu2 order exceeds d");
  }
}

LatticeVector lift_weight(std::span<const std::int64_t> psi,
                          const MarkedLattice& m) {
  const std::size_t r = static_cast<std::size_t>(m.r());
  if (psi.size() != r)
    throw DomainError("weight needs " + std::to_string(r) + " values, got " +
                      std::to_string(psi.size()));
  std::vector<Rational> rhs{Rational(0)};
  for (auto p : psi) rhs.emplace_back(p);
  const auto base = solve(pairing_matrix(m), rhs);
  if (!base) throw InternalError("pairing matrix is singular");

  // The solutions with these coroot values are base + (a/d) kappa.
  const auto kappa = m.kappa().coefficients();
  for (int a = 0; a < m.d(); ++a) {
    std::vector<std::int64_t> coeffs;
    bool integral = true;
    for (std::size_t j = 0; j <= r && integral; ++j) {
      const Rational x = (*base)[j] + Rational(a * kappa[j], m.d());
      if (!is_integer(x)) {
        integral = false;
        break;
      }
      coeffs.push_back(
          static_cast<std::int64_t>(boost::multiprecision::numerator(x)));
    }
    if (integral)
      return LatticeVector(coeffs[0],
                           std::span<const std::int64_t>(coeffs).subspan(1));
  }
  throw InternalError("no integral weight lift (unimodularity violated)");
}

std::optional<LatticeVector> lift_character(std::int64_t a,
                                            std::span<const std::int64_t> psi,
                                            const MarkedLattice& m) {
  const auto disc = discriminant_data(m);
  if (psi.size() != disc.mu2_coroot_coords.size())
    throw DomainError("character needs " + std::to_string(m.r()) +
                      " coroot values, got " + std::to_string(psi.size()));
  // psi(d mu2) through the simple-coroot coordinates of mu2.
  Rational at_mu2 = 0;
  for (std::size_t i = 0; i < psi.size(); ++i)
    at_mu2 += psi[i] * disc.mu2_coroot_coords[i];
  const Rational scaled = disc.d * at_mu2;
  if (!is_integer(scaled)) throw InternalError("d*mu2 not in Lambda");
  const BigInt rhs = -boost::multiprecision::numerator(scaled);
  BigInt diff = BigInt(a) - rhs;
  if (diff % disc.d != 0) return std::nullopt;

  LatticeVector lambda = lift_weight(psi, m);
  const std::int64_t shift = a - degree(lambda, m);
  if (shift % m.d() != 0)
    throw InternalError("lift_character congruence disagrees with lift");
  lambda += (shift / m.d()) * m.kappa();
  return lambda;
}

std::int64_t euler_char(const LatticeVector& v, const MarkedLattice& m) {
  const std::int64_t twice = checked_add(inner(v, v), degree(v, m));
  if (twice % 2 != 0)
    throw InternalError("kappa is not characteristic on this vector");
  return 1 + twice / 2;
}

}  // namespace dpz
