#include "spinnet/exactnum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

namespace spinnet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("empty integer");
  BigInt value = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw ParseError("bad digit in integer: " + std::string(s));
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

// ---- Spin -------------------------------------------------------------------

Spin Spin::from_twice(int twice) {
  if (twice < 0) throw InvalidSpin("negative twice-spin " + std::to_string(twice));
  return Spin(twice);
}

Spin spin_from_twice(int twice) { return Spin::from_twice(twice); }

Spin Spin::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  auto to_int = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw ParseError("not a spin: '" + std::string(text) + "'");
    return v;
  };
  if (slash == std::string_view::npos) {
    const int n = to_int(text);
    if (n < 0) throw InvalidSpin("negative spin " + std::string(text));
    return Spin(2 * n);
  }
  const int num = to_int(text.substr(0, slash));
  const int den = to_int(text.substr(slash + 1));
  if (den == 1) return from_twice(2 * num);
  if (den != 2) throw ParseError("spin denominator must be 1 or 2: '" + std::string(text) + "'");
  return from_twice(num);
}

std::string Spin::to_string() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

// ---- Rational ---------------------------------------------------------------

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  if (denominator < 0)
    value_ = value_type(-numerator, -denominator);
  else
    value_ = value_type(numerator, denominator);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

// ---- square-free splitting --------------------------------------------------

namespace {

// Brent's variant of Pollard rho; n is odd, composite and not a prime power
// of a small prime.
BigInt pollard_brent(const BigInt& n) {
  for (BigInt c = 1;; ++c) {
    BigInt y = 2, x, ys, g = 1, q = 1;
    const unsigned batch = 64;
    for (unsigned r = 1; g == 1; r *= 2) {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (unsigned i = 0; i < std::min(batch, r - k); ++i) {
          y = (y * y + c) % n;
          q = (q * (x > y ? x - y : y - x)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void prime_factors(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (boost::multiprecision::miller_rabin_test(n, 25)) {
    out.push_back(n);
    return;
  }
  const BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) {
    prime_factors(r, out);
    prime_factors(r, out);
    return;
  }
  const BigInt d = pollard_brent(n);
  prime_factors(d, out);
  prime_factors(n / d, out);
}

}  // namespace

SquareSplit split_square(const BigInt& m_in) {
  if (m_in <= 0) throw std::domain_error("split_square needs a positive integer");
  BigInt m = m_in;
  BigInt root = 1;
  BigInt squarefree = 1;
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) root *= p;
    if (e % 2 == 1) squarefree *= p;
  };
  strip(BigInt(2));
  // Radicands from recoupling sums only carry small primes; trial division
  // handles those, rho takes over for whatever large cofactor remains.
  constexpr unsigned kTrialLimit = 4096;
  for (unsigned p = 3; p < kTrialLimit && BigInt(p) * p * p <= m; p += 2) {
    if (m % p == 0) strip(BigInt(p));
  }
  if (m > 1) {
    const BigInt r = boost::multiprecision::sqrt(m);
    if (r * r == m) {
      root *= r;
      m = 1;
    }
  }
  if (m > 1) {
    std::vector<BigInt> primes;
    prime_factors(m, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
      std::size_t j = i;
      while (j < primes.size() && primes[j] == primes[i]) ++j;
      const std::size_t e = j - i;
      for (std::size_t k = 0; k < e / 2; ++k) root *= primes[i];
      if (e % 2 == 1) squarefree *= primes[i];
      i = j;
    }
  }
  return {root, squarefree};
}

// ---- SqrtRational -----------------------------------------------------------

SqrtRational::SqrtRational(Rational coeff, const Rational& radicand) {
  if (radicand.sign() < 0) throw std::domain_error("negative radicand");
  if (coeff.is_zero() || radicand.is_zero()) {
    coeff_ = Rational(0);
    radicand_ = Rational(1);
    return;
  }
  // sqrt(n/d) = sqrt(n*d)/d
  const BigInt n = radicand.numerator();
  const BigInt d = radicand.denominator();
  const SquareSplit split = split_square(n * d);
  coeff_ = coeff * Rational(split.root, d);
  radicand_ = Rational(split.squarefree);
}

double SqrtRational::to_double() const {
  return coeff_.to_double() * std::sqrt(radicand_.to_double());
}

std::string SqrtRational::to_string() const {
  return coeff_.to_string() + "*sqrt(" + radicand_.to_string() + ")";
}

SqrtRational SqrtRational::parse(std::string_view text) {
  text = trim(text);
  const auto star = text.find('*');
  if (star == std::string_view::npos) return SqrtRational(Rational::parse(text));
  std::string_view rest = trim(text.substr(star + 1));
  if (rest.substr(0, 5) != "sqrt(" || rest.back() != ')')
    throw ParseError("expected p/q*sqrt(r/s), got '" + std::string(text) + "'");
  const Rational coeff = Rational::parse(text.substr(0, star));
  const Rational radicand = Rational::parse(rest.substr(5, rest.size() - 6));
  if (radicand.sign() < 0) throw ParseError("negative radicand in '" + std::string(text) + "'");
  return SqrtRational(coeff, radicand);
}

SqrtRational SqrtRational::operator-() const {
  return SqrtRational(Normalized{}, -coeff_, radicand_);
}

SqrtRational operator*(const SqrtRational& u, const SqrtRational& v) {
  if (u.is_zero() || v.is_zero()) return SqrtRational();
  // Both radicands are square-free integers r1, r2 with g = gcd(r1, r2):
  // r1*r2 = g^2 * (r1/g)*(r2/g), and the cofactor is again square-free.
  const BigInt r1 = u.radicand_.numerator();
  const BigInt r2 = v.radicand_.numerator();
  const BigInt g = boost::multiprecision::gcd(r1, r2);
  return SqrtRational(SqrtRational::Normalized{}, u.coeff_ * v.coeff_ * Rational(g),
                      Rational(BigInt((r1 / g) * (r2 / g))));
}

SqrtRational operator*(const SqrtRational& u, const Rational& q) {
  if (u.is_zero() || q.is_zero()) return SqrtRational();
  return SqrtRational(SqrtRational::Normalized{}, u.coeff_ * q, u.radicand_);
}

SqrtRational operator+(const SqrtRational& u, const SqrtRational& v) {
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.radicand_ != v.radicand_)
    throw IncompatibleRadicands("cannot add " + u.to_string() + " and " + v.to_string());
  Rational sum = u.coeff_ + v.coeff_;
  if (sum.is_zero()) return SqrtRational();
  return SqrtRational(SqrtRational::Normalized{}, std::move(sum), u.radicand_);
}

SqrtRational sqrt_rational_mul(const SqrtRational& u, const SqrtRational& v) { return u * v; }
SqrtRational sqrt_rational_add(const SqrtRational& u, const SqrtRational& v) { return u + v; }

// ---- factorial memo ---------------------------------------------------------

namespace {

class FactorialTable {
 public:
  FactorialTable() : cap_(read_cap()) { table_.emplace_back(1); }

  BigInt get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    if (n >= cap_) return compute_uncached(n);
    std::unique_lock lock(mutex_);
    while (table_.size() <= n) {
      const auto k = static_cast<unsigned>(table_.size());
      table_.push_back(table_.back() * k);
    }
    return table_[n];
  }

  std::size_t size() {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  static std::size_t read_cap() {
    const char* env = std::getenv("SPINNET_FACT_CACHE");
    if (env == nullptr || *env == '\0') return 4096;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env) return 4096;
    return v == 0 ? 1 : static_cast<std::size_t>(v);
  }

  BigInt compute_uncached(unsigned n) {
    std::size_t start = 0;
    BigInt acc;
    {
      std::shared_lock lock(mutex_);
      start = table_.size() - 1;
      acc = table_.back();
    }
    for (std::size_t k = start + 1; k <= n; ++k) acc *= static_cast<unsigned>(k);
    return acc;
  }

  const std::size_t cap_;
  std::shared_mutex mutex_;
  std::deque<BigInt> table_;
};

FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

}  // namespace

BigInt factorial(unsigned n) { return factorial_table().get(n); }

std::size_t factorial_cache_size() { return factorial_table().size(); }

}  // namespace spinnet
