#include "spinnet/wigner.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace spinnet {

bool triad_valid(Spin j1, Spin j2, Spin j3) {
  const int a = j1.twice(), b = j2.twice(), c = j3.twice();
  if ((a + b + c) % 2 != 0) return false;
  return std::abs(a - b) <= c && c <= a + b;
}

SixJ SixJ::from_twice(const std::array<int, 6>& t) {
  return {Spin::from_twice(t[0]), Spin::from_twice(t[1]), Spin::from_twice(t[2]),
          Spin::from_twice(t[3]), Spin::from_twice(t[4]), Spin::from_twice(t[5])};
}

SixJ SixJ::from_entries(const std::array<Spin, 6>& e) {
  return {e[0], e[1], e[2], e[3], e[4], e[5]};
}

std::array<int, 6> SixJ::twice() const {
  return {a.twice(), b.twice(), x.twice(), c.twice(), d.twice(), y.twice()};
}

std::array<Triad, 4> SixJ::triads() const {
  return {Triad{a, b, x}, Triad{b, c, y}, Triad{c, d, x}, Triad{a, d, y}};
}

bool SixJ::valid() const {
  const auto ts = triads();
  return std::all_of(ts.begin(), ts.end(), [](const Triad& t) { return triad_valid(t); });
}

std::string SixJ::to_string() const {
  return "{" + a.to_string() + " " + b.to_string() + " " + x.to_string() + "; " + c.to_string() +
         " " + d.to_string() + " " + y.to_string() + "}";
}

std::vector<Spin> sixj_admissible_x(Spin a, Spin b, Spin c, Spin d) {
  const int lo = std::max(std::abs(a.twice() - b.twice()), std::abs(c.twice() - d.twice()));
  const int hi = std::min(a.twice() + b.twice(), c.twice() + d.twice());
  std::vector<Spin> out;
  for (int t = lo; t <= hi; t += 2) {
    const Spin x = Spin::from_twice(t);
    if (triad_valid(a, b, x) && triad_valid(c, d, x)) out.push_back(x);
  }
  return out;
}

Rational triangle_coefficient_squared(const Triad& t) {
  const int a = t.j1.twice(), b = t.j2.twice(), c = t.j3.twice();
  const BigInt num = factorial((a + b - c) / 2) * factorial((a - b + c) / 2) *
                     factorial((-a + b + c) / 2);
  return Rational(num, factorial((a + b + c) / 2 + 1));
}

namespace {

SqrtRational racah_single_sum(const SixJ& s) {
  // {j1 j2 j3; j4 j5 j6} with triads (j1 j2 j3) (j1 j5 j6) (j4 j2 j6) (j4 j5 j3);
  // everything below is in integer units since each triad perimeter is integral.
  const int j1 = s.a.twice(), j2 = s.b.twice(), j3 = s.x.twice();
  const int j4 = s.c.twice(), j5 = s.d.twice(), j6 = s.y.twice();
  const std::array<int, 4> alpha = {(j1 + j2 + j3) / 2, (j1 + j5 + j6) / 2, (j4 + j2 + j6) / 2,
                                    (j4 + j5 + j3) / 2};
  const std::array<int, 3> beta = {(j1 + j2 + j4 + j5) / 2, (j2 + j3 + j5 + j6) / 2,
                                   (j3 + j1 + j6 + j4) / 2};
  const int zmin = *std::max_element(alpha.begin(), alpha.end());
  const int zmax = *std::min_element(beta.begin(), beta.end());

  Rational sum;
  for (int z = zmin; z <= zmax; ++z) {
    BigInt den = 1;
    for (int al : alpha) den *= factorial(static_cast<unsigned>(z - al));
    for (int be : beta) den *= factorial(static_cast<unsigned>(be - z));
    Rational term(factorial(static_cast<unsigned>(z + 1)), den);
    if (z % 2 != 0) term = -term;
    sum += term;
  }

  Rational radicand(1);
  for (const Triad& t : s.triads()) radicand *= triangle_coefficient_squared(t);
  return SqrtRational(sum, radicand);
}

std::uint64_t memo_key(const SixJ& s) {
  std::uint64_t key = 0;
  for (int t : s.twice()) key = (key << 10) | static_cast<std::uint64_t>(t & 0x3ff);
  return key;
}

constexpr std::size_t kMemoLimit = 1u << 18;

}  // namespace

SqrtRational sixj_value(const SixJ& s) {
  if (!s.valid()) throw InvalidTriads("inadmissible 6j symbol " + s.to_string());
  const auto tw = s.twice();
  const bool memoizable = std::all_of(tw.begin(), tw.end(), [](int t) { return t < 1024; });
  if (!memoizable) return racah_single_sum(s);

  thread_local std::unordered_map<std::uint64_t, SqrtRational> memo;
  const auto key = memo_key(s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  SqrtRational value = racah_single_sum(s);
  if (memo.size() < kMemoLimit) memo.emplace(key, value);
  return value;
}

SqrtRational sixj_or_zero(const SixJ& s) {
  if (!s.valid()) return SqrtRational();
  return sixj_value(s);
}

Rational sixj_dimension_weight(Spin j) { return Rational(j.dimension()); }

int phase_sign(long long twice_exponent) {
  if (twice_exponent % 2 != 0)
    throw PhaseParityError("phase (-1)^n with half-integer n = " + std::to_string(twice_exponent) +
                           "/2");
  const long long n = twice_exponent / 2;
  return (n % 2 == 0) ? 1 : -1;
}

}  // namespace spinnet
