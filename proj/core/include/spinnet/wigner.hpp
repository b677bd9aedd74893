#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "spinnet/exactnum.hpp"

namespace spinnet {

/// Unordered triple of spins.
struct Triad {
  Spin j1, j2, j3;
};

/// |j1-j2| <= j3 <= j1+j2 and j1+j2+j3 integral.
bool triad_valid(Spin j1, Spin j2, Spin j3);
inline bool triad_valid(const Triad& t) { return triad_valid(t.j1, t.j2, t.j3); }

/// The symbol {a b x; c d y}. Entries are addressed in row-major order
/// a, b, x, c, d, y; column k holds (entry k, entry k+3).
struct SixJ {
  Spin a, b, x, c, d, y;

  static SixJ from_twice(const std::array<int, 6>& twice);
  static SixJ from_entries(const std::array<Spin, 6>& entries);

  std::array<Spin, 6> entries() const { return {a, b, x, c, d, y}; }
  std::array<int, 6> twice() const;
  /// (abx), (bcy), (cdx), (ady).
  std::array<Triad, 4> triads() const;
  bool valid() const;

  /// "{a b x; c d y}" with spins in n or n/2 form.
  std::string to_string() const;

  friend auto operator<=>(const SixJ&, const SixJ&) = default;
};

/// All x with (abx) and (cdx) valid, ascending.
std::vector<Spin> sixj_admissible_x(Spin a, Spin b, Spin c, Spin d);

/// Exact 6j value via the Racah single sum. Throws InvalidTriads when any of
/// the four triads fails. Results are memoized per thread.
SqrtRational sixj_value(const SixJ& s);

/// Zero for inadmissible symbols; for use inside finite sums.
SqrtRational sixj_or_zero(const SixJ& s);

/// The dimension weight 2j+1.
Rational sixj_dimension_weight(Spin j);

/// (-1)^n for n = twice_exponent/2. Throws PhaseParityError when n is
/// half-integral.
int phase_sign(long long twice_exponent);

/// Delta(abc)^2 = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)! for a valid triad.
Rational triangle_coefficient_squared(const Triad& t);

}  // namespace spinnet
