#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the Racah-sum implementation or SqrtRational normalization.

#include <array>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "spinnet/exactnum.hpp"

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

/// sign * sqrt(square), square >= 0.
struct SignedSquare {
  int sign = 0;
  Q square = 0;
};

bool triad(int a, int b, int c);

/// Wigner 3j via the Racah single-sum formula; all arguments are twice-values.
SignedSquare threej(int j1, int j2, int j3, int m1, int m2, int m3);

/// 6j as a sum over magnetic numbers of four contracted 3j symbols.
SignedSquare sixj_by_contraction(const std::array<int, 6>& twice);

/// {a b c; 0 c b} = (-1)^(a+b+c) / sqrt((2b+1)(2c+1)).
SignedSquare one_zero_closed_form(int a, int b, int c);

bool same(const SignedSquare& o, const spinnet::SqrtRational& v);

/// x values (twice) admissible in (a b x) and (c d x), by scanning.
std::array<int, 2> scan_range(int a, int b, int c, int d);

/// The r at which s <= a + (r-2)/2 first holds, found by scanning upward from
/// r = 2; nullopt when that r is below 3.
std::optional<int> scan_saturating_r(int a_twice, int s_twice);

}  // namespace oracle
