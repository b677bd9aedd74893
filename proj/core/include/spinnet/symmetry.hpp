#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "spinnet/wigner.hpp"

namespace spinnet {

/// Linear action on the six twice-spins of a symbol, scaled by two so that
/// the Regge half-sums stay integral: out[i] = sum_j matrix[i][j] * in[j] / 2.
using SymmetryAction = std::array<std::array<int, 6>, 6>;

/// One element of the 144-element symmetry group of the 6j symbol, written
/// as regge_coset_rep[regge_component] o classical(column_perm, flips).
struct SixJSymmetryElement {
  /// Output column k takes input column column_perm[k].
  std::array<int, 3> column_perm{0, 1, 2};
  /// Output column k has its upper and lower entries exchanged.
  /// Always an even number of flips.
  std::array<bool, 3> flips{false, false, false};
  /// Index 0..5 of the Regge coset; 0 is the classical subgroup.
  int regge_component = 0;
  SymmetryAction action{};

  /// Throws NegativeSpinAfterTransform when the image has a negative or
  /// non-integral twice-entry.
  SixJ apply(const SixJ& s) const;

  bool is_classical() const { return regge_component == 0; }
};

/// The classical action for a column permutation and flip set.
SymmetryAction classical_action(const std::array<int, 3>& column_perm,
                                const std::array<bool, 3>& flips);
/// Composition: (lhs o rhs)(v) = lhs(rhs(v)).
SymmetryAction compose(const SymmetryAction& lhs, const SymmetryAction& rhs);
SymmetryAction identity_action();
/// The Regge map on (a,b,c,d) with x and y fixed.
SymmetryAction regge_action();

/// The 24 tetrahedral symmetries.
const std::vector<SixJSymmetryElement>& classical_symmetries();
/// All 144 elements, generated by closure and checked for order at startup.
const std::vector<SixJSymmetryElement>& symmetry_group();

/// {a b x; c d y} -> {s-a s-b x; s-c s-d y}, s = (a+b+c+d)/2.
SixJ regge_transform(const SixJ& s);

/// Orbit under all 144 elements. Members are valid and share sixj_value.
std::set<SixJ> symmetry_orbit(const SixJ& s);

/// A quadrangle (a,b,c,d) in the ordering a <= b <= d <= s,
/// d-(b-a) <= c <= d+(b-a), with a the least of the eight parameters
/// a,b,c,d,s-a,s-b,s-c,s-d and c opposite to a.
struct CanonicalQuadruple {
  Spin a, b, c, d;
  Spin s;
  bool regge_applicable = true;

  friend bool operator==(const CanonicalQuadruple&, const CanonicalQuadruple&) = default;
};

/// True when (a,b,c,d) admits at least one admissible (x, y).
bool quadrangle_realizable(Spin a, Spin b, Spin c, Spin d);

/// Relabels (a,b,c,d) through the quadrangle-preserving part of the group
/// (dihedral moves of the a-b-c-d cycle and the Regge map). Ties go to the
/// lexicographically smallest twice-tuple. Throws UnrealizableQuadrangle.
CanonicalQuadruple canonicalize_quadruple(Spin a, Spin b, Spin c, Spin d);

/// x runs over triads (abx),(cdx); y over (ady),(bcy).
struct RunningRange {
  Spin x_min, x_max, y_min, y_max;
};
RunningRange running_range(const CanonicalQuadruple& q);

struct RegularizationReport {
  /// s <= d + (b - a).
  bool rsym3_holds = false;
  /// The largest r >= 3 with a + (r-2)/2 <= s, i.e. r = 2(s-a)+2; empty
  /// when that value is below 3.
  std::optional<int> max_r;
  /// 2*kappa = 2*(s-a).
  int kappa_twice = 0;
  /// r <= (2 x_min + 1) + (2 y_min + 1), evaluated only when max_r exists.
  std::optional<bool> rsym5_holds;
};
RegularizationReport regularization_bounds(const CanonicalQuadruple& q);

}  // namespace spinnet
