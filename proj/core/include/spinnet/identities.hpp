#pragma once

#include <array>
#include <optional>
#include <string>

#include "spinnet/wigner.hpp"

namespace spinnet {

/// Exact mismatch between the two sides of an identity.
struct CheckDiff {
  /// lhs - rhs when the radicands allow it.
  std::optional<SqrtRational> difference;
  std::string description;
};

struct ExactCheckResult {
  SqrtRational lhs;
  SqrtRational rhs;
  bool equal = false;
  CheckDiff diff;
  /// Which identity/form produced the result, e.g. "be-weighted".
  std::string form;
  /// Number of nonzero summands on the left-hand side.
  std::size_t terms = 0;
};

ExactCheckResult make_check_result(SqrtRational lhs, SqrtRational rhs, std::string form,
                                   std::size_t terms);

/// sum_x (2x+1) {a b x; c d y}{c d x; a b y'} against
/// delta(y,y') delta(ady) delta(bcy) / (2y'+1). Inadmissible input gives 0 = 0.
ExactCheckResult orthogonality_check(Spin a, Spin b, Spin c, Spin d, Spin y, Spin y_prime);

/// The nine fixed spins of the Biedenharn-Elliott identity
///   sum_x (-1)^(phi+x) (2x+1) {a b x; c d p}{c d x; e f q}{e f x; b a r}
///     = {p q r; f b c}{p q r; e a d},  phi = a+b+c+d+e+f+p+q+r.
struct BEInstance {
  Spin a, b, c, d, e, f, p, q, r;

  static BEInstance uniform(Spin j) { return {j, j, j, j, j, j, j, j, j}; }
  static BEInstance from_twice(const std::array<int, 9>& t);
  std::array<Spin, 9> spins() const { return {a, b, c, d, e, f, p, q, r}; }

  /// The three summed symbols at a given x.
  SixJ first(Spin x) const { return {a, b, x, c, d, p}; }
  SixJ second(Spin x) const { return {c, d, x, e, f, q}; }
  SixJ third(Spin x) const { return {e, f, x, b, a, r}; }
  /// The two symbols on the right-hand side.
  SixJ rhs_first() const { return {p, q, r, f, b, c}; }
  SixJ rhs_second() const { return {p, q, r, e, a, d}; }

  /// The triads of the three summed symbols that do not involve x:
  /// (bcp), (adp), (deq), (cfq), (fbr), (aer).
  std::array<Triad, 6> x_free_triads() const;
  bool valid() const;
  /// Values of x admissible in all three summed symbols, ascending.
  std::vector<Spin> summation_range() const;

  std::string to_string() const;
};

enum class BEForm {
  /// With the (2x+1) dimension weight (handbook convention).
  Weighted,
  /// Without the weight; kept for comparison only.
  Unweighted,
};

/// Throws InvalidInstance when an x-free triad fails and PhaseParityError if
/// phi + x is ever half-integral.
ExactCheckResult be_check(const BEInstance& inst, BEForm form = BEForm::Weighted);

/// The 2-3 move: three tetrahedra glued along x against two tetrahedra
/// sharing a face. Same sums as be_check (weighted form).
ExactCheckResult pachner_23_check(const BEInstance& inst);

/// The contraction of the BE identity with orthogonality in the label p:
///   sum_x sum_z (2x+1)(2z+1)(-1)^(phi+z) {a b x; c d p'}{a b x; c d p}
///       {a b z; c d p}{c d z; e f q}{e f z; b a r}
///     = delta(p,p') / (2p+1) {p q r; f b c}{p q r; e a d}.
/// Finite on both sides; no divergent vertex factor appears.
ExactCheckResult pachner_14_check(const BEInstance& inst, Spin p_prime);

}  // namespace spinnet
