#include "spinnet/identities.hpp"

#include <algorithm>

namespace spinnet {

ExactCheckResult make_check_result(SqrtRational lhs, SqrtRational rhs, std::string form,
                                   std::size_t terms) {
  ExactCheckResult result;
  result.equal = lhs == rhs;
  try {
    result.diff.difference = lhs - rhs;
  } catch (const IncompatibleRadicands&) {
    result.diff.difference.reset();
  }
  if (!result.equal) {
    result.diff.description = "lhs " + lhs.to_string() + " != rhs " + rhs.to_string();
  }
  result.lhs = std::move(lhs);
  result.rhs = std::move(rhs);
  result.form = std::move(form);
  result.terms = terms;
  return result;
}

ExactCheckResult orthogonality_check(Spin a, Spin b, Spin c, Spin d, Spin y, Spin y_prime) {
  SqrtRational lhs;
  std::size_t terms = 0;
  for (Spin x : sixj_admissible_x(a, b, c, d)) {
    const SqrtRational term = sixj_or_zero({a, b, x, c, d, y}) *
                              sixj_or_zero({c, d, x, a, b, y_prime}) * sixj_dimension_weight(x);
    if (term.is_zero()) continue;
    lhs += term;
    ++terms;
  }
  SqrtRational rhs;
  if (y == y_prime && triad_valid(a, d, y) && triad_valid(b, c, y))
    rhs = SqrtRational(Rational(1) / sixj_dimension_weight(y_prime));
  return make_check_result(std::move(lhs), std::move(rhs), "orthogonality", terms);
}

BEInstance BEInstance::from_twice(const std::array<int, 9>& t) {
  return {Spin::from_twice(t[0]), Spin::from_twice(t[1]), Spin::from_twice(t[2]),
          Spin::from_twice(t[3]), Spin::from_twice(t[4]), Spin::from_twice(t[5]),
          Spin::from_twice(t[6]), Spin::from_twice(t[7]), Spin::from_twice(t[8])};
}

std::array<Triad, 6> BEInstance::x_free_triads() const {
  return {Triad{b, c, p}, Triad{a, d, p}, Triad{d, e, q},
          Triad{c, f, q}, Triad{f, b, r}, Triad{a, e, r}};
}

bool BEInstance::valid() const {
  const auto ts = x_free_triads();
  return std::all_of(ts.begin(), ts.end(), [](const Triad& t) { return triad_valid(t); });
}

std::vector<Spin> BEInstance::summation_range() const {
  std::vector<Spin> out;
  for (Spin x : sixj_admissible_x(a, b, c, d)) {
    if (triad_valid(e, f, x)) out.push_back(x);
  }
  return out;
}

std::string BEInstance::to_string() const {
  std::string out;
  const char* names = "abcdefpqr";
  const auto s = spins();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += names[i];
    out += '=';
    out += s[i].to_string();
  }
  return out;
}

namespace {

long long phi_twice(const BEInstance& inst) {
  long long sum = 0;
  for (Spin s : inst.spins()) sum += s.twice();
  return sum;
}

void require_valid(const BEInstance& inst) {
  if (inst.valid()) return;
  std::string failing;
  for (const Triad& t : inst.x_free_triads()) {
    if (!triad_valid(t))
      failing += " (" + t.j1.to_string() + "," + t.j2.to_string() + "," + t.j3.to_string() + ")";
  }
  throw InvalidInstance("BE instance " + inst.to_string() + " has invalid triads:" + failing);
}

struct BESums {
  SqrtRational lhs;
  SqrtRational rhs;
  std::size_t terms = 0;
};

BESums be_sums(const BEInstance& inst, BEForm form) {
  require_valid(inst);
  BESums out;
  const long long phi = phi_twice(inst);
  for (Spin x : inst.summation_range()) {
    const int sign = phase_sign(phi + x.twice());
    SqrtRational term =
        sixj_value(inst.first(x)) * sixj_value(inst.second(x)) * sixj_value(inst.third(x));
    if (form == BEForm::Weighted) term = term * sixj_dimension_weight(x);
    if (term.is_zero()) continue;
    out.lhs += sign > 0 ? term : -term;
    ++out.terms;
  }
  out.rhs = sixj_or_zero(inst.rhs_first()) * sixj_or_zero(inst.rhs_second());
  return out;
}

}  // namespace

ExactCheckResult be_check(const BEInstance& inst, BEForm form) {
  BESums sums = be_sums(inst, form);
  return make_check_result(std::move(sums.lhs), std::move(sums.rhs),
                           form == BEForm::Weighted ? "be-weighted" : "be-literal", sums.terms);
}

ExactCheckResult pachner_23_check(const BEInstance& inst) {
  BESums sums = be_sums(inst, BEForm::Weighted);
  return make_check_result(std::move(sums.lhs), std::move(sums.rhs), "pachner-2-3", sums.terms);
}

ExactCheckResult pachner_14_check(const BEInstance& inst, Spin p_prime) {
  require_valid(inst);
  const long long phi = phi_twice(inst);
  const auto outer = sixj_admissible_x(inst.a, inst.b, inst.c, inst.d);
  const auto inner = inst.summation_range();

  SqrtRational lhs;
  std::size_t terms = 0;
  for (Spin x : outer) {
    const SqrtRational contracted = sixj_or_zero({inst.a, inst.b, x, inst.c, inst.d, p_prime}) *
                                    sixj_or_zero(inst.first(x)) * sixj_dimension_weight(x);
    if (contracted.is_zero()) continue;
    for (Spin z : inner) {
      const int sign = phase_sign(phi + z.twice());
      SqrtRational term = contracted * sixj_value(inst.first(z)) * sixj_value(inst.second(z)) *
                          sixj_value(inst.third(z)) * sixj_dimension_weight(z);
      if (term.is_zero()) continue;
      lhs += sign > 0 ? term : -term;
      ++terms;
    }
  }

  SqrtRational rhs;
  if (p_prime == inst.p) {
    rhs = sixj_or_zero(inst.rhs_first()) * sixj_or_zero(inst.rhs_second()) *
          (Rational(1) / sixj_dimension_weight(inst.p));
  }
  return make_check_result(std::move(lhs), std::move(rhs), "pachner-1-4", terms);
}

}  // namespace spinnet
