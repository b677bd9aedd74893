#include "spinnet/symmetry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spinnet {

namespace {

// Entry index for (row, column) with row 0 = upper, 1 = lower.
constexpr int slot(int row, int column) { return row * 3 + column; }

SymmetryAction zero_action() {
  SymmetryAction m{};
  for (auto& row : m) row.fill(0);
  return m;
}

std::array<int, 6> act(const SymmetryAction& m, const std::array<int, 6>& v, bool& ok) {
  std::array<int, 6> out{};
  ok = true;
  for (int i = 0; i < 6; ++i) {
    int acc = 0;
    for (int j = 0; j < 6; ++j) acc += m[i][j] * v[j];
    if (acc % 2 != 0 || acc < 0) ok = false;
    out[i] = acc / 2;
  }
  return out;
}

struct GroupTables {
  std::vector<SixJSymmetryElement> classical;
  std::vector<SixJSymmetryElement> full;
};

GroupTables build_tables() {
  GroupTables tables;

  std::array<int, 3> perm{0, 1, 2};
  const std::array<std::array<bool, 3>, 4> flip_sets = {{{false, false, false},
                                                         {true, true, false},
                                                         {true, false, true},
                                                         {false, true, true}}};
  do {
    for (const auto& flips : flip_sets) {
      SixJSymmetryElement e;
      e.column_perm = perm;
      e.flips = flips;
      e.regge_component = 0;
      e.action = classical_action(perm, flips);
      tables.classical.push_back(e);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Closure of {classical generators, Regge map}.
  std::vector<SymmetryAction> generators;
  for (const auto& e : tables.classical) generators.push_back(e.action);
  generators.push_back(regge_action());

  std::set<SymmetryAction> seen = {identity_action()};
  std::vector<SymmetryAction> frontier = {identity_action()};
  while (!frontier.empty()) {
    std::vector<SymmetryAction> next;
    for (const auto& g : frontier) {
      for (const auto& h : generators) {
        const SymmetryAction gh = compose(h, g);
        if (seen.insert(gh).second) next.push_back(gh);
      }
    }
    frontier = std::move(next);
  }

  // Left cosets g*C of the classical subgroup; coset 0 is C itself, the
  // rest are ordered by their smallest member.
  std::map<SymmetryAction, SymmetryAction> rep_of;  // element -> coset representative
  std::vector<SymmetryAction> reps;
  auto add_coset = [&](const SymmetryAction& g) {
    std::vector<SymmetryAction> members;
    for (const auto& c : tables.classical) members.push_back(compose(g, c.action));
    const SymmetryAction rep = g;
    for (const auto& m : members) rep_of.emplace(m, rep);
    reps.push_back(rep);
  };
  add_coset(identity_action());
  for (const auto& g : seen) {  // std::set iterates in lexicographic order
    if (!rep_of.contains(g)) add_coset(g);
  }

  for (const auto& g : seen) {
    const SymmetryAction& rep = rep_of.at(g);
    const auto k = std::find(reps.begin(), reps.end(), rep) - reps.begin();
    // g = rep o c  =>  find the classical c with rep o c == g.
    for (const auto& c : tables.classical) {
      if (compose(rep, c.action) == g) {
        SixJSymmetryElement e = c;
        e.regge_component = static_cast<int>(k);
        e.action = g;
        tables.full.push_back(e);
        break;
      }
    }
  }
  if (tables.full.size() != seen.size())
    throw std::logic_error("symmetry group decomposition failed");
  return tables;
}

const GroupTables& tables() {
  static const GroupTables t = build_tables();
  return t;
}

}  // namespace

SymmetryAction identity_action() {
  SymmetryAction m = zero_action();
  for (int i = 0; i < 6; ++i) m[i][i] = 2;
  return m;
}

SymmetryAction classical_action(const std::array<int, 3>& column_perm,
                                const std::array<bool, 3>& flips) {
  SymmetryAction m = zero_action();
  for (int k = 0; k < 3; ++k) {
    for (int row = 0; row < 2; ++row) {
      const int src_row = flips[k] ? 1 - row : row;
      m[slot(row, k)][slot(src_row, column_perm[k])] = 2;
    }
  }
  return m;
}

SymmetryAction regge_action() {
  // a' = (-a+b+c+d)/2 and cyclically; x and y fixed. Slots: a0 b1 x2 c3 d4 y5.
  SymmetryAction m = zero_action();
  const std::array<int, 4> quad = {0, 1, 3, 4};
  for (int i : quad) {
    for (int j : quad) m[i][j] = (i == j) ? -1 : 1;
  }
  m[2][2] = 2;
  m[5][5] = 2;
  return m;
}

SymmetryAction compose(const SymmetryAction& lhs, const SymmetryAction& rhs) {
  SymmetryAction out = zero_action();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      int acc = 0;
      for (int k = 0; k < 6; ++k) acc += lhs[i][k] * rhs[k][j];
      if (acc % 2 != 0) throw std::logic_error("symmetry composition left the half-integer lattice");
      out[i][j] = acc / 2;  // each factor carries a scale of 2
    }
  }
  return out;
}

SixJ SixJSymmetryElement::apply(const SixJ& s) const {
  bool ok = true;
  const auto out = act(action, s.twice(), ok);
  if (!ok)
    throw NegativeSpinAfterTransform("symmetry image of " + s.to_string() +
                                     " is not a spin tuple");
  return SixJ::from_twice(out);
}

const std::vector<SixJSymmetryElement>& classical_symmetries() { return tables().classical; }
const std::vector<SixJSymmetryElement>& symmetry_group() { return tables().full; }

SixJ regge_transform(const SixJ& s) {
  const int sum = s.a.twice() + s.b.twice() + s.c.twice() + s.d.twice();
  if (sum % 2 != 0)
    throw NegativeSpinAfterTransform("semi-perimeter of " + s.to_string() + " is not a spin");
  const int half = sum / 2;
  const std::array<int, 6> out = {half - s.a.twice(), half - s.b.twice(), s.x.twice(),
                                  half - s.c.twice(), half - s.d.twice(), s.y.twice()};
  for (int t : out) {
    if (t < 0)
      throw NegativeSpinAfterTransform("Regge image of " + s.to_string() + " has a negative entry");
  }
  return SixJ::from_twice(out);
}

std::set<SixJ> symmetry_orbit(const SixJ& s) {
  std::set<SixJ> orbit;
  for (const auto& g : symmetry_group()) orbit.insert(g.apply(s));
  return orbit;
}

bool quadrangle_realizable(Spin a, Spin b, Spin c, Spin d) {
  if (sixj_admissible_x(a, b, c, d).empty()) return false;
  return !sixj_admissible_x(a, d, c, b).empty();  // y: (ady), (bcy)
}

namespace {

// Elements that keep the (x, y) column in place as a set and act on the
// quadruple alone.
const std::vector<SymmetryAction>& quadrangle_moves() {
  static const std::vector<SymmetryAction> moves = [] {
    std::vector<SymmetryAction> out;
    for (const auto& g : symmetry_group()) {
      const auto& m = g.action;
      bool keeps = true;
      for (int i : {0, 1, 3, 4}) keeps = keeps && m[i][2] == 0 && m[i][5] == 0;
      for (int i : {2, 5}) {
        for (int j : {0, 1, 3, 4}) keeps = keeps && m[i][j] == 0;
      }
      if (keeps) out.push_back(m);
    }
    return out;
  }();
  return moves;
}

bool satisfies_canonical_order(const std::array<int, 4>& q) {
  const auto [a, b, c, d] = q;
  const int sum = a + b + c + d;
  if (sum % 2 != 0) return false;
  const int s = sum / 2;
  const int least = std::min({a, b, c, d, s - a, s - b, s - c, s - d});
  return a == least && a <= b && b <= d && d <= s && d - (b - a) <= c && c <= d + (b - a);
}

}  // namespace

CanonicalQuadruple canonicalize_quadruple(Spin a, Spin b, Spin c, Spin d) {
  if (!quadrangle_realizable(a, b, c, d))
    throw UnrealizableQuadrangle("no admissible (x, y) for quadrangle (" + a.to_string() + ", " +
                                 b.to_string() + ", " + c.to_string() + ", " + d.to_string() + ")");
  const int sum = a.twice() + b.twice() + c.twice() + d.twice();
  const bool regge_applicable = sum % 2 == 0;

  std::optional<std::array<int, 4>> best;
  const std::array<int, 6> v = {a.twice(), b.twice(), 0, c.twice(), d.twice(), 0};
  for (const auto& m : quadrangle_moves()) {
    bool ok = true;
    const auto image = act(m, v, ok);
    if (!ok) continue;
    const bool classical = std::all_of(m.begin(), m.end(), [](const auto& row) {
      return std::all_of(row.begin(), row.end(), [](int e) { return e == 0 || e == 2; });
    });
    if (!regge_applicable && !classical) continue;
    const std::array<int, 4> q = {image[0], image[1], image[3], image[4]};
    if (satisfies_canonical_order(q) && (!best || q < *best)) best = q;
  }
  if (!best)
    throw std::logic_error("no canonical image for quadrangle (" + a.to_string() + ", " +
                           b.to_string() + ", " + c.to_string() + ", " + d.to_string() + ")");
  const auto& q = *best;
  return {Spin::from_twice(q[0]), Spin::from_twice(q[1]), Spin::from_twice(q[2]),
          Spin::from_twice(q[3]), Spin::from_twice((q[0] + q[1] + q[2] + q[3]) / 2),
          regge_applicable};
}

RunningRange running_range(const CanonicalQuadruple& q) {
  const auto xs = sixj_admissible_x(q.a, q.b, q.c, q.d);
  const auto ys = sixj_admissible_x(q.a, q.d, q.c, q.b);
  if (xs.empty() || ys.empty())
    throw UnrealizableQuadrangle("empty running range");
  return {xs.front(), xs.back(), ys.front(), ys.back()};
}

RegularizationReport regularization_bounds(const CanonicalQuadruple& q) {
  RegularizationReport report;
  const int a = q.a.twice(), b = q.b.twice(), d = q.d.twice(), s = q.s.twice();
  report.rsym3_holds = s <= d + (b - a);
  report.kappa_twice = s - a;
  const int r = (s - a) + 2;  // r = 2(s-a) + 2 in spin units
  if (r >= 3) {
    report.max_r = r;
    const RunningRange range = running_range(q);
    report.rsym5_holds = r <= (range.x_min.dimension() + range.y_min.dimension());
  }
  return report;
}

}  // namespace spinnet
