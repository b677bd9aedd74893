// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "spinnet/json.hpp"

using namespace spinnet;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

std::vector<SixJ> valid_symbols(int max_twice) {
  std::vector<SixJ> out;
  for (int a = 0; a <= max_twice; ++a)
    for (int b = 0; b <= max_twice; ++b)
      for (int x = 0; x <= max_twice; ++x)
        for (int c = 0; c <= max_twice; ++c)
          for (int d = 0; d <= max_twice; ++d)
            for (int y = 0; y <= max_twice; ++y) {
              const SixJ s = SixJ::from_twice({a, b, x, c, d, y});
              if (s.valid()) out.push_back(s);
            }
  return out;
}

std::vector<CanonicalQuadruple> canonical_quadruples(int max_twice) {
  std::set<std::array<int, 4>> seen;
  std::vector<CanonicalQuadruple> out;
  for (int a = 0; a <= max_twice; ++a)
    for (int b = 0; b <= max_twice; ++b)
      for (int c = 0; c <= max_twice; ++c)
        for (int d = 0; d <= max_twice; ++d) {
          const Spin A = Spin::from_twice(a), B = Spin::from_twice(b), C = Spin::from_twice(c),
                     D = Spin::from_twice(d);
          if (!quadrangle_realizable(A, B, C, D)) continue;
          const auto q = canonicalize_quadruple(A, B, C, D);
          if (seen.insert({q.a.twice(), q.b.twice(), q.c.twice(), q.d.twice()}).second) out.push_back(q);
        }
  return out;
}

std::string n(std::size_t v) { return std::to_string(v); }

Outcome classical_suite() {
  std::size_t images = 0, mismatches = 0;
  const auto symbols = valid_symbols(4);
  for (const SixJ& s : symbols) {
    const SqrtRational v = sixj_value(s);
    for (const auto& g : classical_symmetries()) {
      ++images;
      if (sixj_value(g.apply(s)) != v) ++mismatches;
    }
  }
  const bool group_ok = classical_symmetries().size() == 24;
  return {group_ok && mismatches == 0,
          n(symbols.size()) + " symbols, " + n(images) + " images, " + n(mismatches) + " mismatches"};
}

Outcome regge_suite() {
  std::size_t images = 0, mismatches = 0, bad_orbits = 0, undefined = 0;
  const auto symbols = valid_symbols(4);
  for (const SixJ& s : symbols) {
    const SqrtRational v = sixj_value(s);
    std::set<SixJ> orbit;
    for (const auto& g : symmetry_group()) {
      SixJ image;
      try {
        image = g.apply(s);
      } catch (const NegativeSpinAfterTransform&) {
        ++undefined;
        continue;
      }
      ++images;
      orbit.insert(image);
      if (!image.valid() || sixj_value(image) != v) ++mismatches;
    }
    if (144 % orbit.size() != 0) ++bad_orbits;
  }
  const bool group_ok = symmetry_group().size() == 144;
  return {group_ok && mismatches == 0 && bad_orbits == 0,
          n(symbols.size()) + " symbols, " + n(images) + " images, " + n(mismatches) + " value mismatches, " +
              n(bad_orbits) + " orbits not dividing 144, " + n(undefined) + " undefined images"};
}

Outcome grid_suite(GridKind kind, int max_twice) {
  const auto r = verify_grid(max_twice, kind);
  return {r.failures == 0 && r.instances > 0, r.summary()};
}

Outcome be_suite() {
  const auto weighted = verify_grid(4, GridKind::BE);
  VerifyOptions literal;
  literal.be_form = BEForm::Unweighted;
  const auto lit = verify_grid(4, GridKind::BE, literal);
  Outcome out{weighted.failures == 0 && weighted.instances > 0, "weighted form: " + weighted.summary()};
  out.notes.push_back("literal form (comparison only): " + lit.summary());
  return out;
}

Outcome range_suite() {
  std::size_t violations = 0;
  const auto qs = canonical_quadruples(8);
  for (const auto& q : qs) {
    const auto r = running_range(q);
    if (r.x_max.twice() - r.x_min.twice() != 2 * q.a.twice() || r.y_max.twice() - r.y_min.twice() != 2 * q.a.twice())
      ++violations;
  }
  return {violations == 0, n(qs.size()) + " canonical quadruples, " + n(violations) + " violations"};
}

Outcome regularization_suite() {
  std::size_t rsym3_fail = 0, rsym5_hold = 0, rsym5_fail = 0, no_r = 0;
  std::vector<std::string> examples;
  const auto qs = canonical_quadruples(8);
  for (const auto& q : qs) {
    const auto rep = regularization_bounds(q);
    if (!rep.rsym3_holds) {
      ++rsym3_fail;
      if (examples.size() < 3)
        examples.push_back("(" + q.a.to_string() + "," + q.b.to_string() + "," + q.c.to_string() + "," +
                           q.d.to_string() + ") s=" + q.s.to_string());
    }
    if (!rep.rsym5_holds)
      ++no_r;
    else if (*rep.rsym5_holds)
      ++rsym5_hold;
    else
      ++rsym5_fail;
  }
  Outcome out{rsym3_fail == 0, n(qs.size()) + " canonical quadruples, " + n(rsym3_fail) + " Rsym3 violations"};
  std::string ex;
  for (const auto& e : examples) ex += (ex.empty() ? "" : ", ") + e;
  if (!ex.empty()) out.notes.push_back("Rsym3 counterexamples: " + ex);
  out.notes.push_back("Rsym5: " + n(rsym5_hold) + " hold, " + n(rsym5_fail) + " fail, " + n(no_r) +
                      " without r >= 3");
  return out;
}

Outcome desargues_suite() {
  const auto d = build_desargues();
  bool ok = validate_configuration(d, ConfigurationSignature::symmetric(10, 3));
  for (PointId p : d.points()) ok = ok && d.lines_through(p).size() == 3;
  for (LineId l : d.lines()) ok = ok && d.points_on(l).size() == 3;
  std::size_t pairs = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      const auto qi = quadrangle_points(d, i), qj = quadrangle_points(d, j);
      std::vector<PointId> common;
      for (PointId p : qi)
        if (std::find(qj.begin(), qj.end(), p) != qj.end()) common.push_back(p);
      if (common.size() == 1 && d.labels().points.at(common[0]) == pair_tag(i, j, '(', ')')) ++pairs;
    }
  return {ok && pairs == 10, "(10_3) " + std::string(ok ? "valid" : "INVALID") + ", " + n(pairs) +
                                 "/10 quadrangle pairs meet in (ij)"};
}

Outcome space_dual_suite() {
  const auto c = space_dual_desargues(build_desargues());
  const auto f = c.f_vector();
  bool faces = true;
  for (std::size_t t = 0; t < c.triangles().size(); ++t)
    faces = faces && c.tetrahedra_containing_triangle(static_cast<int>(t)) == 2;
  const bool iso = isomorphic(cross_section(c), build_desargues());
  const bool fv = f == std::array<std::size_t, 4>{5, 10, 10, 5};
  return {fv && faces && iso, "f-vector (" + n(f[0]) + "," + n(f[1]) + "," + n(f[2]) + "," + n(f[3]) +
                                  "), triangles in 2 tetrahedra: " + (faces ? "yes" : "no") +
                                  ", cross-section isomorphic: " + (iso ? "yes" : "no")};
}

// Point triads of the Desargues configuration expressed through symbols.
std::vector<std::array<std::size_t, 3>> symbol_triads() {
  const auto d = build_desargues();
  std::vector<std::array<std::size_t, 3>> out;
  for (PointId p : d.points()) {
    std::array<std::size_t, 3> t{};
    std::size_t k = 0;
    for (LineId l : d.lines_through(p))
      for (std::size_t s = 0; s < kAllSymbols.size(); ++s)
        if (d.labels().lines.at(l) == symbol_line_tag(kAllSymbols[s])) t[k++] = s;
    out.push_back(t);
  }
  return out;
}

void enumerate_labelings(const std::vector<std::array<std::size_t, 3>>& triads, std::array<int, 10>& t,
                         std::size_t k, std::vector<std::array<int, 10>>& out) {
  if (k == 10) {
    out.push_back(t);
    return;
  }
  for (int v = 0; v <= 4; ++v) {
    t[k] = v;
    bool ok = true;
    for (const auto& tr : triads) {
      if (tr[0] > k || tr[1] > k || tr[2] > k) continue;
      if (tr[0] != k && tr[1] != k && tr[2] != k) continue;
      ok = ok && oracle::triad(t[tr[0]], t[tr[1]], t[tr[2]]);
    }
    if (ok) enumerate_labelings(triads, t, k + 1, out);
  }
}

SymbolSpins spins_of(const std::array<int, 10>& t) {
  SymbolSpins s;
  for (std::size_t i = 0; i < 10; ++i) s[kAllSymbols[i]] = Spin::from_twice(t[i]);
  return s;
}

Outcome transfer_suite() {
  const auto triads = symbol_triads();
  std::vector<std::array<int, 10>> all;
  std::array<int, 10> t{};
  enumerate_labelings(triads, t, 0, all);

  std::mt19937 rng(9001);
  std::vector<std::array<int, 10>> sample;
  std::sample(all.begin(), all.end(), std::back_inserter(sample), 1000, rng);

  const auto desargues = build_desargues();
  const auto complex = space_dual_desargues(desargues);
  std::size_t agree = 0, symbol_match = 0, checked = 0;

  auto check = [&](const SymbolSpins& spins) {
    ++checked;
    bool label_ok = true;
    try {
      label_desargues(spins);
    } catch (const TriadViolation&) {
      label_ok = false;
    }
    DesarguesSpinLabeling raw{desargues, {}, spins};
    for (Symbol s : kAllSymbols) raw.line_spins[*desargues.line_with_label(symbol_line_tag(s))] = spins.at(s);
    bool transfer_ok = true;
    std::optional<SimplexSpinLabeling> simplex;
    try {
      simplex = transfer_labeling(raw, complex);
    } catch (const TriadViolation&) {
      transfer_ok = false;
    }
    if (label_ok == transfer_ok) ++agree;
    if (label_ok && transfer_ok) {
      const auto q = raw.quadrangle_symbols();
      const auto T = simplex->tetrahedron_symbols();
      bool same = q == T;
      for (std::size_t i = 0; i < 5 && same; ++i) same = sixj_value(q[i]) == sixj_value(T[i]);
      if (same) ++symbol_match;
    }
    return label_ok;
  };

  std::size_t valid = 0;
  for (const auto& s : sample) valid += check(spins_of(s)) ? 1 : 0;
  // Unconstrained draws exercise the rejecting side of the equivalence.
  std::uniform_int_distribution<int> spin(0, 4);
  for (int i = 0; i < 1000; ++i) {
    std::array<int, 10> r;
    for (int& v : r) v = spin(rng);
    valid += check(spins_of(r)) ? 1 : 0;
  }
  return {valid >= 1000 && agree == checked && symbol_match == valid,
          n(all.size()) + " valid labelings enumerated, " + n(checked) + " checked (" + n(valid) +
              " valid), pass/pass agreement " + n(agree) + "/" + n(checked) + ", symbol matches " +
              n(symbol_match) + "/" + n(valid)};
}

std::vector<SixJ> classical_images_by_hand(const SixJ& s) {
  const auto e = s.entries();
  const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<SixJ> out;
  for (const auto& p : perms)
    for (int flip = 0; flip < 4; ++flip) {
      // flip upper/lower in no column or in two of the three columns
      std::array<bool, 3> f{false, false, false};
      if (flip > 0) f = {flip != 1, flip != 2, flip != 3};
      std::array<Spin, 6> img;
      for (int col = 0; col < 3; ++col) {
        Spin up = e[p[col]], lo = e[p[col] + 3];
        if (f[col]) std::swap(up, lo);
        img[col] = up;
        img[col + 3] = lo;
      }
      out.push_back(SixJ::from_entries(img));
    }
  return out;
}

Outcome oracle_suite() {
  std::size_t mismatches = 0;
  const auto symbols = valid_symbols(4);
  for (const SixJ& s : symbols)
    if (!oracle::same(oracle::sixj_by_contraction(s.twice()), sixj_value(s))) ++mismatches;

  std::size_t closed = 0, closed_mismatch = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c) {
        if (!oracle::triad(a, b, c)) continue;
        const auto expected = oracle::one_zero_closed_form(a, b, c);
        for (const SixJ& img : classical_images_by_hand(SixJ::from_twice({a, b, c, 0, c, b}))) {
          ++closed;
          if (!oracle::same(expected, sixj_value(img))) ++closed_mismatch;
        }
      }
  return {mismatches == 0 && closed_mismatch == 0,
          n(symbols.size()) + " symbols vs 3j contraction: " + n(mismatches) + " mismatches; " + n(closed) +
              " one-zero placements vs closed form: " + n(closed_mismatch) + " mismatches"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "classical symmetry (twice <= 4)", classical_suite},
      {2, "Regge symmetry, 144 images (twice <= 4)", regge_suite},
      {3, "orthogonality (twice <= 6)", [] { return grid_suite(GridKind::Orthogonality, 6); }},
      {4, "Biedenharn-Elliott (twice <= 4)", be_suite},
      {5, "range law (twice <= 8)", range_suite},
      {6, "regularization chain (twice <= 8)", regularization_suite},
      {7, "Desargues (10_3) structure", desargues_suite},
      {8, "space-dual round trip", space_dual_suite},
      {9, "labeling transfer (>= 1000 samples)", transfer_suite},
      {10, "oracle equivalence (twice <= 4)", oracle_suite},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s  %s: %s [%.1fs]\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    for (const auto& note : o.notes) std::printf("             %s\n", note.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
