#include <gtest/gtest.h>

#include <set>

#include "spinnet/network.hpp"

using namespace spinnet;

namespace {

SymbolSpins uniform(int twice) {
  SymbolSpins s;
  for (Symbol k : kAllSymbols) s[k] = Spin::from_twice(twice);
  return s;
}

SymbolSpins from_twice(const std::array<int, 10>& t) {
  SymbolSpins s;
  for (std::size_t i = 0; i < 10; ++i) s[kAllSymbols[i]] = Spin::from_twice(t[i]);
  return s;
}

// a b c d e f p q r x
const std::array<int, 10> kGeneric = {1, 2, 1, 2, 1, 2, 1, 1, 2, 1};

}  // namespace

TEST(Symbols, NamesAndTags) {
  EXPECT_EQ(symbol_name(Symbol::x), "x");
  EXPECT_EQ(parse_symbol("q"), Symbol::q);
  EXPECT_FALSE(parse_symbol("z").has_value());
  std::set<std::string_view> tags;
  for (Symbol s : kAllSymbols) tags.insert(symbol_line_tag(s));
  EXPECT_EQ(tags.size(), 10u);
  EXPECT_EQ(symbol_line_tag(Symbol::x), "[45]");
}

TEST(Symbols, TableMatchesGeometry) {
  // Every symbol of Q_i sits on a line of Q_i, and each 6j triad is the
  // set of lines through one point of Q_i.
  const auto d = build_desargues();
  const auto& table = quadrangle_symbol_table();
  for (int i = 1; i <= 5; ++i) {
    const auto lines = quadrangle_lines(d, i);
    std::set<std::multiset<LineId>> point_triads;
    for (PointId p : quadrangle_points(d, i)) {
      const auto through = d.lines_through(p);
      std::multiset<LineId> t;
      for (LineId l : through)
        if (std::find(lines.begin(), lines.end(), l) != lines.end()) t.insert(l);
      point_triads.insert(t);
    }
    const auto& row = table[static_cast<std::size_t>(i - 1)];
    for (const auto& slots : std::array<std::array<int, 3>, 4>{{{0, 1, 2}, {1, 3, 5}, {3, 4, 2}, {0, 4, 5}}}) {
      std::multiset<LineId> t;
      for (int k : slots) t.insert(*d.line_with_label(symbol_line_tag(row[k])));
      EXPECT_TRUE(point_triads.contains(t)) << "Q" << i;
    }
  }
}

TEST(Label, Uniform) {
  EXPECT_NO_THROW(label_desargues(uniform(0)));
  const auto l = label_desargues(uniform(2));
  for (const auto& s : l.quadrangle_symbols()) EXPECT_EQ(s, SixJ::from_twice({2, 2, 2, 2, 2, 2}));
}

TEST(Label, ViolationListsPoints) {
  auto spins = uniform(0);
  spins[Symbol::a] = Spin::from_twice(2);
  try {
    label_desargues(spins);
    FAIL() << "expected TriadViolation";
  } catch (const TriadViolation& e) {
    std::set<std::string> points;
    for (const auto& v : e.violations()) points.insert(v.substr(0, 4));
    EXPECT_EQ(points, (std::set<std::string>{"(13)", "(15)", "(35)"}));
  }
}

TEST(Label, MissingSymbol) {
  auto spins = uniform(2);
  spins.erase(Symbol::r);
  EXPECT_THROW(label_desargues(spins), Error);
}

TEST(Label, GenericSymbolsMatchTable) {
  const auto spins = from_twice(kGeneric);
  const auto l = label_desargues(spins);
  EXPECT_EQ(l.quadrangle_symbols(), quadrangle_symbols(spins));
  const auto be = l.be_instance();
  EXPECT_EQ(be.first(spins.at(Symbol::x)), quadrangle_symbols(spins)[0]);
  EXPECT_EQ(be.rhs_second(), quadrangle_symbols(spins)[4]);
}

TEST(Transfer, ZeroAndOnes) {
  const auto c = space_dual_desargues(build_desargues());
  const auto zero = transfer_labeling(label_desargues(uniform(0)), c);
  for (Spin s : zero.edge_spins) EXPECT_EQ(s.twice(), 0);
  const auto ones = transfer_labeling(label_desargues(uniform(2)), c);
  for (const auto& s : ones.tetrahedron_symbols()) EXPECT_EQ(s, SixJ::from_twice({2, 2, 2, 2, 2, 2}));
}

TEST(Transfer, GenericMatchesQuadrangles) {
  const auto l = label_desargues(from_twice(kGeneric));
  const auto t = transfer_labeling(l, space_dual_desargues(l.structure));
  EXPECT_EQ(t.tetrahedron_symbols(), l.quadrangle_symbols());
}

TEST(Transfer, MismatchedTags) {
  const auto l = label_desargues(uniform(2));
  const auto permuted = space_dual_desargues(permute_quadrangle_colors(build_desargues(), {2, 1, 3, 4, 5}));
  EXPECT_THROW(transfer_labeling(l, permuted), LabelTransferMismatch);
}

TEST(Amplitude, Examples) {
  EXPECT_EQ(network_amplitude(label_desargues(uniform(0))), SqrtRational(Rational(1)));
  EXPECT_EQ(network_amplitude(label_desargues(uniform(2))).to_string(), "1/7776*sqrt(1/1)");
  auto bad = uniform(0);
  bad[Symbol::a] = Spin::from_twice(2);
  EXPECT_THROW(network_amplitude(label_desargues(bad)), TriadViolation);
}

TEST(RegularizedEnumeration, Zero) {
  const auto q = canonicalize_quadruple(Spin(), Spin(), Spin(), Spin());
  const auto states = regularized_enumeration(q, uniform(0));
  ASSERT_EQ(states.size(), 1u);
  EXPECT_EQ(states[0].x.twice(), 0);
  EXPECT_EQ(states[0].amplitude, SqrtRational(Rational(1)));
}

TEST(RegularizedEnumeration, Ones) {
  const Spin one = Spin::from_twice(2);
  const auto q = canonicalize_quadruple(one, one, one, one);
  const auto states = regularized_enumeration(q, uniform(2));
  ASSERT_EQ(states.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(states[i].x.twice(), 2 * static_cast<int>(i));
  auto spins = uniform(2);
  spins[Symbol::x] = Spin();
  EXPECT_EQ(states[0].amplitude, network_amplitude(label_desargues(spins)));
}

TEST(RegularizedEnumeration, NothingSurvives) {
  const auto q = canonicalize_quadruple(Spin::from_twice(2), Spin::from_twice(4), Spin::from_twice(4),
                                        Spin::from_twice(6));
  EXPECT_THROW(regularized_enumeration(q, uniform(2)), UnrealizableQuadrangle);
}
