#include "spinnet/network.hpp"

#include <algorithm>
#include <set>

namespace spinnet {

namespace {

struct SymbolInfo {
  Symbol symbol;
  std::string_view name;
  std::string_view tag;
};

// Line x is shared by Q1,Q2,Q3, so its complementary colors are [45]; the
// other tags follow the same rule from the quadrangle table.
constexpr std::array<SymbolInfo, 10> kSymbolInfo = {{
    {Symbol::a, "a", "[24]"},
    {Symbol::b, "b", "[25]"},
    {Symbol::c, "c", "[35]"},
    {Symbol::d, "d", "[34]"},
    {Symbol::e, "e", "[14]"},
    {Symbol::f, "f", "[15]"},
    {Symbol::p, "p", "[23]"},
    {Symbol::q, "q", "[13]"},
    {Symbol::r, "r", "[12]"},
    {Symbol::x, "x", "[45]"},
}};

const SymbolInfo& info(Symbol s) { return kSymbolInfo[static_cast<std::size_t>(s)]; }

Spin spin_of(const SymbolSpins& spins, Symbol s) {
  auto it = spins.find(s);
  if (it == spins.end())
    throw Error("spin for symbol '" + std::string(symbol_name(s)) + "' is not assigned");
  return it->second;
}

std::string triad_string(Spin a, Spin b, Spin c) {
  return "(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ")";
}

}  // namespace

std::string_view symbol_name(Symbol s) { return info(s).name; }

std::optional<Symbol> parse_symbol(std::string_view name) {
  for (const auto& i : kSymbolInfo) {
    if (i.name == name) return i.symbol;
  }
  return std::nullopt;
}

std::string_view symbol_line_tag(Symbol s) { return info(s).tag; }

const std::array<std::array<Symbol, 6>, 5>& quadrangle_symbol_table() {
  using S = Symbol;
  static const std::array<std::array<Symbol, 6>, 5> table = {{
      {S::a, S::b, S::x, S::c, S::d, S::p},
      {S::c, S::d, S::x, S::e, S::f, S::q},
      {S::e, S::f, S::x, S::b, S::a, S::r},
      {S::p, S::q, S::r, S::f, S::b, S::c},
      {S::p, S::q, S::r, S::e, S::a, S::d},
  }};
  return table;
}

std::array<SixJ, 5> quadrangle_symbols(const SymbolSpins& spins) {
  std::array<SixJ, 5> out;
  const auto& table = quadrangle_symbol_table();
  for (std::size_t i = 0; i < 5; ++i) {
    std::array<Spin, 6> e;
    for (std::size_t k = 0; k < 6; ++k) e[k] = spin_of(spins, table[i][k]);
    out[i] = SixJ::from_entries(e);
  }
  return out;
}

std::array<SixJ, 5> DesarguesSpinLabeling::quadrangle_symbols() const {
  std::array<SixJ, 5> out;
  const auto& table = quadrangle_symbol_table();
  for (std::size_t i = 0; i < 5; ++i) {
    const auto lines = quadrangle_lines(structure, static_cast<int>(i) + 1);
    std::array<Spin, 6> e;
    for (std::size_t k = 0; k < 6; ++k) {
      const auto line = structure.line_with_label(symbol_line_tag(table[i][k]));
      if (!line || std::find(lines.begin(), lines.end(), *line) == lines.end())
        throw MalformedLabels("symbol " + std::string(symbol_name(table[i][k])) +
                              " is not on a line of Q" + std::to_string(i + 1));
      e[k] = line_spins.at(*line);
    }
    out[i] = SixJ::from_entries(e);
  }
  return out;
}

BEInstance DesarguesSpinLabeling::be_instance() const {
  auto s = [&](Symbol sym) { return spin_of(symbols, sym); };
  return {s(Symbol::a), s(Symbol::b), s(Symbol::c), s(Symbol::d), s(Symbol::e),
          s(Symbol::f), s(Symbol::p), s(Symbol::q), s(Symbol::r)};
}

DesarguesSpinLabeling label_desargues(const SymbolSpins& spins) {
  DesarguesSpinLabeling labeling{build_desargues(), {}, {}};
  for (Symbol s : kAllSymbols) {
    const Spin j = spin_of(spins, s);
    const auto line = labeling.structure.line_with_label(symbol_line_tag(s));
    labeling.line_spins[*line] = j;
    labeling.symbols[s] = j;
  }

  std::vector<std::string> violations;
  for (PointId p : labeling.structure.points()) {
    const auto lines = labeling.structure.lines_through(p);
    const Spin j1 = labeling.line_spins.at(lines[0]);
    const Spin j2 = labeling.line_spins.at(lines[1]);
    const Spin j3 = labeling.line_spins.at(lines[2]);
    if (!triad_valid(j1, j2, j3))
      violations.push_back(labeling.structure.labels().points.at(p) + ": " + triad_string(j1, j2, j3));
  }
  if (!violations.empty()) throw TriadViolation(std::move(violations));
  return labeling;
}

std::array<SixJ, 5> SimplexSpinLabeling::tetrahedron_symbols() const {
  std::array<SixJ, 5> out;
  const auto& table = quadrangle_symbol_table();
  for (const auto& T : complex.tetrahedra()) {
    const std::size_t i = static_cast<std::size_t>(T.quadrangle - 1);
    std::array<Spin, 6> e;
    for (std::size_t k = 0; k < 6; ++k) {
      const auto edge = complex.edge_with_tag(symbol_line_tag(table[i][k]));
      if (!edge || std::find(T.edges.begin(), T.edges.end(), *edge) == T.edges.end())
        throw LabelTransferMismatch("symbol " + std::string(symbol_name(table[i][k])) +
                                    " is not an edge of " + T.tag);
      e[k] = edge_spins.at(static_cast<std::size_t>(*edge));
    }
    out[i] = SixJ::from_entries(e);
  }
  return out;
}

SimplexSpinLabeling transfer_labeling(const DesarguesSpinLabeling& labeling,
                                      const SimplicialComplex4& complex) {
  SimplexSpinLabeling out{complex, {}};
  for (const auto& edge : complex.edges()) {
    if (!edge.source_line)
      throw LabelTransferMismatch("edge " + edge.tag + " has no source line");
    auto tag = labeling.structure.labels().lines.find(*edge.source_line);
    if (tag == labeling.structure.labels().lines.end() || tag->second != edge.tag)
      throw LabelTransferMismatch("edge " + edge.tag + " does not match its source line");
    auto spin = labeling.line_spins.find(*edge.source_line);
    if (spin == labeling.line_spins.end())
      throw LabelTransferMismatch("no spin on line " + edge.tag);
    out.edge_spins.push_back(spin->second);
  }

  std::vector<std::string> violations;
  for (const auto& t : complex.triangles()) {
    const Spin j1 = out.edge_spins[t.edges[0]];
    const Spin j2 = out.edge_spins[t.edges[1]];
    const Spin j3 = out.edge_spins[t.edges[2]];
    if (!triad_valid(j1, j2, j3)) violations.push_back(t.tag + ": " + triad_string(j1, j2, j3));
  }
  if (!violations.empty()) throw TriadViolation(std::move(violations));

  // Each tetrahedron's faces must be exactly the triads of its symbol.
  const auto symbols = out.tetrahedron_symbols();
  for (const auto& T : complex.tetrahedra()) {
    std::multiset<std::multiset<int>> faces, triads;
    for (int t : T.triangles) {
      std::multiset<int> face;
      for (int e : complex.triangles()[t].edges) face.insert(e);
      faces.insert(face);
    }
    const auto& row = quadrangle_symbol_table()[static_cast<std::size_t>(T.quadrangle - 1)];
    // Triads (abx),(bcy),(cdx),(ady) in entry positions.
    constexpr std::array<std::array<int, 3>, 4> kTriadSlots = {{{0, 1, 2}, {1, 3, 5},
                                                                {3, 4, 2}, {0, 4, 5}}};
    for (const auto& slots : kTriadSlots) {
      std::multiset<int> triad;
      for (int k : slots) triad.insert(*complex.edge_with_tag(symbol_line_tag(row[k])));
      triads.insert(triad);
    }
    if (faces != triads)
      throw LabelTransferMismatch("faces of " + T.tag + " are not the triads of " +
                                  symbols[static_cast<std::size_t>(T.quadrangle - 1)].to_string());
  }
  return out;
}

SqrtRational network_amplitude(const DesarguesSpinLabeling& labeling) {
  SqrtRational product(Rational(1));
  for (const SixJ& s : labeling.quadrangle_symbols()) product = product * sixj_value(s);
  return product;
}

std::vector<EnumeratedState> regularized_enumeration(const CanonicalQuadruple& q,
                                                     const SymbolSpins& others) {
  const RunningRange range = running_range(q);
  std::vector<EnumeratedState> out;
  for (int t = range.x_min.twice(); t <= range.x_max.twice(); t += 2) {
    SymbolSpins spins = others;
    spins[Symbol::a] = q.a;
    spins[Symbol::b] = q.b;
    spins[Symbol::c] = q.c;
    spins[Symbol::d] = q.d;
    spins[Symbol::x] = Spin::from_twice(t);
    try {
      const auto labeling = label_desargues(spins);
      out.push_back({spins[Symbol::x], network_amplitude(labeling)});
    } catch (const TriadViolation&) {
      continue;
    }
  }
  if (out.empty())
    throw UnrealizableQuadrangle("no admissible x for the reference quadrangle with the given spins");
  return out;
}

}  // namespace spinnet
