#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "spinnet/identities.hpp"
#include "spinnet/projective.hpp"
#include "spinnet/symmetry.hpp"
#include "spinnet/wigner.hpp"

namespace spinnet {

/// The ten spin symbols carried by the lines of the Desargues configuration.
enum class Symbol { a, b, c, d, e, f, p, q, r, x };

inline constexpr std::array<Symbol, 10> kAllSymbols = {Symbol::a, Symbol::b, Symbol::c, Symbol::d,
                                                       Symbol::e, Symbol::f, Symbol::p, Symbol::q,
                                                       Symbol::r, Symbol::x};

std::string_view symbol_name(Symbol s);
std::optional<Symbol> parse_symbol(std::string_view name);

/// Bracket tag of the Desargues line carrying the symbol, e.g. x -> "[45]".
std::string_view symbol_line_tag(Symbol s);

using SymbolSpins = std::map<Symbol, Spin>;

/// Symbol assignment of the 6j attached to quadrangle Q_i (and to the
/// tetrahedron T_i of the dual 4-simplex), i = 1..5.
///   Q1 {a b x; c d p}  Q2 {c d x; e f q}  Q3 {e f x; b a r}
///   Q4 {p q r; f b c}  Q5 {p q r; e a d}
const std::array<std::array<Symbol, 6>, 5>& quadrangle_symbol_table();

/// The five 6j symbols at the given spins. Missing symbols throw Error.
std::array<SixJ, 5> quadrangle_symbols(const SymbolSpins& spins);

struct DesarguesSpinLabeling {
  IncidenceStructure structure;
  std::map<LineId, Spin> line_spins;
  SymbolSpins symbols;

  /// The five quadrangle symbols read off the lines of each Q_i.
  std::array<SixJ, 5> quadrangle_symbols() const;
  BEInstance be_instance() const;
};

/// Attaches the spins to build_desargues() and checks the triad at each of
/// the ten points. Throws TriadViolation listing every failing point.
DesarguesSpinLabeling label_desargues(const SymbolSpins& spins);

struct SimplexSpinLabeling {
  SimplicialComplex4 complex;
  /// Indexed like complex.edges().
  std::vector<Spin> edge_spins;

  /// Symbols of T1..T5 in the quadrangle arrangement, read from edge tags.
  std::array<SixJ, 5> tetrahedron_symbols() const;
};

/// Edge spins inherited through line -> line duality. Throws
/// LabelTransferMismatch when tags do not align and TriadViolation when a
/// triangle fails the triangle rule.
SimplexSpinLabeling transfer_labeling(const DesarguesSpinLabeling& labeling,
                                      const SimplicialComplex4& complex);

/// Product of the five quadrangle 6j values; no internal summation.
SqrtRational network_amplitude(const DesarguesSpinLabeling& labeling);

struct EnumeratedState {
  Spin x;
  SqrtRational amplitude;
};

/// Runs x over the admissible range of the reference quadrangle
/// (a,b,c,d) = q with e,f,p,q,r taken from `others`, returning the network
/// amplitude of each labeling that passes every triad. Throws
/// UnrealizableQuadrangle when no x survives.
std::vector<EnumeratedState> regularized_enumeration(const CanonicalQuadruple& q,
                                                     const SymbolSpins& others);

}  // namespace spinnet
