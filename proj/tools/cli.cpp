#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinnet/json.hpp"

namespace spinnet::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string output;
  bool twice = false;
  std::string dot_mode = "bipartite";
  std::vector<std::string> spins;
  std::string input;

  bool all = false;
  int max_twice = 2;
  int ceiling = 6;
  unsigned jobs = 1;
  bool sorted = false;
  bool literal_form = false;
  std::string move = "2-3";
  std::string p_prime;

  std::string assignments;
  std::string what = "desargues";
  bool enumerate = false;
};

struct UsageError : Error {
  using Error::Error;
};

Spin parse_spin(const std::string& text, bool twice) {
  if (!twice) return Spin::parse(text);
  std::size_t used = 0;
  int t = 0;
  try {
    t = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InvalidSpin("'" + text + "' is not a twice-spin integer");
  return Spin::from_twice(t);
}

std::vector<Spin> parse_spins(const Options& o, std::size_t n) {
  if (o.spins.size() != n)
    throw UsageError("expected " + std::to_string(n) + " spins, got " + std::to_string(o.spins.size()));
  std::vector<Spin> out;
  for (const auto& s : o.spins) out.push_back(parse_spin(s, o.twice));
  return out;
}

void require_format(const Options& o, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed)
    if (o.format == f) return;
  throw UsageError("format '" + o.format + "' is not supported by this command");
}

DotMode dot_mode(const Options& o) {
  if (o.dot_mode == "clique") return DotMode::Clique;
  if (o.dot_mode == "bipartite") return DotMode::Bipartite;
  throw UsageError("unknown dot mode '" + o.dot_mode + "'");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// "a=1,b=3/2,..." or ten positional spins in symbol order.
SymbolSpins symbol_spins(const Options& o) {
  if (!o.input.empty()) return json::labeling_from(read_json(o.input));
  SymbolSpins out;
  if (!o.assignments.empty()) {
    std::stringstream ss(o.assignments);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("expected symbol=spin, got '" + item + "'");
      const auto sym = parse_symbol(item.substr(0, eq));
      if (!sym) throw UsageError("unknown symbol '" + item.substr(0, eq) + "'");
      out[*sym] = parse_spin(item.substr(eq + 1), o.twice);
    }
    return out;
  }
  const auto spins = parse_spins(o, kAllSymbols.size());
  for (std::size_t i = 0; i < kAllSymbols.size(); ++i) out[kAllSymbols[i]] = spins[i];
  return out;
}

std::string join_spins(const std::vector<std::pair<std::string, Spin>>& inst) {
  std::string s;
  for (const auto& [name, j] : inst) {
    if (!s.empty()) s += ' ';
    s += name + "=" + j.to_string();
  }
  return s;
}

std::string describe(const IncidenceStructure& s) {
  std::ostringstream os;
  const auto sig = configuration_signature(s);
  os << "configuration " << (sig ? sig->to_string() : "irregular") << "\n";
  for (LineId l : s.lines()) {
    auto it = s.labels().lines.find(l);
    os << "line " << (it != s.labels().lines.end() ? it->second : std::to_string(l)) << ":";
    for (PointId p : s.points_on(l)) {
      auto pt = s.labels().points.find(p);
      os << ' ' << (pt != s.labels().points.end() ? pt->second : std::to_string(p));
    }
    os << "\n";
  }
  return os.str();
}

std::string describe(const SimplicialComplex4& c) {
  std::ostringstream os;
  const auto f = c.f_vector();
  os << "f-vector (" << f[0] << "," << f[1] << "," << f[2] << "," << f[3] << ")\n";
  for (const auto& v : c.vertices()) os << "vertex " << v.tag << "\n";
  for (const auto& t : c.triangles()) {
    os << "triangle " << t.tag << ":";
    for (int e : t.edges) os << ' ' << c.edges()[e].tag;
    os << "\n";
  }
  for (const auto& T : c.tetrahedra()) {
    os << "tetrahedron " << T.tag << ":";
    for (int v : T.vertices) os << ' ' << c.vertices()[v].tag;
    os << "\n";
  }
  return os.str();
}

std::string emit_structure(const Options& o, const IncidenceStructure& s) {
  require_format(o, {"text", "json", "dot"});
  if (o.format == "json") return json::incidence(s).dump(2) + "\n";
  if (o.format == "dot") return to_dot(s, dot_mode(o));
  return describe(s);
}

std::string emit_complex(const Options& o, const SimplicialComplex4& c) {
  require_format(o, {"text", "json", "dot"});
  if (o.format == "json") return json::complex(c).dump(2) + "\n";
  if (o.format == "dot") return to_dot(c);
  return describe(c);
}

SimplicialComplex4 load_complex(const Options& o) {
  if (!o.input.empty()) return json::complex_from(read_json(o.input));
  return space_dual_desargues(build_desargues());
}

struct Outcome {
  std::string text;
  int code = kOk;
};

Outcome cmd_sixj(const Options& o) {
  require_format(o, {"text", "json"});
  const auto s = parse_spins(o, 6);
  const SixJ sym = SixJ::from_entries({s[0], s[1], s[2], s[3], s[4], s[5]});
  const SqrtRational v = sixj_value(sym);
  if (o.format == "json") return {nlohmann::json{{"symbol", json::sixj(sym)}, {"value", json::value(v)}}.dump() + "\n"};
  return {v.to_string() + "\n"};
}

Outcome cmd_orbit(const Options& o) {
  require_format(o, {"text", "json"});
  const auto s = parse_spins(o, 6);
  const SixJ sym = SixJ::from_entries({s[0], s[1], s[2], s[3], s[4], s[5]});
  const auto orbit = symmetry_orbit(sym);
  if (o.format == "json") {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : orbit) members.push_back(json::sixj(m));
    nlohmann::json j{{"symbol", json::sixj(sym)}, {"size", orbit.size()}, {"members", members}};
    if (sym.valid()) j["value"] = json::value(sixj_value(sym));
    return {j.dump() + "\n"};
  }
  std::string text = "orbit size " + std::to_string(orbit.size()) + "\n";
  for (const auto& m : orbit) text += m.to_string() + "\n";
  return {text};
}

Outcome emit_single(const Options& o, const VerifyRecord& rec) {
  const int code = rec.result.equal ? kOk : kIdentityViolation;
  if (o.format == "json") return {json::record(rec).dump() + "\n", code};
  std::string text = rec.result.form + " " + join_spins(rec.instance) + "\n";
  text += "lhs = " + rec.result.lhs.to_string() + "\n";
  text += "rhs = " + rec.result.rhs.to_string() + "\n";
  text += rec.result.equal ? "holds\n" : "VIOLATED\n";
  return {text, code};
}

Outcome run_grid(const Options& o, GridKind kind) {
  std::ostringstream os;
  VerifyOptions vo;
  vo.ceiling = o.ceiling;
  vo.jobs = o.jobs;
  vo.be_form = o.literal_form ? BEForm::Unweighted : BEForm::Weighted;
  const bool as_json = o.format == "json";
  vo.sink = [&](const VerifyRecord& rec) {
    if (as_json)
      os << json::record(rec).dump() << "\n";
    else if (!rec.result.equal)
      os << "FAIL " << join_spins(rec.instance) << ": " << rec.result.lhs.to_string()
         << " != " << rec.result.rhs.to_string() << "\n";
  };
  const VerifyReport report = verify_grid(o.max_twice, kind, vo);
  if (as_json)
    os << nlohmann::json{{"kind", grid_kind_name(kind)},
                         {"max_twice", report.max_twice},
                         {"instances", report.instances},
                         {"failures", report.failures},
                         {"summary", report.summary()}}
              .dump()
       << "\n";
  else
    os << report.summary() << "\n";
  return {os.str(), report.failures == 0 ? kOk : kIdentityViolation};
}

Outcome cmd_verify_orth(const Options& o) {
  require_format(o, {"text", "json"});
  if (o.all) return run_grid(o, GridKind::Orthogonality);
  const auto s = parse_spins(o, 6);
  VerifyRecord rec;
  static const char* names[] = {"a", "b", "c", "d", "y", "y'"};
  for (std::size_t i = 0; i < 6; ++i) rec.instance.emplace_back(names[i], s[i]);
  rec.result = orthogonality_check(s[0], s[1], s[2], s[3], s[4], s[5]);
  return emit_single(o, rec);
}

VerifyRecord be_record(const std::vector<Spin>& s) {
  VerifyRecord rec;
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "p", "q", "r"};
  for (std::size_t i = 0; i < 9; ++i) rec.instance.emplace_back(names[i], s[i]);
  return rec;
}

BEInstance be_from(const std::vector<Spin>& s) {
  return {s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], s[8]};
}

Outcome cmd_verify_be(const Options& o) {
  require_format(o, {"text", "json"});
  if (o.all) return run_grid(o, GridKind::BE);
  const auto s = parse_spins(o, 9);
  VerifyRecord rec = be_record(s);
  rec.result = be_check(be_from(s), o.literal_form ? BEForm::Unweighted : BEForm::Weighted);
  return emit_single(o, rec);
}

Outcome cmd_verify_pachner(const Options& o) {
  require_format(o, {"text", "json"});
  if (o.move != "2-3" && o.move != "1-4") throw UsageError("--move must be 2-3 or 1-4");
  const bool one_four = o.move == "1-4";
  if (o.all) return run_grid(o, one_four ? GridKind::Pachner14 : GridKind::Pachner23);
  const auto s = parse_spins(o, 9);
  VerifyRecord rec = be_record(s);
  if (one_four) {
    const Spin pp = o.p_prime.empty() ? s[6] : parse_spin(o.p_prime, o.twice);
    rec.instance.emplace_back("p'", pp);
    rec.result = pachner_14_check(be_from(s), pp);
  } else {
    rec.result = pachner_23_check(be_from(s));
  }
  return emit_single(o, rec);
}

Outcome cmd_build_desargues(const Options& o) { return {emit_structure(o, build_desargues())}; }

Outcome cmd_space_dual(const Options& o) {
  const IncidenceStructure d = o.input.empty() ? build_desargues() : json::incidence_from(read_json(o.input));
  return {emit_complex(o, space_dual_desargues(d))};
}

Outcome cmd_cross_section(const Options& o) {
  const IncidenceStructure s = cross_section(load_complex(o));
  std::string text = emit_structure(o, s);
  if (o.format == "text")
    text += std::string("isomorphic to Desargues: ") + (isomorphic(s, build_desargues()) ? "yes" : "no") + "\n";
  return {text};
}

Outcome cmd_label(const Options& o) {
  require_format(o, {"text", "json"});
  const auto labeling = label_desargues(symbol_spins(o));
  const auto quads = labeling.quadrangle_symbols();
  const auto simplex = transfer_labeling(labeling, space_dual_desargues(labeling.structure));
  const auto tets = simplex.tetrahedron_symbols();
  if (o.format == "json") {
    nlohmann::json j = json::labeling(labeling.symbols);
    nlohmann::json q = nlohmann::json::array(), t = nlohmann::json::array();
    for (const auto& s : quads) q.push_back(json::sixj(s));
    for (const auto& s : tets) t.push_back(json::sixj(s));
    j["quadrangle_symbols"] = q;
    j["tetrahedron_symbols"] = t;
    return {j.dump() + "\n"};
  }
  std::string text;
  for (std::size_t i = 0; i < 5; ++i)
    text += "Q" + std::to_string(i + 1) + " " + quads[i].to_string() + "  T" + std::to_string(i + 1) +
            " " + tets[i].to_string() + "\n";
  return {text};
}

Outcome cmd_amplitude(const Options& o) {
  require_format(o, {"text", "json"});
  const auto labeling = label_desargues(symbol_spins(o));
  const SqrtRational amp = network_amplitude(labeling);
  if (o.format == "json") {
    nlohmann::json j = json::labeling(labeling.symbols);
    j["amplitude"] = json::value(amp);
    return {j.dump() + "\n"};
  }
  return {amp.to_string() + "\n"};
}

Outcome cmd_regularize(const Options& o) {
  require_format(o, {"text", "json"});
  const auto s = parse_spins(o, 4);
  const CanonicalQuadruple q = canonicalize_quadruple(s[0], s[1], s[2], s[3]);
  const RunningRange range = running_range(q);
  const RegularizationReport report = regularization_bounds(q);

  std::vector<EnumeratedState> states;
  if (o.enumerate) {
    Options others = o;
    others.spins.clear();
    states = regularized_enumeration(q, symbol_spins(others));
  }

  if (o.format == "json") {
    nlohmann::json j{{"canonical", json::quadruple(q)},
                     {"range",
                      {{"x_min", json::spin(range.x_min)},
                       {"x_max", json::spin(range.x_max)},
                       {"y_min", json::spin(range.y_min)},
                       {"y_max", json::spin(range.y_max)}}},
                     {"report", json::regularization(report)}};
    if (o.enumerate) {
      nlohmann::json e = nlohmann::json::array();
      for (const auto& st : states) e.push_back({{"x", json::spin(st.x)}, {"amplitude", json::value(st.amplitude)}});
      j["enumeration"] = e;
    }
    return {j.dump() + "\n"};
  }
  std::ostringstream os;
  os << "canonical a=" << q.a.to_string() << " b=" << q.b.to_string() << " c=" << q.c.to_string()
     << " d=" << q.d.to_string() << " s=" << q.s.to_string() << "\n";
  os << "x in [" << range.x_min.to_string() << ", " << range.x_max.to_string() << "], y in ["
     << range.y_min.to_string() << ", " << range.y_max.to_string() << "]\n";
  os << "rsym3 " << (report.rsym3_holds ? "holds" : "fails") << "\n";
  os << "kappa " << Spin::from_twice(report.kappa_twice).to_string() << "\n";
  os << "r " << (report.max_r ? std::to_string(*report.max_r) : "none") << "\n";
  os << "rsym5 " << (report.rsym5_holds ? (*report.rsym5_holds ? "holds" : "fails") : "n/a") << "\n";
  for (const auto& st : states) os << "x=" << st.x.to_string() << " " << st.amplitude.to_string() << "\n";
  return {os.str()};
}

Outcome cmd_export(const Options& o) {
  if (o.what == "triangle") return {emit_structure(o, build_triangle())};
  if (o.what == "quadrangle") return {emit_structure(o, build_quadrangle())};
  if (o.what == "quadrilateral") return {emit_structure(o, plane_dual(build_quadrangle()))};
  if (o.what == "desargues") return {emit_structure(o, build_desargues())};
  if (o.what == "space-dual") return {emit_complex(o, space_dual_desargues(build_desargues()))};
  if (o.what == "cross-section") return {emit_structure(o, cross_section(space_dual_desargues(build_desargues())))};
  throw UsageError("unknown export target '" + o.what + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 6j symbols, recoupling identities and the Desargues spin network"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("-o,--output", o.output, "Write output to a file instead of stdout");
  app.add_flag("--twice", o.twice, "Spin arguments are twice-value integers");
  app.add_option("--dot-mode", o.dot_mode, "DOT layout for incidence structures")
      ->check(CLI::IsMember({"bipartite", "clique"}));

  using Handler = Outcome (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, h);
    return sub;
  };
  auto spins = [&](CLI::App* sub, const char* help) { sub->add_option("spin", o.spins, help); };
  auto grid = [&](CLI::App* sub) {
    sub->add_flag("--all", o.all, "Verify every valid instance up to --max-twice");
    sub->add_option("--max-twice", o.max_twice, "Largest twice-spin in the grid")->check(CLI::NonNegativeNumber);
    sub->add_option("--ceiling", o.ceiling, "Refuse grids above this twice-spin");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--sorted", o.sorted, "Emit records in canonical order (always the case)");
  };
  auto labeled = [&](CLI::App* sub) {
    spins(sub, "Ten spins in the order a b c d e f p q r x");
    sub->add_option("--spins", o.assignments, "Assignments such as a=1,b=3/2,...");
    sub->add_option("--input", o.input, "Labeling JSON file")->check(CLI::ExistingFile);
  };

  spins(add("sixj", "Exact value of {j1 j2 j3; j4 j5 j6}", cmd_sixj), "Six spins");
  spins(add("orbit", "Orbit of a 6j symbol under the 144-element symmetry group", cmd_orbit), "Six spins");

  auto* orth = add("verify-orth", "Check the orthogonality relation", cmd_verify_orth);
  spins(orth, "a b c d y y'");
  grid(orth);

  auto* be = add("verify-be", "Check the Biedenharn-Elliott identity", cmd_verify_be);
  spins(be, "a b c d e f p q r");
  grid(be);
  be->add_flag("--literal-paper-form", o.literal_form, "Drop the (2x+1) weight from the sum");

  auto* pachner = add("verify-pachner", "Check Pachner 2-3 or 1-4 move invariance", cmd_verify_pachner);
  spins(pachner, "a b c d e f p q r");
  grid(pachner);
  pachner->add_option("--move", o.move, "2-3 or 1-4")->check(CLI::IsMember({"2-3", "1-4"}));
  pachner->add_option("--p-prime", o.p_prime, "Second p label for the 1-4 move (defaults to p)");

  add("build-desargues", "Emit the Desargues (10_3) configuration", cmd_build_desargues);
  add("space-dual", "Space dual of the Desargues configuration (a 4-simplex)", cmd_space_dual)
      ->add_option("--input", o.input, "Desargues incidence JSON")
      ->check(CLI::ExistingFile);
  add("cross-section", "Cross-section of the 4-simplex", cmd_cross_section)
      ->add_option("--input", o.input, "Simplicial complex JSON")
      ->check(CLI::ExistingFile);
  labeled(add("label", "Spin-label the Desargues configuration and its dual simplex", cmd_label));
  labeled(add("amplitude", "Five-symbol amplitude of a labeling", cmd_amplitude));

  auto* reg = add("regularize", "Canonical quadruple, running range and regularization report", cmd_regularize);
  spins(reg, "a b c d");
  reg->add_flag("--enumerate", o.enumerate, "Enumerate amplitudes over x (needs --spins for e,f,p,q,r)");
  reg->add_option("--spins", o.assignments, "Assignments for e,f,p,q,r");

  add("export", "Export a fixed structure", cmd_export)
      ->add_option("--what", o.what, "triangle|quadrangle|quadrilateral|desargues|space-dual|cross-section");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Outcome result;
  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) result = handler(o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (o.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.output << "\n";
      return kUsage;
    }
    file << result.text;
  }
  return result.code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"spinnet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace spinnet::cli
