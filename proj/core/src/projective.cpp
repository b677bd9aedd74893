#include "spinnet/projective.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace spinnet {

// ---- IncidenceStructure ------------------------------------------------------

IncidenceStructure::IncidenceStructure(std::vector<PointId> points, std::vector<LineId> lines,
                                       std::vector<std::pair<PointId, LineId>> incidence,
                                       IncidenceLabels labels)
    : points_(std::move(points)), lines_(std::move(lines)), labels_(std::move(labels)) {
  const std::set<PointId> point_set(points_.begin(), points_.end());
  const std::set<LineId> line_set(lines_.begin(), lines_.end());
  if (point_set.size() != points_.size()) throw MalformedStructure("repeated point id");
  if (line_set.size() != lines_.size()) throw MalformedStructure("repeated line id");
  for (const auto& [p, l] : incidence) {
    if (!point_set.contains(p) || !line_set.contains(l))
      throw MalformedStructure("incidence (" + std::to_string(p) + ", " + std::to_string(l) +
                               ") references an unknown id");
    incidence_.emplace(p, l);
  }
  for (const auto& [p, tag] : labels_.points) {
    if (!point_set.contains(p)) throw MalformedStructure("label for unknown point " + tag);
  }
  for (const auto& [l, tag] : labels_.lines) {
    if (!line_set.contains(l)) throw MalformedStructure("label for unknown line " + tag);
  }
}

std::vector<PointId> IncidenceStructure::points_on(LineId l) const {
  std::vector<PointId> out;
  for (PointId p : points_) {
    if (incident(p, l)) out.push_back(p);
  }
  return out;
}

std::vector<LineId> IncidenceStructure::lines_through(PointId p) const {
  std::vector<LineId> out;
  for (LineId l : lines_) {
    if (incident(p, l)) out.push_back(l);
  }
  return out;
}

std::optional<PointId> IncidenceStructure::point_with_label(std::string_view tag) const {
  for (const auto& [p, t] : labels_.points) {
    if (t == tag) return p;
  }
  return std::nullopt;
}

std::optional<LineId> IncidenceStructure::line_with_label(std::string_view tag) const {
  for (const auto& [l, t] : labels_.lines) {
    if (t == tag) return l;
  }
  return std::nullopt;
}

IncidenceStructure IncidenceStructure::restrict_to(const std::vector<PointId>& points,
                                                   const std::vector<LineId>& lines) const {
  std::vector<std::pair<PointId, LineId>> inc;
  IncidenceLabels labels;
  for (PointId p : points) {
    if (auto it = labels_.points.find(p); it != labels_.points.end()) labels.points.insert(*it);
    for (LineId l : lines) {
      if (incident(p, l)) inc.emplace_back(p, l);
    }
  }
  for (LineId l : lines) {
    if (auto it = labels_.lines.find(l); it != labels_.lines.end()) labels.lines.insert(*it);
  }
  return IncidenceStructure(points, lines, std::move(inc), std::move(labels));
}

// ---- configurations ----------------------------------------------------------

std::string ConfigurationSignature::to_string() const {
  if (is_symmetric()) return "(" + std::to_string(p) + "_" + std::to_string(gamma) + ")";
  return "(" + std::to_string(p) + "_" + std::to_string(gamma) + ", " + std::to_string(l) + "_" +
         std::to_string(pi) + ")";
}

bool validate_configuration(const IncidenceStructure& s, const ConfigurationSignature& sig) {
  if (!sig.consistent()) return false;
  if (static_cast<int>(s.points().size()) != sig.p) return false;
  if (static_cast<int>(s.lines().size()) != sig.l) return false;
  for (PointId p : s.points()) {
    if (static_cast<int>(s.lines_through(p).size()) != sig.gamma) return false;
  }
  for (LineId l : s.lines()) {
    if (static_cast<int>(s.points_on(l).size()) != sig.pi) return false;
  }
  return true;
}

std::optional<ConfigurationSignature> configuration_signature(const IncidenceStructure& s) {
  if (s.points().empty() || s.lines().empty()) return std::nullopt;
  ConfigurationSignature sig;
  sig.p = static_cast<int>(s.points().size());
  sig.l = static_cast<int>(s.lines().size());
  sig.gamma = static_cast<int>(s.lines_through(s.points().front()).size());
  sig.pi = static_cast<int>(s.points_on(s.lines().front()).size());
  if (!validate_configuration(s, sig)) return std::nullopt;
  return sig;
}

namespace {

std::string vertex_name(int i) { return "P" + std::to_string(i + 1); }

// Complete graph on n points: lines are the pairs.
IncidenceStructure complete_polygon(int n) {
  std::vector<PointId> points(n);
  std::iota(points.begin(), points.end(), 0);
  std::vector<LineId> lines;
  std::vector<std::pair<PointId, LineId>> inc;
  IncidenceLabels labels;
  for (int i = 0; i < n; ++i) labels.points[i] = vertex_name(i);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      lines.push_back(next);
      inc.emplace_back(i, next);
      inc.emplace_back(j, next);
      labels.lines[next] = vertex_name(i) + vertex_name(j);
      ++next;
    }
  }
  return IncidenceStructure(points, lines, inc, labels);
}

}  // namespace

IncidenceStructure build_triangle() { return complete_polygon(3); }
IncidenceStructure build_quadrangle() { return complete_polygon(4); }

IncidenceStructure plane_dual(const IncidenceStructure& s) {
  std::vector<std::pair<PointId, LineId>> inc;
  for (const auto& [p, l] : s.incidence()) inc.emplace_back(l, p);
  IncidenceLabels labels{s.labels().lines, s.labels().points};
  return IncidenceStructure(s.lines(), s.points(), inc, labels);
}

// ---- Desargues ---------------------------------------------------------------

std::string pair_tag(int i, int j, char open, char close) {
  if (i > j) std::swap(i, j);
  return std::string(1, open) + std::to_string(i) + std::to_string(j) + std::string(1, close);
}

std::optional<std::pair<int, int>> parse_pair_tag(std::string_view tag, char open, char close) {
  if (tag.size() != 4 || tag.front() != open || tag.back() != close) return std::nullopt;
  const int i = tag[1] - '0';
  const int j = tag[2] - '0';
  if (i < 1 || i > 5 || j < 1 || j > 5 || i >= j) return std::nullopt;
  return std::make_pair(i, j);
}

namespace {

std::array<int, 3> complement_of_pair(int i, int j) {
  std::array<int, 3> out{};
  int k = 0;
  for (int c = 1; c <= 5; ++c) {
    if (c != i && c != j) out[k++] = c;
  }
  return out;
}

std::pair<int, int> complement_of_triple(const std::array<int, 3>& t) {
  std::vector<int> rest;
  for (int c = 1; c <= 5; ++c) {
    if (std::find(t.begin(), t.end(), c) == t.end()) rest.push_back(c);
  }
  return {rest[0], rest[1]};
}

bool contains(const std::array<int, 3>& t, int c) {
  return std::find(t.begin(), t.end(), c) != t.end();
}

}  // namespace

IncidenceStructure build_desargues() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::array<int, 3>> triples;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      for (int k = j + 1; k <= 5; ++k) triples.push_back({i, j, k});
    }
  }

  std::vector<PointId> points;
  std::vector<LineId> lines;
  std::vector<std::pair<PointId, LineId>> inc;
  IncidenceLabels labels;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    points.push_back(static_cast<PointId>(p));
    labels.points[static_cast<PointId>(p)] = pair_tag(pairs[p].first, pairs[p].second, '(', ')');
  }
  for (std::size_t l = 0; l < triples.size(); ++l) {
    lines.push_back(static_cast<LineId>(l));
    const auto [u, v] = complement_of_triple(triples[l]);
    labels.lines[static_cast<LineId>(l)] = pair_tag(u, v, '[', ']');
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (contains(triples[l], pairs[p].first) && contains(triples[l], pairs[p].second))
        inc.emplace_back(static_cast<PointId>(p), static_cast<LineId>(l));
    }
  }
  return IncidenceStructure(points, lines, inc, labels);
}

std::vector<PointId> quadrangle_points(const IncidenceStructure& d, int i) {
  std::vector<PointId> out;
  for (const auto& [p, tag] : d.labels().points) {
    const auto pr = parse_pair_tag(tag, '(', ')');
    if (!pr) throw MalformedLabels("point tag '" + tag + "' is not of the form (ij)");
    if (pr->first == i || pr->second == i) out.push_back(p);
  }
  return out;
}

std::vector<LineId> quadrangle_lines(const IncidenceStructure& d, int i) {
  std::vector<LineId> out;
  for (const auto& [l, tag] : d.labels().lines) {
    const auto pr = parse_pair_tag(tag, '[', ']');
    if (!pr) throw MalformedLabels("line tag '" + tag + "' is not of the form [lm]");
    if (pr->first != i && pr->second != i) out.push_back(l);
  }
  return out;
}

IncidenceStructure permute_quadrangle_colors(const IncidenceStructure& d,
                                             const std::array<int, 5>& perm) {
  IncidenceLabels labels;
  for (const auto& [p, tag] : d.labels().points) {
    const auto pr = parse_pair_tag(tag, '(', ')');
    if (!pr) throw MalformedLabels("point tag '" + tag + "'");
    labels.points[p] = pair_tag(perm[pr->first - 1], perm[pr->second - 1], '(', ')');
  }
  for (const auto& [l, tag] : d.labels().lines) {
    const auto pr = parse_pair_tag(tag, '[', ']');
    if (!pr) throw MalformedLabels("line tag '" + tag + "'");
    labels.lines[l] = pair_tag(perm[pr->first - 1], perm[pr->second - 1], '[', ']');
  }
  std::vector<std::pair<PointId, LineId>> inc(d.incidence().begin(), d.incidence().end());
  return IncidenceStructure(d.points(), d.lines(), inc, labels);
}

// ---- isomorphism -------------------------------------------------------------

namespace {

// Incidence graph: nodes [0, P) are points, [P, P+L) are lines.
struct IncidenceGraph {
  std::size_t num_points = 0;
  std::vector<std::vector<bool>> adjacent;
  std::vector<int> degree;

  explicit IncidenceGraph(const IncidenceStructure& s) {
    num_points = s.points().size();
    const std::size_t n = num_points + s.lines().size();
    adjacent.assign(n, std::vector<bool>(n, false));
    degree.assign(n, 0);
    std::map<PointId, std::size_t> pi;
    std::map<LineId, std::size_t> li;
    for (std::size_t k = 0; k < s.points().size(); ++k) pi[s.points()[k]] = k;
    for (std::size_t k = 0; k < s.lines().size(); ++k) li[s.lines()[k]] = num_points + k;
    for (const auto& [p, l] : s.incidence()) {
      const auto u = pi.at(p), v = li.at(l);
      adjacent[u][v] = adjacent[v][u] = true;
      ++degree[u];
      ++degree[v];
    }
  }

  std::size_t size() const { return adjacent.size(); }
  bool is_point(std::size_t u) const { return u < num_points; }
};

}  // namespace

bool isomorphic(const IncidenceStructure& s1, const IncidenceStructure& s2) {
  if (s1.points().size() != s2.points().size() || s1.lines().size() != s2.lines().size() ||
      s1.incidence().size() != s2.incidence().size())
    return false;
  const IncidenceGraph g1(s1), g2(s2);
  const std::size_t n = g1.size();

  auto degree_profile = [](const IncidenceGraph& g) {
    std::vector<std::pair<bool, int>> prof;
    for (std::size_t u = 0; u < g.size(); ++u) prof.emplace_back(g.is_point(u), g.degree[u]);
    std::sort(prof.begin(), prof.end());
    return prof;
  };
  if (degree_profile(g1) != degree_profile(g2)) return false;

  // Visit g1 in BFS order so each new node is constrained by mapped neighbours.
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (queued[root]) continue;
    std::vector<std::size_t> queue = {root};
    queued[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      order.push_back(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (g1.adjacent[u][v] && !queued[v]) {
          queued[v] = true;
          queue.push_back(v);
        }
      }
    }
  }

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t u = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || g1.is_point(u) != g2.is_point(cand) || g1.degree[u] != g2.degree[cand])
        continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t w = order[k];
        consistent = g1.adjacent[u][w] == g2.adjacent[cand][static_cast<std::size_t>(image[w])];
      }
      if (!consistent) continue;
      image[u] = static_cast<int>(cand);
      used[cand] = true;
      if (extend(depth + 1)) return true;
      used[cand] = false;
      image[u] = -1;
    }
    return false;
  };
  return extend(0);
}

// ---- 4-simplex ---------------------------------------------------------------

SimplicialComplex4::SimplicialComplex4(std::vector<ComplexVertex> vertices,
                                       std::vector<ComplexEdge> edges,
                                       std::vector<ComplexTriangle> triangles,
                                       std::vector<ComplexTetrahedron> tetrahedra)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      triangles_(std::move(triangles)),
      tetrahedra_(std::move(tetrahedra)) {
  if (f_vector() != std::array<std::size_t, 4>{5, 10, 10, 5})
    throw MalformedStructure("f-vector is not (5, 10, 10, 5)");

  auto in_range = [](int idx, std::size_t size) {
    return idx >= 0 && static_cast<std::size_t>(idx) < size;
  };
  for (const auto& e : edges_) {
    for (int v : e.vertices) {
      if (!in_range(v, vertices_.size())) throw MalformedStructure("edge vertex out of range");
    }
    if (e.vertices[0] == e.vertices[1]) throw MalformedStructure("degenerate edge");
  }
  for (const auto& t : triangles_) {
    std::set<int> from_edges;
    for (int e : t.edges) {
      if (!in_range(e, edges_.size())) throw MalformedStructure("triangle edge out of range");
      from_edges.insert(edges_[e].vertices.begin(), edges_[e].vertices.end());
    }
    if (from_edges != std::set<int>(t.vertices.begin(), t.vertices.end()) || from_edges.size() != 3)
      throw MalformedStructure("triangle " + t.tag + " edges do not close up");
  }
  for (const auto& T : tetrahedra_) {
    std::set<int> verts(T.vertices.begin(), T.vertices.end());
    if (verts.size() != 4) throw MalformedStructure("tetrahedron " + T.tag + " is degenerate");
    std::map<int, int> edge_uses;
    for (int t : T.triangles) {
      if (!in_range(t, triangles_.size()))
        throw MalformedStructure("tetrahedron triangle out of range");
      for (int v : triangles_[t].vertices) {
        if (!verts.contains(v))
          throw MalformedStructure("triangle outside tetrahedron " + T.tag);
      }
      for (int e : triangles_[t].edges) ++edge_uses[e];
    }
    // Boundary of a tetrahedron: six edges, each on exactly two faces.
    if (edge_uses.size() != 6) throw MalformedStructure("tetrahedron " + T.tag + " needs 6 edges");
    for (int e : T.edges) {
      auto it = edge_uses.find(e);
      if (it == edge_uses.end() || it->second != 2)
        throw MalformedStructure("tetrahedron " + T.tag + " edge/face mismatch");
    }
  }
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    if (tetrahedra_containing_triangle(static_cast<int>(t)) != 2)
      throw MalformedStructure("triangle " + triangles_[t].tag + " is not shared by 2 tetrahedra");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (triangles_containing_edge(static_cast<int>(e)) != 3)
      throw MalformedStructure("edge " + edges_[e].tag + " is not on 3 triangles");
  }
}

std::size_t SimplicialComplex4::tetrahedra_containing_triangle(int triangle) const {
  return static_cast<std::size_t>(std::count_if(
      tetrahedra_.begin(), tetrahedra_.end(), [&](const ComplexTetrahedron& T) {
        return std::find(T.triangles.begin(), T.triangles.end(), triangle) != T.triangles.end();
      }));
}

std::size_t SimplicialComplex4::triangles_containing_edge(int edge) const {
  return static_cast<std::size_t>(
      std::count_if(triangles_.begin(), triangles_.end(), [&](const ComplexTriangle& t) {
        return std::find(t.edges.begin(), t.edges.end(), edge) != t.edges.end();
      }));
}

std::optional<int> SimplicialComplex4::edge_with_tag(std::string_view tag) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].tag == tag) return static_cast<int>(e);
  }
  return std::nullopt;
}

SimplicialComplex4 space_dual_desargues(const IncidenceStructure& d) {
  if (d.points().size() != 10 || d.lines().size() != 10)
    throw MalformedLabels("space dual needs the ten-point, ten-line Desargues structure");
  if (d.labels().points.size() != 10 || d.labels().lines.size() != 10)
    throw MalformedLabels("space dual needs a tag on every point and line");

  std::vector<ComplexVertex> vertices;
  for (int i = 1; i <= 5; ++i) {
    std::string tag = "{";
    for (int c = 1; c <= 5; ++c) {
      if (c != i) tag += std::to_string(c);
    }
    vertices.push_back({i, tag + "}"});
  }

  std::vector<ComplexEdge> edges;
  std::map<LineId, int> edge_of_line;
  std::set<std::pair<int, int>> seen_edges;
  for (LineId l : d.lines()) {
    const std::string& tag = d.labels().lines.at(l);
    const auto pr = parse_pair_tag(tag, '[', ']');
    if (!pr) throw MalformedLabels("line tag '" + tag + "' is not of the form [lm]");
    if (!seen_edges.insert(*pr).second) throw MalformedLabels("repeated line tag " + tag);
    edge_of_line[l] = static_cast<int>(edges.size());
    edges.push_back({{pr->first - 1, pr->second - 1}, tag, l});
  }

  std::vector<ComplexTriangle> triangles;
  std::map<PointId, int> triangle_of_point;
  for (PointId p : d.points()) {
    const std::string& ptag = d.labels().points.at(p);
    const auto pr = parse_pair_tag(ptag, '(', ')');
    if (!pr) throw MalformedLabels("point tag '" + ptag + "' is not of the form (ij)");
    const auto klm = complement_of_pair(pr->first, pr->second);
    const auto through = d.lines_through(p);
    if (through.size() != 3) throw MalformedLabels("point " + ptag + " is not on three lines");
    ComplexTriangle tri;
    for (int k = 0; k < 3; ++k) {
      tri.vertices[k] = klm[k] - 1;
      tri.edges[k] = edge_of_line.at(through[k]);
      for (int v : edges[tri.edges[k]].vertices) {
        if (!contains(klm, v + 1))
          throw MalformedLabels("line " + edges[tri.edges[k]].tag + " through " + ptag +
                                " is not complementary to it");
      }
    }
    tri.tag = "<" + std::to_string(klm[0]) + std::to_string(klm[1]) + std::to_string(klm[2]) + ">";
    tri.source_point = p;
    triangle_of_point[p] = static_cast<int>(triangles.size());
    triangles.push_back(tri);
  }

  std::vector<ComplexTetrahedron> tetrahedra;
  for (int i = 1; i <= 5; ++i) {
    const auto pts = quadrangle_points(d, i);
    const auto lns = quadrangle_lines(d, i);
    if (pts.size() != 4 || lns.size() != 6)
      throw MalformedLabels("quadrangle Q" + std::to_string(i) + " is not a (4_3, 6_2)");
    ComplexTetrahedron T;
    T.quadrangle = i;
    T.tag = "T" + std::to_string(i);
    int k = 0;
    for (int c = 1; c <= 5; ++c) {
      if (c != i) T.vertices[k++] = c - 1;
    }
    for (std::size_t n = 0; n < 4; ++n) T.triangles[n] = triangle_of_point.at(pts[n]);
    for (std::size_t n = 0; n < 6; ++n) T.edges[n] = edge_of_line.at(lns[n]);
    tetrahedra.push_back(T);
  }
  try {
    return SimplicialComplex4(std::move(vertices), std::move(edges), std::move(triangles),
                              std::move(tetrahedra));
  } catch (const MalformedStructure& e) {
    throw MalformedLabels(std::string("tags do not produce a 4-simplex: ") + e.what());
  }
}

IncidenceStructure cross_section(const SimplicialComplex4& c) {
  std::vector<PointId> points;
  std::vector<LineId> lines;
  std::vector<std::pair<PointId, LineId>> inc;
  IncidenceLabels labels;
  bool tagged = true;
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    points.push_back(static_cast<PointId>(e));
    const auto& v = c.edges()[e].vertices;
    labels.points[static_cast<PointId>(e)] =
        pair_tag(c.vertices()[v[0]].color, c.vertices()[v[1]].color, '(', ')');
  }
  for (std::size_t t = 0; t < c.triangles().size(); ++t) {
    lines.push_back(static_cast<LineId>(t));
    std::array<int, 3> colors{};
    for (int k = 0; k < 3; ++k) colors[k] = c.vertices()[c.triangles()[t].vertices[k]].color;
    std::sort(colors.begin(), colors.end());
    if (colors[0] < 1 || colors[2] > 5) tagged = false;
    const auto [u, w] = complement_of_triple(colors);
    labels.lines[static_cast<LineId>(t)] = pair_tag(u, w, '[', ']');
    for (int e : c.triangles()[t].edges) inc.emplace_back(static_cast<PointId>(e),
                                                          static_cast<LineId>(t));
  }
  if (!tagged) labels = {};
  return IncidenceStructure(points, lines, inc, labels);
}

// ---- DOT ---------------------------------------------------------------------

namespace {

std::string point_label(const IncidenceStructure& s, PointId p) {
  auto it = s.labels().points.find(p);
  return it != s.labels().points.end() ? it->second : "p" + std::to_string(p);
}

std::string line_label(const IncidenceStructure& s, LineId l) {
  auto it = s.labels().lines.find(l);
  return it != s.labels().lines.end() ? it->second : "l" + std::to_string(l);
}

}  // namespace

std::string to_dot(const IncidenceStructure& s, DotMode mode) {
  std::ostringstream out;
  out << "graph incidence {\n";
  for (PointId p : s.points())
    out << "  p" << p << " [shape=circle, label=\"" << point_label(s, p) << "\"];\n";
  if (mode == DotMode::Bipartite) {
    for (LineId l : s.lines())
      out << "  l" << l << " [shape=box, label=\"" << line_label(s, l) << "\"];\n";
    for (const auto& [p, l] : s.incidence()) out << "  p" << p << " -- l" << l << ";\n";
  } else {
    for (LineId l : s.lines()) {
      const auto pts = s.points_on(l);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          out << "  p" << pts[i] << " -- p" << pts[j] << " [label=\"" << line_label(s, l)
              << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const SimplicialComplex4& c) {
  std::ostringstream out;
  out << "graph simplex {\n";
  for (std::size_t v = 0; v < c.vertices().size(); ++v)
    out << "  v" << v << " [label=\"" << c.vertices()[v].tag << "\"];\n";
  for (const auto& e : c.edges())
    out << "  v" << e.vertices[0] << " -- v" << e.vertices[1] << " [label=\"" << e.tag << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace spinnet
