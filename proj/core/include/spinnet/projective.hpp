#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinnet/errors.hpp"

namespace spinnet {

using PointId = int;
using LineId = int;

/// Optional human tags: two-color points "(12)", bracket lines "[45]".
struct IncidenceLabels {
  std::map<PointId, std::string> points;
  std::map<LineId, std::string> lines;

  bool empty() const { return points.empty() && lines.empty(); }
  friend bool operator==(const IncidenceLabels&, const IncidenceLabels&) = default;
};

/// A finite set of points and lines with an incidence relation. Immutable.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Throws MalformedStructure on repeated ids or dangling references.
  IncidenceStructure(std::vector<PointId> points, std::vector<LineId> lines,
                     std::vector<std::pair<PointId, LineId>> incidence,
                     IncidenceLabels labels = {});

  const std::vector<PointId>& points() const noexcept { return points_; }
  const std::vector<LineId>& lines() const noexcept { return lines_; }
  const std::set<std::pair<PointId, LineId>>& incidence() const noexcept { return incidence_; }
  const IncidenceLabels& labels() const noexcept { return labels_; }

  bool incident(PointId p, LineId l) const { return incidence_.contains({p, l}); }
  std::vector<PointId> points_on(LineId l) const;
  std::vector<LineId> lines_through(PointId p) const;

  std::optional<PointId> point_with_label(std::string_view tag) const;
  std::optional<LineId> line_with_label(std::string_view tag) const;

  /// Restriction to the given points and lines, keeping their labels.
  IncidenceStructure restrict_to(const std::vector<PointId>& points,
                                 const std::vector<LineId>& lines) const;

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

 private:
  std::vector<PointId> points_;
  std::vector<LineId> lines_;
  std::set<std::pair<PointId, LineId>> incidence_;
  IncidenceLabels labels_;
};

/// (p_gamma, l_pi): p points on gamma lines each, l lines through pi points each.
struct ConfigurationSignature {
  int p = 0;
  int gamma = 0;
  int l = 0;
  int pi = 0;

  static ConfigurationSignature symmetric(int n, int k) { return {n, k, n, k}; }
  bool consistent() const { return p * gamma == l * pi; }
  bool is_symmetric() const { return p == l && gamma == pi; }
  ConfigurationSignature dual() const { return {l, pi, p, gamma}; }
  std::string to_string() const;

  friend bool operator==(const ConfigurationSignature&, const ConfigurationSignature&) = default;
};

bool validate_configuration(const IncidenceStructure& s, const ConfigurationSignature& sig);

/// The signature when every point has the same degree and every line the
/// same size.
std::optional<ConfigurationSignature> configuration_signature(const IncidenceStructure& s);

/// (3_2).
IncidenceStructure build_triangle();
/// The complete quadrangle (4_3, 6_2).
IncidenceStructure build_quadrangle();
/// Points and lines exchanged, incidence transposed, labels carried along.
IncidenceStructure plane_dual(const IncidenceStructure& s);

/// Desargues (10_3) assembled from five quadrangles Q1..Q5. Point (ij) is
/// the meeting point of Q_i and Q_j; the line through (ij),(ik),(jk) is
/// tagged with the complementary colors [lm].
IncidenceStructure build_desargues();

/// Two-color tag "(ij)" / bracket tag "[lm]" -> the ordered pair (i, j).
std::optional<std::pair<int, int>> parse_pair_tag(std::string_view tag, char open, char close);
std::string pair_tag(int i, int j, char open, char close);

/// Points of Q_i: tags containing color i.
std::vector<PointId> quadrangle_points(const IncidenceStructure& desargues, int i);
/// Lines of Q_i: bracket tags whose complement contains color i.
std::vector<LineId> quadrangle_lines(const IncidenceStructure& desargues, int i);

/// Renames quadrangle colors: color i becomes perm[i-1]. Tags only.
IncidenceStructure permute_quadrangle_colors(const IncidenceStructure& desargues,
                                             const std::array<int, 5>& perm);

/// Incidence-preserving bijections of points and of lines exist.
bool isomorphic(const IncidenceStructure& s1, const IncidenceStructure& s2);

struct ComplexVertex {
  int color = 0;        // 1..5
  std::string tag;      // "{2345}" for color 1
};

struct ComplexEdge {
  std::array<int, 2> vertices{};
  std::string tag;      // "[lm]"
  std::optional<LineId> source_line;
};

struct ComplexTriangle {
  std::array<int, 3> vertices{};
  std::array<int, 3> edges{};
  std::string tag;      // "<klm>"
  std::optional<PointId> source_point;
};

struct ComplexTetrahedron {
  std::array<int, 4> vertices{};
  std::array<int, 6> edges{};
  std::array<int, 4> triangles{};
  std::string tag;      // "T1"
  int quadrangle = 0;
};

/// The boundary combinatorics of a 4-simplex. The constructor checks the
/// f-vector (5,10,10,5) and the face incidences; throws MalformedStructure.
class SimplicialComplex4 {
 public:
  SimplicialComplex4(std::vector<ComplexVertex> vertices, std::vector<ComplexEdge> edges,
                     std::vector<ComplexTriangle> triangles,
                     std::vector<ComplexTetrahedron> tetrahedra);

  const std::vector<ComplexVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<ComplexEdge>& edges() const noexcept { return edges_; }
  const std::vector<ComplexTriangle>& triangles() const noexcept { return triangles_; }
  const std::vector<ComplexTetrahedron>& tetrahedra() const noexcept { return tetrahedra_; }

  std::array<std::size_t, 4> f_vector() const {
    return {vertices_.size(), edges_.size(), triangles_.size(), tetrahedra_.size()};
  }
  std::size_t tetrahedra_containing_triangle(int triangle) const;
  std::size_t triangles_containing_edge(int edge) const;
  std::optional<int> edge_with_tag(std::string_view tag) const;

 private:
  std::vector<ComplexVertex> vertices_;
  std::vector<ComplexEdge> edges_;
  std::vector<ComplexTriangle> triangles_;
  std::vector<ComplexTetrahedron> tetrahedra_;
};

/// Quadrangle Q_i -> vertex i tagged with the complementary colors, line ->
/// edge keeping its bracket tag, point (ij) -> triangle <klm> spanned by the
/// edges of its three lines; T_i is the tetrahedron carrying Q_i's lines.
/// Throws MalformedLabels when the Desargues tags are missing or inconsistent.
SimplicialComplex4 space_dual_desargues(const IncidenceStructure& desargues);

/// One point per edge and one line per triangle, incidence by containment.
IncidenceStructure cross_section(const SimplicialComplex4& c);

enum class DotMode {
  /// Points and lines as nodes of the incidence graph.
  Bipartite,
  /// Points as nodes; each line drawn as the clique on its points.
  Clique,
};
std::string to_dot(const IncidenceStructure& s, DotMode mode = DotMode::Bipartite);
std::string to_dot(const SimplicialComplex4& c);

}  // namespace spinnet
