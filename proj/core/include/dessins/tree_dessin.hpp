#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "dessins/perm.hpp"

namespace dessins {

enum class Color { Black, White };

/// A vertex of a dessin, named by its color and the smallest edge in its
/// rotation cycle.  Black vertices are cycles of s0, white ones of s1.
struct VertexId {
  Color color;
  int rep;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend std::strong_ordering operator<=>(const VertexId&, const VertexId&) = default;
};

/// "B:3" / "W:1".
std::string to_string(VertexId v);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;  // "name: detail"
};

/// Bicolored plane tree on edges {1, ..., n}: s0 rotates edges
/// counterclockwise around black vertices, s1 around white ones.
/// Invalid pairs are representable; validate() reports what fails.
class TreeDessin {
 public:
  /// Requires only matching degrees (and n >= 1); tree-ness is reported,
  /// not enforced, so files can be loaded and then diagnosed.
  TreeDessin(int n_edges, Perm s0, Perm s1);

  int n_edges() const { return n_; }
  const Perm& s0() const { return s0_; }
  const Perm& s1() const { return s1_; }

  bool is_valid() const { return report_.ok; }

  friend bool operator==(const TreeDessin& a, const TreeDessin& b) {
    return a.n_ == b.n_ && a.s0_ == b.s0_ && a.s1_ == b.s1_;
  }

 private:
  friend const ValidationReport& validate(const TreeDessin&);
  int n_;
  Perm s0_, s1_;
  ValidationReport report_;
};

/// Invariants of a plane tree: <s0, s1> transitive, c(s0) + c(s1) = n + 1,
/// and s0*s1 a single n-cycle (one face).  Computed once at construction.
const ValidationReport& validate(const TreeDessin& d);

/// Throws std::invalid_argument listing the violations if d is not a tree.
void ensure_valid(const TreeDessin& d);

/// True iff s1 is a fixed-point-free involution (every white vertex has
/// valence exactly 2).  Requires a valid d.
bool is_clean(const TreeDessin& d);

/// All vertices with valences, blacks first, each color sorted by rep.
std::vector<std::pair<VertexId, int>> vertices(const TreeDessin& d);

/// The vertex of the given color incident to `edge`.
VertexId vertex_at(const TreeDessin& d, Color color, int edge);

/// Valence (rotation cycle length) of v; throws if v names no vertex.
int valence(const TreeDessin& d, VertexId v);

/// Edges of the rotation cycle of v, starting at the rep.
std::vector<int> vertex_edges(const TreeDessin& d, VertexId v);

/// Clean dessin with an ordered pair of distinct marked vertices.
/// Construction enforces every invariant (throws std::invalid_argument).
class NormalizedDessin {
 public:
  NormalizedDessin(TreeDessin dessin, VertexId mark0, VertexId mark1);

  const TreeDessin& dessin() const { return d_; }
  VertexId mark0() const { return mark0_; }
  VertexId mark1() const { return mark1_; }

  friend bool operator==(const NormalizedDessin&, const NormalizedDessin&) = default;

 private:
  TreeDessin d_;
  VertexId mark0_, mark1_;
};

/// Everything NormalizedDessin construction enforces, as a report:
/// the dessin invariants, cleanness, both marks naming real vertices,
/// and the marks being distinct.
ValidationReport validate_normalized(const TreeDessin& d, VertexId mark0, VertexId mark1);

/// Forgets the marks.
TreeDessin underlying(const NormalizedDessin& nd);

/// True iff both marks are black vertices of valence 1.
bool is_extra_clean(const NormalizedDessin& nd);

/// Bisects every edge with a new white vertex and recolors old whites
/// black: edge e becomes 2e-1 at its black end and 2e at its white end.
/// The result is clean with 2n edges.  Accepts any valid d.
TreeDessin refine(const TreeDessin& d);

/// Inverse of refine up to the bicoloring: contracts the valence-2 white
/// vertices of a clean dessin, labels the edge pairs {e, s1(e)} by smallest
/// member in increasing order, and bicolors the contracted tree with
/// anchor's class black.  anchor must be a black vertex of d.
TreeDessin smooth(const TreeDessin& d, VertexId anchor);

}  // namespace dessins
