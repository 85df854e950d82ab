#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dessins/tree_dessin.hpp"

namespace dessins {

/// Planar tree with dynamics: vertices {1, ..., v_count}, a counterclockwise
/// rotation of neighbors at each vertex, a self-map tau of the vertex set,
/// and a local degree delta(v) >= 1 at each vertex.  Construction checks the
/// structure (tree shape, rotations listing exactly the neighbors, maps in
/// range) and throws std::invalid_argument when it is broken; the dynamical
/// axioms are a separate report, see validate_hubbard.
class HubbardTree {
 public:
  /// rotations[v-1] lists the neighbors of v in counterclockwise order;
  /// each list is rotated so the smallest neighbor comes first, making
  /// equality of trees plain memberwise equality.
  HubbardTree(int v_count, std::vector<std::vector<int>> rotations, std::vector<int> tau,
              std::vector<int> delta);

  int v_count() const { return m_; }
  const std::vector<int>& rotation(int v) const { return rot_[v - 1]; }
  int tau(int v) const { return tau_[v - 1]; }
  int delta(int v) const { return delta_[v - 1]; }

  bool adjacent(int u, int v) const;
  /// All tree edges as sorted pairs, in increasing order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const HubbardTree&, const HubbardTree&) = default;

 private:
  int m_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> tau_;
  std::vector<int> delta_;
};

/// 1 + sum of (delta(v) - 1): the degree of any map realizing the tree.
int degree(const HubbardTree& t);

/// Vertices with delta >= 2, increasing.
std::vector<int> critical_set(const HubbardTree& t);

/// Union of the strictly forward orbits of the critical set, increasing.
std::vector<int> postcritical_set(const HubbardTree& t);

enum class VertexKind { Fatou, Julia };

/// Fatou vertices are those whose forward orbit enters a periodic cycle
/// through a critical vertex; everything else is Julia.
std::vector<VertexKind> classify_vertices(const HubbardTree& t);

enum class CheckStatus { Pass, Fail, NotChecked };

struct AxiomCheck {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // empty when Pass
};

struct HubbardReport {
  bool ok = true;  // no Fail entries
  std::vector<AxiomCheck> checks;

  const AxiomCheck& check(const std::string& name) const;
};

/// Decides the axioms for a map realizing (tau, delta) on the tree:
///   edge-condition   tau separates the endpoints of every edge;
///   winding          around each vertex the germs of image edges wind
///                    exactly delta(v) times, by the cyclic step count;
///   nontriviality    degree >= 2;
///   homogeneity      every vertex of the image subtree has total preimage
///                    multiplicity d, every image edge is covered d times;
///   expansion        each adjacent Julia pair eventually separates;
///   minimality       decided for Belyi-type trees only (vertices of tree
///                    valence <= 2 must map into the postcritical set),
///                    NotChecked otherwise.
/// Winding is NotChecked when the edge condition fails, since germs of a
/// collapsed edge are undefined.
HubbardReport validate_hubbard(const HubbardTree& t);

struct BelyiType {
  bool ok = false;
  int clean_value = 0;  // the distinguished postcritical vertex when ok
};

/// True when the postcritical set has exactly two elements, the degree is at
/// least three, and exactly one postcritical vertex has its full preimage
/// multiplicity d realized by vertices of delta 2 (no edge-interior
/// preimages).  That vertex is the clean value.
BelyiType is_belyi_type(const HubbardTree& t);

/// The dessin tree itself, dynamics folding every black vertex onto the
/// mark0 vertex and every white one onto the mark1 vertex, delta = valence.
/// Requires degree >= 3.
HubbardTree dessin_to_hubbard(const NormalizedDessin& nd);

/// Inverse construction on Belyi-type trees: vertices mapping to the
/// non-clean postcritical vertex become black, those mapping to the clean
/// value white (both colors must tile the tree properly and every vertex
/// must map into the postcritical pair); edges are numbered along the
/// sorted endpoint pairs and the rotations become s0 and s1.
NormalizedDessin hubbard_to_dessin(const HubbardTree& t);

/// Text encoding minimized over every choice of root and of starting
/// neighbor at the root: preorder child counts, deltas and tau images in
/// visit order.  Equal encodings characterize plane-tree isomorphism
/// respecting tau and delta.
std::string canonical_form_hubbard(const HubbardTree& t);

}  // namespace dessins
