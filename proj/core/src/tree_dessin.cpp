#include "dessins/tree_dessin.hpp"

#include <algorithm>

namespace dessins {

std::string to_string(VertexId v) {
  return (v.color == Color::Black ? "B:" : "W:") + std::to_string(v.rep);
}

TreeDessin::TreeDessin(int n_edges, Perm s0, Perm s1)
    : n_(n_edges), s0_(std::move(s0)), s1_(std::move(s1)) {
  if (n_ < 1) throw std::invalid_argument("a dessin needs at least one edge");
  if (s0_.n() != n_ || s1_.n() != n_)
    throw std::invalid_argument("rotation degrees do not match the edge count");

  // Transitivity: every edge reachable from edge 1 under {s0, s1}.
  std::vector<bool> seen(n_, false);
  std::vector<int> queue{1};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int q : {s0_[queue[k]], s1_[queue[k]]}) {
      if (!seen[q - 1]) {
        seen[q - 1] = true;
        queue.push_back(q);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n_) {
    report_.ok = false;
    report_.violations.push_back(
        "transitivity: only " + std::to_string(queue.size()) + " of " + std::to_string(n_) +
        " edges are reachable from edge 1");
  }

  int vertex_count = s0_.cycle_count() + s1_.cycle_count();
  if (vertex_count != n_ + 1) {
    report_.ok = false;
    report_.violations.push_back("vertex-count: c(s0) + c(s1) = " + std::to_string(vertex_count) +
                                 ", a tree on " + std::to_string(n_) + " edges needs " +
                                 std::to_string(n_ + 1));
  }

  // One face: s0*s1 must be a single n-cycle.  Redundant given the other
  // two checks plus transitivity, but reported separately as a cross-check.
  int face_count = compose(s0_, s1_).cycle_count();
  if (face_count != 1) {
    report_.ok = false;
    report_.violations.push_back("single-face: s0*s1 has " + std::to_string(face_count) +
                                 " cycles, a plane tree has exactly one face");
  }
}

const ValidationReport& validate(const TreeDessin& d) { return d.report_; }

void ensure_valid(const TreeDessin& d) {
  const ValidationReport& r = validate(d);
  if (r.ok) return;
  std::string msg = "invalid dessin";
  for (const auto& v : r.violations) msg += "; " + v;
  throw std::invalid_argument(msg);
}

bool is_clean(const TreeDessin& d) {
  ensure_valid(d);
  const Perm& s1 = d.s1();
  for (int e = 1; e <= d.n_edges(); ++e)
    if (s1[e] == e || s1[s1[e]] != e) return false;
  return true;
}

std::vector<std::pair<VertexId, int>> vertices(const TreeDessin& d) {
  ensure_valid(d);
  std::vector<std::pair<VertexId, int>> out;
  for (const auto& cyc : d.s0().cycles())
    out.push_back({{Color::Black, cyc[0]}, static_cast<int>(cyc.size())});
  for (const auto& cyc : d.s1().cycles())
    out.push_back({{Color::White, cyc[0]}, static_cast<int>(cyc.size())});
  return out;
}

VertexId vertex_at(const TreeDessin& d, Color color, int edge) {
  if (edge < 1 || edge > d.n_edges()) throw std::invalid_argument("edge out of range");
  const Perm& s = color == Color::Black ? d.s0() : d.s1();
  int rep = edge;
  for (int e = s[edge]; e != edge; e = s[e]) rep = std::min(rep, e);
  return {color, rep};
}

int valence(const TreeDessin& d, VertexId v) {
  if (v.rep < 1 || v.rep > d.n_edges()) throw std::invalid_argument("vertex rep out of range");
  const Perm& s = v.color == Color::Black ? d.s0() : d.s1();
  int len = 1;
  for (int e = s[v.rep]; e != v.rep; e = s[e]) {
    if (e < v.rep)
      throw std::invalid_argument(to_string(v) + " does not name a vertex: " +
                                  std::to_string(v.rep) + " is not the smallest edge of its cycle");
    ++len;
  }
  return len;
}

std::vector<int> vertex_edges(const TreeDessin& d, VertexId v) {
  valence(d, v);  // validates
  const Perm& s = v.color == Color::Black ? d.s0() : d.s1();
  std::vector<int> out{v.rep};
  for (int e = s[v.rep]; e != v.rep; e = s[e]) out.push_back(e);
  return out;
}

ValidationReport validate_normalized(const TreeDessin& d, VertexId mark0, VertexId mark1) {
  ValidationReport r = validate(d);
  if (!r.ok) return r;

  if (!is_clean(d)) {
    r.ok = false;
    r.violations.push_back("not-clean: s1 must be a fixed-point-free involution");
  }
  auto check_mark = [&](const char* name, VertexId m) {
    if (m.rep < 1 || m.rep > d.n_edges()) {
      r.ok = false;
      r.violations.push_back(std::string(name) + ": edge " + std::to_string(m.rep) +
                             " is out of range");
      return false;
    }
    if (vertex_at(d, m.color, m.rep).rep != m.rep) {
      r.ok = false;
      r.violations.push_back(std::string(name) + ": " + to_string(m) +
                             " does not name a vertex (rep is not the cycle minimum)");
      return false;
    }
    return true;
  };
  bool marks_ok = check_mark("mark0", mark0);
  marks_ok = check_mark("mark1", mark1) && marks_ok;
  if (marks_ok && mark0 == mark1) {
    r.ok = false;
    r.violations.push_back("marks-distinct: mark0 and mark1 must differ");
  }
  return r;
}

NormalizedDessin::NormalizedDessin(TreeDessin dessin, VertexId mark0, VertexId mark1)
    : d_(std::move(dessin)), mark0_(mark0), mark1_(mark1) {
  ValidationReport r = validate_normalized(d_, mark0_, mark1_);
  if (!r.ok) {
    std::string msg = "invalid normalized dessin";
    for (const auto& v : r.violations) msg += "; " + v;
    throw std::invalid_argument(msg);
  }
}

TreeDessin underlying(const NormalizedDessin& nd) { return nd.dessin(); }

bool is_extra_clean(const NormalizedDessin& nd) {
  return nd.mark0().color == Color::Black && nd.mark1().color == Color::Black &&
         valence(nd.dessin(), nd.mark0()) == 1 && valence(nd.dessin(), nd.mark1()) == 1;
}

TreeDessin refine(const TreeDessin& d) {
  ensure_valid(d);
  int n = d.n_edges();
  std::vector<int> s0(2 * n), s1(2 * n);
  for (int e = 1; e <= n; ++e) {
    s1[2 * e - 2] = 2 * e;          // new white vertex bisecting edge e
    s1[2 * e - 1] = 2 * e - 1;
    s0[2 * e - 2] = 2 * d.s0()[e] - 1;  // old black rotations on odd labels
    s0[2 * e - 1] = 2 * d.s1()[e];      // old white rotations on even labels
  }
  return TreeDessin(2 * n, Perm(2 * n, std::move(s0)), Perm(2 * n, std::move(s1)));
}

TreeDessin smooth(const TreeDessin& d, VertexId anchor) {
  if (!is_clean(d)) throw std::invalid_argument("smooth requires a clean dessin");
  if (anchor.color != Color::Black) throw std::invalid_argument("anchor must be a black vertex");
  valence(d, anchor);  // validates the anchor names a vertex

  int n = d.n_edges();
  int m = n / 2;
  // Pair {e, s1(e)} gets the next label in order of its smaller member.
  std::vector<int> pair_label(n + 1, 0);
  int next = 0;
  for (int e = 1; e <= n; ++e) {
    if (e < d.s1()[e]) {
      ++next;
      pair_label[e] = next;
      pair_label[d.s1()[e]] = next;
    }
  }

  // Contracted tree on the black vertices of d, named by rep.
  std::vector<int> black_rep(n + 1);
  for (const auto& cyc : d.s0().cycles())
    for (int e : cyc) black_rep[e] = cyc[0];

  // Bipartition by breadth-first parity from the anchor.
  std::vector<int> cls(n + 1, -1);  // indexed by black rep
  std::vector<int> queue{anchor.rep};
  cls[anchor.rep] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int v = queue[k];
    for (int e : vertex_edges(d, {Color::Black, v})) {
      int u = black_rep[d.s1()[e]];
      if (cls[u] < 0) {
        cls[u] = 1 - cls[v];
        queue.push_back(u);
      }
    }
  }

  // Each pair has one endpoint in each class, so distributing every black
  // rotation cycle to its side writes each image slot exactly once.
  std::vector<int> s0(m), s1(m);
  for (const auto& cyc : d.s0().cycles()) {
    std::vector<int>& target = cls[cyc[0]] == 0 ? s0 : s1;
    for (std::size_t k = 0; k < cyc.size(); ++k)
      target[pair_label[cyc[k]] - 1] = pair_label[cyc[(k + 1) % cyc.size()]];
  }
  return TreeDessin(m, Perm(m, std::move(s0)), Perm(m, std::move(s1)));
}

}  // namespace dessins
