#include "dessins/hubbard.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dessins {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

// Vertex sequence of the unique tree path, endpoints included.
std::vector<int> tree_path(const HubbardTree& t, int a, int b) {
  std::vector<int> parent(t.v_count() + 1, 0);
  parent[a] = a;
  std::vector<int> queue{a};
  for (std::size_t k = 0; k < queue.size() && parent[b] == 0; ++k)
    for (int u : t.rotation(queue[k]))
      if (parent[u] == 0) {
        parent[u] = queue[k];
        queue.push_back(u);
      }
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Image path of each edge, aligned with HubbardTree::edges(); a collapsed
// edge contributes the single image vertex.
std::vector<std::vector<int>> edge_images(const HubbardTree& t) {
  std::vector<std::vector<int>> images;
  for (auto [u, v] : t.edges()) {
    if (t.tau(u) == t.tau(v))
      images.push_back({t.tau(u)});
    else
      images.push_back(tree_path(t, t.tau(u), t.tau(v)));
  }
  return images;
}

int position_in_rotation(const HubbardTree& t, int v, int neighbor) {
  const auto& rot = t.rotation(v);
  auto it = std::find(rot.begin(), rot.end(), neighbor);
  return static_cast<int>(it - rot.begin()) + 1;
}

}  // namespace

HubbardTree::HubbardTree(int v_count, std::vector<std::vector<int>> rotations,
                         std::vector<int> tau, std::vector<int> delta)
    : m_(v_count), rot_(std::move(rotations)), tau_(std::move(tau)), delta_(std::move(delta)) {
  if (m_ < 1) throw std::invalid_argument("a tree needs at least one vertex");
  if (rot_.size() != static_cast<std::size_t>(m_) ||
      tau_.size() != static_cast<std::size_t>(m_) ||
      delta_.size() != static_cast<std::size_t>(m_))
    throw std::invalid_argument("rotation, tau and delta must each cover all vertices");

  std::size_t edge_ends = 0;
  for (int v = 1; v <= m_; ++v) {
    auto& rot = rot_[v - 1];
    std::set<int> seen;
    for (int u : rot) {
      if (u < 1 || u > m_) throw std::invalid_argument("neighbor out of range");
      if (u == v) throw std::invalid_argument("vertex listed as its own neighbor");
      if (!seen.insert(u).second)
        throw std::invalid_argument("duplicate neighbor in a rotation");
    }
    edge_ends += rot.size();
    if (!rot.empty())
      std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
    if (tau_[v - 1] < 1 || tau_[v - 1] > m_)
      throw std::invalid_argument("tau image out of range");
    if (delta_[v - 1] < 1) throw std::invalid_argument("delta must be positive");
  }
  for (int v = 1; v <= m_; ++v)
    for (int u : rot_[v - 1])
      if (!adjacent(u, v)) throw std::invalid_argument("rotations are not symmetric");
  if (edge_ends != 2 * static_cast<std::size_t>(m_ - 1))
    throw std::invalid_argument("edge count must be one less than the vertex count");

  std::vector<char> reached(m_ + 1, 0);
  reached[1] = 1;
  std::vector<int> queue{1};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int u : rot_[queue[k] - 1])
      if (!reached[u]) {
        reached[u] = 1;
        queue.push_back(u);
      }
  if (queue.size() != static_cast<std::size_t>(m_))
    throw std::invalid_argument("the adjacency is not connected");
}

bool HubbardTree::adjacent(int u, int v) const {
  const auto& rot = rot_[u - 1];
  return std::find(rot.begin(), rot.end(), v) != rot.end();
}

std::vector<std::pair<int, int>> HubbardTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= m_; ++v)
    for (int u : rot_[v - 1])
      if (v < u) out.emplace_back(v, u);
  std::sort(out.begin(), out.end());
  return out;
}

int degree(const HubbardTree& t) {
  int d = 1;
  for (int v = 1; v <= t.v_count(); ++v) d += t.delta(v) - 1;
  return d;
}

std::vector<int> critical_set(const HubbardTree& t) {
  std::vector<int> out;
  for (int v = 1; v <= t.v_count(); ++v)
    if (t.delta(v) >= 2) out.push_back(v);
  return out;
}

std::vector<int> postcritical_set(const HubbardTree& t) {
  std::set<int> post;
  for (int c : critical_set(t)) {
    int x = t.tau(c);
    while (post.insert(x).second) x = t.tau(x);
  }
  return {post.begin(), post.end()};
}

std::vector<VertexKind> classify_vertices(const HubbardTree& t) {
  int m = t.v_count();
  // A vertex is periodic iff it is still reachable after m steps of tau.
  std::vector<int> far(m + 1);
  for (int v = 1; v <= m; ++v) {
    int x = v;
    for (int step = 0; step < m; ++step) x = t.tau(x);
    far[v] = x;
  }
  // far[v] always lies on the cycle the orbit of v falls into.
  std::vector<char> fatou_cycle(m + 1, 0), visited(m + 1, 0);
  for (int v = 1; v <= m; ++v) {
    int y = far[v];
    if (visited[y]) continue;
    std::vector<int> cycle{y};
    visited[y] = 1;
    for (int x = t.tau(y); x != y; x = t.tau(x)) {
      cycle.push_back(x);
      visited[x] = 1;
    }
    if (std::any_of(cycle.begin(), cycle.end(), [&](int x) { return t.delta(x) >= 2; }))
      for (int x : cycle) fatou_cycle[x] = 1;
  }
  std::vector<VertexKind> kinds(m, VertexKind::Julia);
  for (int v = 1; v <= m; ++v)
    if (fatou_cycle[far[v]]) kinds[v - 1] = VertexKind::Fatou;
  return kinds;
}

const AxiomCheck& HubbardReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

HubbardReport validate_hubbard(const HubbardTree& t) {
  HubbardReport report;
  int d = degree(t);
  auto edges = t.edges();
  auto images = edge_images(t);

  auto add = [&](std::string name, CheckStatus status, std::string detail) {
    report.checks.push_back({std::move(name), status, std::move(detail)});
    if (status == CheckStatus::Fail) report.ok = false;
  };

  std::string collapsed;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (t.tau(edges[i].first) == t.tau(edges[i].second)) {
      if (!collapsed.empty()) collapsed += ", ";
      collapsed += "{" + std::to_string(edges[i].first) + "," +
                   std::to_string(edges[i].second) + "}";
    }
  add("edge-condition", collapsed.empty() ? CheckStatus::Pass : CheckStatus::Fail,
      collapsed.empty() ? "" : "tau collapses " + collapsed);

  if (!collapsed.empty()) {
    add("winding", CheckStatus::NotChecked, "germs of collapsed edges are undefined");
  } else {
    std::string bad;
    for (int v = 1; v <= t.v_count(); ++v) {
      const auto& rot = t.rotation(v);
      if (rot.empty()) continue;
      int x = t.tau(v);
      int m_image = static_cast<int>(t.rotation(x).size());
      std::vector<int> pos;
      for (int u : rot) {
        // First edge out of x on the path toward tau(u).
        int toward = tree_path(t, x, t.tau(u))[1];
        pos.push_back(position_in_rotation(t, x, toward));
      }
      long long total = 0;
      for (std::size_t i = 0; i < pos.size(); ++i) {
        int a = pos[i], b = pos[(i + 1) % pos.size()];
        total += ((b - a - 1) % m_image + m_image) % m_image + 1;
      }
      if (total != static_cast<long long>(t.delta(v)) * m_image) {
        if (!bad.empty()) bad += "; ";
        bad += "vertex " + std::to_string(v) + " winds " + std::to_string(total) + "/" +
               std::to_string(m_image) + " turns, delta is " + std::to_string(t.delta(v));
      }
    }
    add("winding", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail, bad);
  }

  add("nontriviality", d >= 2 ? CheckStatus::Pass : CheckStatus::Fail,
      d >= 2 ? "" : "degree is " + std::to_string(d));

  {
    // Image subtree: all vertex images plus everything the edge images cross.
    std::set<int> image_vertices;
    std::map<std::pair<int, int>, int> edge_cover;
    std::map<int, int> interior_cover;
    for (int v = 1; v <= t.v_count(); ++v) image_vertices.insert(t.tau(v));
    for (const auto& path : images) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        image_vertices.insert(path[i]);
        if (i > 0 && i + 1 < path.size()) ++interior_cover[path[i]];
        if (i + 1 < path.size())
          ++edge_cover[{std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])}];
      }
    }
    std::vector<int> total(t.v_count() + 1, 0);
    for (int v = 1; v <= t.v_count(); ++v) total[t.tau(v)] += t.delta(v);
    std::string bad;
    auto complain = [&](const std::string& what) {
      if (!bad.empty()) bad += "; ";
      bad += what;
    };
    for (int x : image_vertices) {
      int count = total[x] + (interior_cover.count(x) ? interior_cover[x] : 0);
      if (count != d)
        complain("vertex " + std::to_string(x) + " has multiplicity " +
                 std::to_string(count) + " of " + std::to_string(d));
    }
    for (const auto& [e, cover] : edge_cover)
      if (cover != d)
        complain("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                 "} is covered " + std::to_string(cover) + " of " + std::to_string(d) +
                 " times");
    add("homogeneity", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail, bad);
  }

  {
    auto kinds = classify_vertices(t);
    std::string bad;
    for (auto [u, v] : edges) {
      if (kinds[u - 1] != VertexKind::Julia || kinds[v - 1] != VertexKind::Julia) continue;
      std::set<std::pair<int, int>> seen;
      int a = u, b = v;
      bool separated = false;
      long long bound = static_cast<long long>(t.v_count()) * t.v_count();
      for (long long step = 0; step <= bound; ++step) {
        if (a == b || !t.adjacent(a, b)) {
          separated = true;
          break;
        }
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) break;
        int na = t.tau(a), nb = t.tau(b);
        a = na;
        b = nb;
      }
      if (!separated) {
        if (!bad.empty()) bad += "; ";
        bad += "pair {" + std::to_string(u) + "," + std::to_string(v) +
               "} never separates";
      }
    }
    add("expansion", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail, bad);
  }

  {
    BelyiType bt = is_belyi_type(t);
    if (!bt.ok) {
      add("minimality", CheckStatus::NotChecked, "only decided for Belyi-type trees");
    } else {
      auto post = postcritical_set(t);
      std::string bad;
      for (int v = 1; v <= t.v_count(); ++v) {
        if (t.rotation(v).size() > 2) continue;
        if (!std::binary_search(post.begin(), post.end(), t.tau(v))) {
          if (!bad.empty()) bad += "; ";
          bad += "vertex " + std::to_string(v) + " maps outside the postcritical set";
        }
      }
      add("minimality", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail, bad);
    }
  }

  return report;
}

BelyiType is_belyi_type(const HubbardTree& t) {
  auto post = postcritical_set(t);
  int d = degree(t);
  if (post.size() != 2 || d < 3) return {};

  auto images = edge_images(t);
  std::vector<int> candidates;
  for (int p : post) {
    int total = 0;
    bool all_double = true;
    for (int y = 1; y <= t.v_count(); ++y)
      if (t.tau(y) == p) {
        total += t.delta(y);
        all_double = all_double && t.delta(y) == 2;
      }
    bool interior = false;
    for (const auto& path : images)
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (path[i] == p) interior = true;
    if (all_double && !interior && total == d) candidates.push_back(p);
  }
  if (candidates.size() != 1) return {};
  return {true, candidates[0]};
}

HubbardTree dessin_to_hubbard(const NormalizedDessin& nd) {
  const TreeDessin& d = nd.dessin();
  if (d.n_edges() < 3)
    throw std::invalid_argument("the tree of a dessin needs degree at least 3");

  auto verts = vertices(d);
  std::map<VertexId, int> number;
  for (std::size_t i = 0; i < verts.size(); ++i) number[verts[i].first] = static_cast<int>(i) + 1;

  std::vector<std::vector<int>> rot(verts.size());
  std::vector<int> tau(verts.size()), delta(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    VertexId v = verts[i].first;
    Color other = v.color == Color::Black ? Color::White : Color::Black;
    for (int e : vertex_edges(d, v)) rot[i].push_back(number.at(vertex_at(d, other, e)));
    tau[i] = number.at(v.color == Color::Black ? nd.mark0() : nd.mark1());
    delta[i] = verts[i].second;
  }
  return {static_cast<int>(verts.size()), std::move(rot), std::move(tau), std::move(delta)};
}

NormalizedDessin hubbard_to_dessin(const HubbardTree& t) {
  BelyiType bt = is_belyi_type(t);
  if (!bt.ok) throw std::invalid_argument("not a Belyi-type tree");
  auto post = postcritical_set(t);
  int p1 = bt.clean_value;
  int p0 = post[0] == p1 ? post[1] : post[0];

  std::vector<Color> color(t.v_count() + 1);
  for (int v = 1; v <= t.v_count(); ++v) {
    if (t.tau(v) == p0)
      color[v] = Color::Black;
    else if (t.tau(v) == p1)
      color[v] = Color::White;
    else
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " maps outside the postcritical pair");
  }

  auto edges = t.edges();
  std::map<std::pair<int, int>, int> label;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (color[u] == color[v])
      throw std::invalid_argument("the induced coloring is not proper at edge {" +
                                  std::to_string(u) + "," + std::to_string(v) + "}");
    label[edges[i]] = static_cast<int>(i) + 1;
  }

  int n = static_cast<int>(edges.size());
  std::vector<int> s0(n), s1(n);
  for (int v = 1; v <= t.v_count(); ++v) {
    const auto& rot = t.rotation(v);
    auto& target = color[v] == Color::Black ? s0 : s1;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      int here = label.at({std::min(v, rot[i]), std::max(v, rot[i])});
      int next = rot[(i + 1) % rot.size()];
      target[here - 1] = label.at({std::min(v, next), std::max(v, next)});
    }
  }

  auto mark = [&](int p) {
    int smallest = 0;
    for (int u : t.rotation(p)) {
      int e = label.at({std::min(p, u), std::max(p, u)});
      if (smallest == 0 || e < smallest) smallest = e;
    }
    return VertexId{color[p], smallest};
  };
  TreeDessin dessin(n, Perm(n, std::move(s0)), Perm(n, std::move(s1)));
  return {std::move(dessin), mark(p0), mark(p1)};
}

namespace {

void encode_from(const HubbardTree& t, int v, int parent, const std::vector<int>& children,
                 std::vector<int>& order, std::vector<int>& canon,
                 std::vector<int>& child_counts) {
  canon[v] = static_cast<int>(order.size()) + 1;
  order.push_back(v);
  child_counts.push_back(static_cast<int>(children.size()));
  for (int c : children) {
    const auto& rot = t.rotation(c);
    auto at = std::find(rot.begin(), rot.end(), v) - rot.begin();
    std::vector<int> grandchildren;
    for (std::size_t k = 1; k < rot.size(); ++k)
      grandchildren.push_back(rot[(at + k) % rot.size()]);
    encode_from(t, c, v, grandchildren, order, canon, child_counts);
  }
}

}  // namespace

std::string canonical_form_hubbard(const HubbardTree& t) {
  std::string best;
  for (int root = 1; root <= t.v_count(); ++root) {
    const auto& rot = t.rotation(root);
    int spins = std::max<int>(1, static_cast<int>(rot.size()));
    for (int spin = 0; spin < spins; ++spin) {
      std::vector<int> children;
      for (std::size_t k = 0; k < rot.size(); ++k)
        children.push_back(rot[(spin + k) % rot.size()]);
      std::vector<int> order, child_counts, canon(t.v_count() + 1, 0);
      encode_from(t, root, 0, children, order, canon, child_counts);

      std::vector<int> deltas, taus;
      for (int v : order) {
        deltas.push_back(t.delta(v));
        taus.push_back(canon[t.tau(v)]);
      }
      std::string enc = join(child_counts) + "|" + join(deltas) + "|" + join(taus);
      if (best.empty() || enc < best) best = std::move(enc);
    }
  }
  return best;
}

}  // namespace dessins
