#include "dessins/canonical.hpp"

#include <algorithm>

namespace dessins {

namespace {

// rho[e-1] = new label of edge e after breadth-first discovery from base.
std::vector<int> bfs_labels(const TreeDessin& d, int base) {
  int n = d.n_edges();
  std::vector<int> rho(n, 0);
  std::vector<int> queue{base};
  rho[base - 1] = 1;
  int next = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int q : {d.s0()[queue[k]], d.s1()[queue[k]]}) {
      if (rho[q - 1] == 0) {
        rho[q - 1] = ++next;
        queue.push_back(q);
      }
    }
  }
  return rho;
}

std::vector<int> relabeled_key(const TreeDessin& d, const std::vector<int>& rho) {
  int n = d.n_edges();
  std::vector<int> key(2 * n);
  for (int e = 1; e <= n; ++e) {
    key[rho[e - 1] - 1] = rho[d.s0()[e] - 1];
    key[n + rho[e - 1] - 1] = rho[d.s1()[e] - 1];
  }
  return key;
}

int relabeled_rep(const TreeDessin& d, const std::vector<int>& rho, VertexId v) {
  int rep = rho[v.rep - 1];
  for (int e : vertex_edges(d, v)) rep = std::min(rep, rho[e - 1]);
  return rep;
}

void append_marks(std::vector<int>& key, const TreeDessin& d, const std::vector<int>& rho,
                  VertexId mark0, VertexId mark1) {
  key.push_back(mark0.color == Color::Black ? 0 : 1);
  key.push_back(relabeled_rep(d, rho, mark0));
  key.push_back(mark1.color == Color::Black ? 0 : 1);
  key.push_back(relabeled_rep(d, rho, mark1));
}

struct Minimized {
  std::vector<int> key;
  std::vector<int> rho;
};

template <typename KeyFn>
Minimized minimize(const TreeDessin& d, KeyFn make_key) {
  Minimized best;
  for (int base = 1; base <= d.n_edges(); ++base) {
    std::vector<int> rho = bfs_labels(d, base);
    std::vector<int> key = make_key(rho);
    if (best.key.empty() || key < best.key) {
      best.key = std::move(key);
      best.rho = std::move(rho);
    }
  }
  return best;
}

TreeDessin from_key(int n, const std::vector<int>& key) {
  std::vector<int> s0(key.begin(), key.begin() + n);
  std::vector<int> s1(key.begin() + n, key.begin() + 2 * n);
  return TreeDessin(n, Perm(n, std::move(s0)), Perm(n, std::move(s1)));
}

}  // namespace

CanonicalDessin canonical_form(const TreeDessin& d) {
  ensure_valid(d);
  Minimized best = minimize(d, [&](const std::vector<int>& rho) { return relabeled_key(d, rho); });
  return {from_key(d.n_edges(), best.key), Perm(d.n_edges(), std::move(best.rho))};
}

CanonicalNormalized canonical_form_normalized(const NormalizedDessin& nd) {
  const TreeDessin& d = nd.dessin();
  Minimized best = minimize(d, [&](const std::vector<int>& rho) {
    std::vector<int> key = relabeled_key(d, rho);
    append_marks(key, d, rho, nd.mark0(), nd.mark1());
    return key;
  });
  int n = d.n_edges();
  VertexId m0{nd.mark0().color, best.key[2 * n + 1]};
  VertexId m1{nd.mark1().color, best.key[2 * n + 3]};
  return {NormalizedDessin(from_key(n, best.key), m0, m1), Perm(n, std::move(best.rho))};
}

std::vector<int> canonical_key(const TreeDessin& d) {
  ensure_valid(d);
  return minimize(d, [&](const std::vector<int>& rho) { return relabeled_key(d, rho); }).key;
}

std::vector<int> canonical_key(const NormalizedDessin& nd) {
  const TreeDessin& d = nd.dessin();
  return minimize(d, [&](const std::vector<int>& rho) {
           std::vector<int> key = relabeled_key(d, rho);
           append_marks(key, d, rho, nd.mark0(), nd.mark1());
           return key;
         })
      .key;
}

bool isomorphic(const TreeDessin& a, const TreeDessin& b) {
  if (a.n_edges() != b.n_edges()) return false;
  ensure_valid(a);
  ensure_valid(b);
  return canonical_key(a) == canonical_key(b);
}

bool isomorphic(const NormalizedDessin& a, const NormalizedDessin& b) {
  if (a.dessin().n_edges() != b.dessin().n_edges()) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace dessins
