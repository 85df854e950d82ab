#include "dessins/dynamics.hpp"

#include <algorithm>

namespace dessins {

namespace {

constexpr long long kMaxIterateEdges = 1 << 24;

void require_extra_clean(const NormalizedDessin& nd, const char* op) {
  if (!is_extra_clean(nd))
    throw std::invalid_argument(std::string(op) + " requires an extra-clean dessin "
                                "(both marks black of valence 1)");
  if (nd.dessin().n_edges() < 3)
    throw std::invalid_argument(std::string(op) + " requires degree at least 3");
}

long long checked_power(int d, int n) {
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= d;
    if (size > kMaxIterateEdges)
      throw std::invalid_argument("iterate would exceed " + std::to_string(kMaxIterateEdges) +
                                  " edges");
  }
  return size;
}

NormalizedDessin with_black_marks(TreeDessin d, int mark0_edge, int mark1_edge) {
  VertexId m0 = vertex_at(d, Color::Black, mark0_edge);
  VertexId m1 = vertex_at(d, Color::Black, mark1_edge);
  return NormalizedDessin(std::move(d), m0, m1);
}

}  // namespace

FiberClass fiber_class(const NormalizedDessin& nd) {
  if (nd.dessin().n_edges() < 3)
    throw std::invalid_argument("fiber classification assumes degree at least 3");
  return {nd.mark0().color == Color::Black ? 0 : 1, nd.mark1().color == Color::Black ? 0 : 1,
          valence(nd.dessin(), nd.mark0()), valence(nd.dessin(), nd.mark1())};
}

int iterate_index(const std::vector<int>& tuple, int d) {
  if (tuple.empty()) throw std::invalid_argument("empty iterate tuple");
  long long index = 0, weight = 1;
  for (int eps : tuple) {
    if (eps < 1 || eps > d) throw std::invalid_argument("tuple coordinate out of range");
    index += static_cast<long long>(eps - 1) * weight;
    weight *= d;
    if (weight > kMaxIterateEdges) throw std::invalid_argument("iterate tuple too long");
  }
  return static_cast<int>(index + 1);
}

std::vector<int> iterate_tuple(int index, int d, int length) {
  long long size = checked_power(d, length);
  if (index < 1 || index > size) throw std::invalid_argument("iterate index out of range");
  std::vector<int> tuple(length);
  long long rest = index - 1;
  for (int i = 0; i < length; ++i) {
    tuple[i] = static_cast<int>(rest % d) + 1;
    rest /= d;
  }
  return tuple;
}

NormalizedDessin compose(const NormalizedDessin& outer, const NormalizedDessin& inner) {
  require_extra_clean(outer, "compose");
  require_extra_clean(inner, "compose");
  int df = outer.dessin().n_edges();
  int dg = inner.dessin().n_edges();
  if (static_cast<long long>(df) * dg > kMaxIterateEdges)
    throw std::invalid_argument("composite would be too large");
  int n = df * dg;

  const Perm& f0 = outer.dessin().s0();
  const Perm& f1 = outer.dessin().s1();
  const Perm& g0 = inner.dessin().s0();
  const Perm& g1 = inner.dessin().s1();
  int e0f = outer.mark0().rep, e1f = outer.mark1().rep;
  int e0g = inner.mark0().rep, e1g = inner.mark1().rep;

  auto idx = [dg](int eg, int ef) { return eg + (ef - 1) * dg; };

  std::vector<int> s0(n), s1(n);
  for (int ef = 1; ef <= df; ++ef) {
    for (int eg = 1; eg <= dg; ++eg) {
      s1[idx(eg, ef) - 1] = idx(eg, f1[ef]);
      if (ef == e0f)
        s0[idx(eg, ef) - 1] = idx(g0[eg], ef);
      else if (ef == e1f)
        s0[idx(eg, ef) - 1] = idx(g1[eg], ef);
      else
        s0[idx(eg, ef) - 1] = idx(eg, f0[ef]);
    }
  }
  TreeDessin d(n, Perm(n, std::move(s0)), Perm(n, std::move(s1)));
  return with_black_marks(std::move(d), idx(e0g, e0f), idx(e1g, e0f));
}

NormalizedDessin iterate_recursion(const NormalizedDessin& nd, int n) {
  require_extra_clean(nd, "iterate_recursion");
  if (n < 1) throw std::invalid_argument("iterate depth must be at least 1");
  if (n == 1) return nd;

  int d = nd.dessin().n_edges();
  long long size = checked_power(d, n);

  // 0-based image tables of the base rotations and of the current level.
  std::vector<long long> base0(d), base1(d);
  for (int e = 1; e <= d; ++e) {
    base0[e - 1] = nd.dessin().s0()[e] - 1;
    base1[e - 1] = nd.dessin().s1()[e] - 1;
  }
  long long e0 = nd.mark0().rep - 1;
  long long e1 = nd.mark1().rep - 1;

  std::vector<long long> prev0 = base0, prev1 = base1;
  long long width = d;
  for (int level = 2; level <= n; ++level) {
    long long next_width = width * d;
    std::vector<long long> cur0(next_width), cur1(next_width);
    for (long long q = 0; q < d; ++q) {
      long long off = q * width;
      for (long long p = 0; p < width; ++p) {
        cur1[off + p] = p + base1[q] * width;
        if (q == e0)
          cur0[off + p] = prev0[p] + off;
        else if (q == e1)
          cur0[off + p] = prev1[p] + off;
        else
          cur0[off + p] = p + base0[q] * width;
      }
    }
    prev0 = std::move(cur0);
    prev1 = std::move(cur1);
    width = next_width;
  }

  std::vector<int> s0(size), s1(size);
  for (long long i = 0; i < size; ++i) {
    s0[i] = static_cast<int>(prev0[i] + 1);
    s1[i] = static_cast<int>(prev1[i] + 1);
  }

  // mark0 sits on the all-e0 tuple, mark1 on (e1, e0, ..., e0).
  long long mark0 = 0, mark1 = e1 - e0, weight = 1;
  for (int i = 0; i < n; ++i) {
    mark0 += e0 * weight;
    weight *= d;
  }
  mark1 += mark0;

  TreeDessin out(static_cast<int>(size), Perm(static_cast<int>(size), std::move(s0)),
                 Perm(static_cast<int>(size), std::move(s1)));
  return with_black_marks(std::move(out), static_cast<int>(mark0 + 1),
                          static_cast<int>(mark1 + 1));
}

NormalizedDessin iterate_substitution(const NormalizedDessin& nd, int n) {
  require_extra_clean(nd, "iterate_substitution");
  if (n < 1) throw std::invalid_argument("iterate depth must be at least 1");
  checked_power(nd.dessin().n_edges(), n);

  const TreeDessin& base = nd.dessin();
  int d = base.n_edges();
  int e0b = nd.mark0().rep, e1b = nd.mark1().rep;

  NormalizedDessin current = nd;
  for (int level = 2; level <= n; ++level) {
    const TreeDessin& c = current.dessin();
    int nc = c.n_edges();
    int total = nc * d;
    auto label = [nc](int ce, int j) { return ce + (j - 1) * nc; };

    std::vector<int> s0(total), s1(total);
    for (int ce = 1; ce <= nc; ++ce) {
      for (int j = 1; j <= d; ++j) {
        s1[label(ce, j) - 1] = label(ce, base.s1()[j]);
        if (j == e0b)
          s0[label(ce, j) - 1] = label(c.s0()[ce], j);  // glued at black endpoints
        else if (j == e1b)
          s0[label(ce, j) - 1] = label(c.s1()[ce], j);  // old whites, recolored black
        else
          s0[label(ce, j) - 1] = label(ce, base.s0()[j]);
      }
    }
    TreeDessin next(total, Perm(total, std::move(s0)), Perm(total, std::move(s1)));
    current = with_black_marks(std::move(next), label(current.mark0().rep, e0b),
                               label(current.mark1().rep, e0b));
  }
  return current;
}

PermGroup monodromy(const TreeDessin& d) {
  ensure_valid(d);
  return PermGroup(d.n_edges(), {d.s0(), d.s1()});
}

Fingerprint fingerprint(const NormalizedDessin& nd, int depth) {
  if (depth < 1) throw std::invalid_argument("fingerprint depth must be at least 1");
  if (depth >= 2) require_extra_clean(nd, "fingerprint at depth >= 2");

  Fingerprint fp;
  fp.degree = nd.dessin().n_edges();
  for (const auto& [v, val] : vertices(nd.dessin()))
    (v.color == Color::Black ? fp.black_valencies : fp.white_valencies).push_back(val);
  std::sort(fp.black_valencies.begin(), fp.black_valencies.end());
  std::sort(fp.white_valencies.begin(), fp.white_valencies.end());

  fp.mon_orders.push_back(monodromy(nd.dessin()).order());
  for (int k = 2; k <= depth; ++k)
    fp.mon_orders.push_back(monodromy(iterate_recursion(nd, k).dessin()).order());
  return fp;
}

}  // namespace dessins
