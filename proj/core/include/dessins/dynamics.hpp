#pragma once

#include <vector>

#include "dessins/perm_group.hpp"
#include "dessins/tree_dessin.hpp"

namespace dessins {

/// Which marked point each mark maps to under the covering (0 if the mark
/// is black, 1 if white), with the local degrees at the marks.
struct FiberClass {
  int g0;
  int g1;
  int localdeg0;
  int localdeg1;

  friend bool operator==(const FiberClass&, const FiberClass&) = default;
};

/// Requires degree >= 3.
FiberClass fiber_class(const NormalizedDessin& nd);

/// Edges of an n-fold iterate are tuples over the base edge set, first
/// coordinate finest.  index = 1 + sum (eps_i - 1) d^(i-1).
int iterate_index(const std::vector<int>& tuple, int d);
std::vector<int> iterate_tuple(int index, int d, int length);

/// Monodromy of the composite cover outer-after-inner on edge pairs
/// (inner edge, outer edge).  Both factors must be extra-clean of degree
/// at least 3.
NormalizedDessin compose(const NormalizedDessin& outer, const NormalizedDessin& inner);

/// n-th iterate by the coordinate recursion: the new s1 acts on the last
/// coordinate; the new s0 acts on the last coordinate away from the marked
/// edges and defers to the (n-1)-fold s1 / s0 on the prefix over them.
/// Requires an extra-clean nd of degree at least 3 and n >= 1; n = 1
/// returns nd unchanged.
NormalizedDessin iterate_recursion(const NormalizedDessin& nd, int n);

/// Same dessin built geometrically: every edge of the (n-1)-st iterate is
/// replaced by a copy of the base, the copy's mark0 glued to the black
/// endpoint and its mark1 to the white endpoint.
NormalizedDessin iterate_substitution(const NormalizedDessin& nd, int n);

/// The group generated by the two rotations.  Valid dessins only; the
/// dessin need not be clean.
PermGroup monodromy(const TreeDessin& d);

/// Galois-orbit invariants: degree, valence multisets, and the monodromy
/// orders of the first `depth` iterates.
struct Fingerprint {
  int degree = 0;
  std::vector<int> black_valencies;
  std::vector<int> white_valencies;
  std::vector<BigInt> mon_orders;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// depth >= 2 requires an extra-clean nd; depth 1 works for any
/// normalized dessin.
Fingerprint fingerprint(const NormalizedDessin& nd, int depth);

}  // namespace dessins
