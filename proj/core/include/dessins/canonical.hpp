#pragma once

#include <vector>

#include "dessins/tree_dessin.hpp"

namespace dessins {

/// A dessin relabeled into its canonical edge numbering, together with the
/// relabeling that got it there (old edge -> new edge).
struct CanonicalDessin {
  TreeDessin dessin;
  Perm relabeling;
};

struct CanonicalNormalized {
  NormalizedDessin dessin;
  Perm relabeling;
};

/// Relabels edges breadth-first (applying s0 then s1) from every base edge
/// and keeps the lexicographically smallest (s0', s1') image pair.  Two
/// valid dessins are isomorphic iff their canonical forms are equal.
CanonicalDessin canonical_form(const TreeDessin& d);

/// Same minimization with the marked pair appended to the comparison key,
/// so the result decides normalized-dessin isomorphism.
CanonicalNormalized canonical_form_normalized(const NormalizedDessin& nd);

/// Comparison key of the canonical form: the concatenated image tables,
/// plus (color, rep) of both marks in the normalized case.  Equal keys on
/// equal edge counts mean isomorphic; keys also give the deterministic
/// enumeration order.
std::vector<int> canonical_key(const TreeDessin& d);
std::vector<int> canonical_key(const NormalizedDessin& nd);

bool isomorphic(const TreeDessin& a, const TreeDessin& b);
bool isomorphic(const NormalizedDessin& a, const NormalizedDessin& b);

}  // namespace dessins
